# Tests for the Pentavalent Graph Toolkit
