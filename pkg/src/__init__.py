# Pentavalent Graph Toolkit
