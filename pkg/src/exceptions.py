"""
Custom exceptions for the toolkit.

These exceptions provide clear error categories:
- ToolkitError: Base exception for all toolkit errors
- AlgebraError: Modular arithmetic and prime-field linear algebra
- GroupError: Permutation groups and generalized dihedral groups
- GraphError: Graph construction, metrics and edge-list parsing
- ConstructionError: Named families and Cayley graphs
- CoverError: Voltage assignments on the dipole and their lifts
- SymmetryError: Automorphism search, s-transitivity and basicness
- BudgetError: Desk-scale guards that refuse oversized work
"""


class ToolkitError(Exception):
    """Base exception for all toolkit errors."""
    pass


# =============================================================================
# CATEGORIES
# =============================================================================

class AlgebraError(ToolkitError):
    """Error in modular arithmetic or linear algebra."""
    pass


class GroupError(ToolkitError):
    """Error in a group computation."""
    pass


class GraphError(ToolkitError):
    """Error building or measuring a graph."""
    pass


class ConstructionError(ToolkitError):
    """Error constructing a named family or Cayley graph."""
    pass


class CoverError(ToolkitError):
    """Error in voltage-cover machinery."""
    pass


class SymmetryError(ToolkitError):
    """Error in automorphism or symmetry analysis."""
    pass


class BudgetError(ToolkitError):
    """Requested work exceeds a configured budget."""
    pass


# =============================================================================
# ALGEBRA
# =============================================================================

class NotAUnit(AlgebraError):
    """Residue is not invertible modulo the modulus."""
    pass


class SourcesDoNotSpan(AlgebraError):
    """Source vectors do not span the whole space."""
    pass


# =============================================================================
# GROUPS
# =============================================================================

class PointOutOfRange(GroupError):
    """Point is not in the permutation domain."""
    pass


class DegreeMismatch(GroupError):
    """Permutation degree differs from the group degree."""
    pass


class SeedNotInGroup(GroupError):
    """Normal closure seed is not an element of the group."""
    pass


class SpecMismatch(GroupError):
    """Elements belong to different generalized dihedral groups."""
    pass


class NotGenerating(GroupError):
    """Connection set does not generate the group."""
    pass


class TooLarge(BudgetError):
    """Object is too large for explicit enumeration."""
    pass


class BudgetExceeded(BudgetError):
    """Enumeration volume exceeds the configured budget."""
    pass


# =============================================================================
# GRAPHS
# =============================================================================

class LoopEdge(GraphError):
    """Edge joins a vertex to itself."""
    pass


class VertexOutOfRange(GraphError):
    """Edge endpoint is not a vertex."""
    pass


class Disconnected(GraphError):
    """Graph is not connected."""
    pass


class NotAPath(GraphError):
    """Vertex sequence is not a non-backtracking path."""
    pass


class IntraCellEdge(GraphError):
    """Partition cell contains an edge."""
    pass


class GraphFormatError(GraphError):
    """Edge-list text is malformed."""
    pass


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

class IdentityInS(ConstructionError):
    """Connection set contains the identity."""
    pass


class NotSymmetricSet(ConstructionError):
    """Connection set is not closed under inverses."""
    pass


class NoOrder5Element(ConstructionError):
    """No unit of multiplicative order 5 exists for the parameter."""
    pass


class NoSquareRootOf5(ConstructionError):
    """5 is not a square modulo the prime."""
    pass


class UnsupportedParameter(ConstructionError):
    """Parameter is outside the family's domain."""
    pass


class UnknownFamily(ConstructionError):
    """Family id cannot be parsed."""
    pass


# =============================================================================
# COVERS
# =============================================================================

class NotSpanning(CoverError):
    """Cotree voltages do not span the voltage group."""
    pass


class ParallelArcs(CoverError):
    """Two dipole arcs carry the same voltage."""
    pass


class NotALift(CoverError):
    """Matrix does not satisfy the lifting equations."""
    pass


# =============================================================================
# SYMMETRY
# =============================================================================

class NotVertexTransitive(SymmetryError):
    """Automorphism group is not transitive on vertices."""
    pass


class NotPentavalent(SymmetryError):
    """Graph is not 5-regular."""
    pass


class Unsupported(SymmetryError):
    """No available search tier can decide the question."""
    pass


class NotBipartite(SymmetryError):
    """Graph is not bipartite."""
    pass


class NotSemiregular(SymmetryError):
    """Group has a nontrivial point stabilizer."""
    pass


class NotAbelian(SymmetryError):
    """Group is not abelian."""
    pass


class OrbitsNotParts(SymmetryError):
    """Group orbits are not the two bipartition parts."""
    pass
