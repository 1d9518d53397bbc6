"""
Type definitions for the pentavalent graph toolkit.

TypedDicts for the plain-dict forms of voltages and cover classes, and for
the /api/verify response.
"""

from typing import TypedDict, Optional, List


class VoltageDict(TypedDict):
    """T-reduced voltage assignment on Dip_5."""
    p: int
    n: int
    zeta: List[List[int]]


class CoverClassDict(TypedDict):
    """One isomorphism class of arc-transitive Dip_5 covers."""
    representative: VoltageDict
    lifting_group_order: int
    arc_transitive: bool
    matched_family: Optional[str]


class VerifyResponseDict(TypedDict, total=False):
    """Response from /api/verify endpoint."""
    status: str  # started, in_progress, rate_limited
    message: str
    retry_after: int  # Only present when rate_limited
