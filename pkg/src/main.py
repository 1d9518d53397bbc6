"""
Pentavalent Graph Toolkit - FastAPI Application

Provides REST endpoints for constructing, analyzing and classifying
pentavalent symmetric graphs of order 2p^n.
"""

# Load environment variables from .env file BEFORE any other imports
from dotenv import load_dotenv
load_dotenv()

from contextlib import asynccontextmanager
from fastapi import FastAPI, Query, Response, HTTPException
from fastapi.responses import HTMLResponse
from fastapi.middleware.cors import CORSMiddleware
from typing import Optional
import math
import threading
import time

from .exceptions import ToolkitError
from .graphs.constructions import FamilyId, GD_FAMILIES, RECOGNITION_ORDER
from .log import get_logger
from .reports import schema_documents
from .types import VerifyResponseDict
from .services import AnalysisService, VerificationService
from . import config

logger = get_logger(__name__)

# Initialize services
analysis_service = AnalysisService()
verification_service = VerificationService(analysis_service)


# ============================================================================
# VERIFY COOLDOWN
# ============================================================================

class VerifyCooldown:
    """At most one verification start per cooldown window."""

    def __init__(self, cooldown_seconds: int = 300):
        self.cooldown_seconds = cooldown_seconds
        self._started_at: Optional[float] = None
        self._lock = threading.Lock()

    def try_acquire(self) -> tuple[bool, int]:
        """(True, 0) and open a new window, or (False, whole seconds left)."""
        with self._lock:
            now = time.monotonic()
            if self._started_at is not None:
                left = self.cooldown_seconds - (now - self._started_at)
                if left > 0:
                    return False, math.ceil(left)
            self._started_at = now
            return True, 0

    def reset(self) -> None:
        """Close the window; used when no run was started."""
        with self._lock:
            self._started_at = None


verify_cooldown = VerifyCooldown(cooldown_seconds=config.VERIFY_COOLDOWN_SECONDS)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Startup and shutdown events."""
    logger.info(f"[*] Aut search guard: {config.AUT_MAX_VERTICES} vertices")
    logger.info(f"[*] Element budget: {config.ELEMENT_BUDGET}")
    logger.info("[*] App is ready.")

    yield

    logger.info("[*] Shutting down...")


app = FastAPI(
    title="Pentavalent Graph Toolkit",
    description="Symmetric pentavalent graphs of order 2p^n and their voltage covers",
    version="1.0.0",
    lifespan=lifespan
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _domain_error(e: ToolkitError) -> HTTPException:
    return HTTPException(status_code=422, detail={"error": type(e).__name__, "detail": str(e)})


@app.get("/", response_class=HTMLResponse)
async def home():
    """Index of the API."""
    return HTMLResponse(
        content="""
        <html>
        <head><title>Pentavalent Graph Toolkit</title></head>
        <body style="font-family: sans-serif; padding: 40px;">
            <h1>Pentavalent Graph Toolkit</h1>
            <h2>API Endpoints:</h2>
            <ul>
                <li><a href="/api/families">GET /api/families</a> - Graph families</li>
                <li><a href="/api/construct?family=K6">GET /api/construct</a> - Edge list</li>
                <li><a href="/api/analyze?family=K6">GET /api/analyze</a> - Symmetry report</li>
                <li><a href="/api/classify?p=11&amp;n=2">GET /api/classify</a> - Cover classes</li>
                <li><a href="/api/quotient?family=CGD1(5^2)">GET /api/quotient</a> - Quotient chain</li>
                <li><a href="/api/census?p=11">GET /api/census</a> - Order 2p^2 census</li>
                <li><a href="/api/schemas">GET /api/schemas</a> - Report schemas</li>
                <li><a href="/docs">API Documentation</a></li>
            </ul>
        </body>
        </html>
        """,
        status_code=200
    )


@app.get("/api/families")
async def get_families():
    """List family ids, the generalized dihedral ones, and the recognition order."""
    return {
        "families": [f.value for f in FamilyId],
        "gd_families": [f.value for f in GD_FAMILIES],
        "recognition_order": [f.value for f in RECOGNITION_ORDER],
    }


@app.get("/api/construct")
def construct(
    family: str = Query(..., description='Family id or instance, e.g. "CGD(p^3)" or "CD(11)"'),
    p: Optional[int] = Query(None, description="Prime, or n for the cube families"),
    ell: Optional[int] = Query(None, description="Order-5 unit override"),
    lam: Optional[int] = Query(None, description="Square root of 5 override"),
):
    """Edge list of a family member in the text format shared with the CLI."""
    try:
        ng = analysis_service.named(family, p, ell=ell, lam=lam)
        return Response(content=ng.graph.to_edge_list_text(), media_type="text/plain; charset=utf-8")
    except ToolkitError as e:
        raise _domain_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/analyze")
def analyze(
    family: str = Query(..., description="Family id or instance"),
    p: Optional[int] = Query(None, description="Prime, or n for the cube families"),
    ell: Optional[int] = Query(None, description="Order-5 unit override"),
    lam: Optional[int] = Query(None, description="Square root of 5 override"),
):
    """Symmetry report: aut order, girth, s, stabilizer, basicness and quotient."""
    try:
        return analysis_service.analyze(family, p, ell=ell, lam=lam).model_dump(mode="json")
    except ToolkitError as e:
        raise _domain_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/classify")
def classify_covers(
    p: int = Query(..., description="Prime"),
    n: int = Query(..., ge=2, le=4, description="Rank of the covering group"),
    strategy: str = Query("brute", pattern="^(brute|analytic|both)$"),
):
    """Isomorphism classes of arc-transitive Z_p^n-covers of Dip_5."""
    try:
        return analysis_service.classify(p, n, strategy).model_dump(mode="json")
    except ToolkitError as e:
        raise _domain_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/quotient")
def quotient(
    family: str = Query(..., description="Family id or instance"),
    p: Optional[int] = Query(None, description="Prime"),
    ell: Optional[int] = Query(None),
    lam: Optional[int] = Query(None),
):
    """Normal quotients down to a basic graph, with the last one recognized."""
    try:
        return analysis_service.quotient(family, p, ell=ell, lam=lam).model_dump(mode="json")
    except ToolkitError as e:
        raise _domain_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/census")
def census(p: int = Query(..., description="Prime")):
    """Pentavalent symmetric graphs of order 2p^2 from the known families."""
    try:
        return analysis_service.census(p).model_dump(mode="json")
    except ToolkitError as e:
        raise _domain_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/schemas")
async def schemas():
    """JSON Schemas of every report document."""
    return schema_documents()


@app.post("/api/verify")
async def verify(deep: bool = Query(False, description="Include the large instances")):
    """
    Start a background run of the acceptance checks.

    Rate limited to once per VERIFY_COOLDOWN_SECONDS.
    """
    in_progress: VerifyResponseDict = {
        "status": "in_progress",
        "message": "Verification already in progress"
    }
    try:
        if verification_service.is_running():
            return in_progress

        allowed, wait_seconds = verify_cooldown.try_acquire()
        if not allowed:
            limited: VerifyResponseDict = {
                "status": "rate_limited",
                "message": f"Please wait {wait_seconds} seconds before verifying again",
                "retry_after": wait_seconds
            }
            return limited

        if verification_service.verify_async(deep):
            started: VerifyResponseDict = {
                "status": "started",
                "message": "Verification started in background."
            }
            return started
        verify_cooldown.reset()
        return in_progress

    except Exception as e:
        logger.error(f"[!] Error in /api/verify: {e}")
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/verify-status")
async def verify_status():
    """Check whether a verification run is in progress and the last results."""
    results = verification_service.get_last_results()
    return {
        "is_running": verification_service.is_running(),
        "last_error": verification_service.get_last_error(),
        "results": results.model_dump(mode="json") if results else None,
    }


@app.get("/health")
async def health():
    """Health check endpoint."""
    return {
        "status": "ok",
        "is_verifying": verification_service.is_running(),
        "cached_groups": len(analysis_service.cached_keys()),
    }


# Run with: uvicorn src.main:app --reload
if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=config.HOST, port=config.PORT)
