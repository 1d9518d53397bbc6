from .analysis_service import AnalysisService
from .verification_service import VerificationService

__all__ = ["AnalysisService", "VerificationService"]
