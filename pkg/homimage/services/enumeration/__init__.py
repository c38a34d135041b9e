from homimage.services.enumeration.enumeration_service import EnumerationService, enumeration_service
from homimage.services.enumeration.verification_service import VerificationService, verification_service

__all__ = ["EnumerationService", "enumeration_service", "VerificationService", "verification_service"]
