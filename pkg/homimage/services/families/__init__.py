from homimage.services.families.family_service import FamilyService, family_service

__all__ = ["FamilyService", "family_service"]
