from homimage.services.homomorphism.hom_service import HomomorphismService, homomorphism_service

__all__ = ["HomomorphismService", "homomorphism_service"]
