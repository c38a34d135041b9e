from homimage.services.decomposition.decomposition_service import (
    DecompositionService,
    decomposition_service,
)

__all__ = ["DecompositionService", "decomposition_service"]
