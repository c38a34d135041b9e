from homimage.services.classification.classification_service import (
    ClassificationService,
    classification_service,
)
from homimage.services.classification.construction_service import (
    ConstructionService,
    construction_service,
)

__all__ = [
    "ClassificationService",
    "classification_service",
    "ConstructionService",
    "construction_service",
]
