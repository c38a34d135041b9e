from homimage.services.structures.structure_service import StructureService, structure_service
from homimage.services.structures.text_format import format_structure, parse_structure, to_dot

__all__ = ["StructureService", "structure_service", "format_structure", "parse_structure", "to_dot"]
