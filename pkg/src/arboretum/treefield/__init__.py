from .graph_field import GraphField, ColoredTreeField, FiberWitness, is_treefield
from .graphing_field import from_graphing, free_product_treeing_field
from .bass_serre import bass_serre_free, bass_serre_amalgam, vertex_section, free_product_field, factor_edge_section
from .staged_sections import Piece, StagedSections
from .extraction import (Subforest, quasi_free_check, fundamental_subforest, contract, treeing_from_fd_section,
                         retraction_treeing, extract_treeing, union_treeing, subrelation_treeing,
                         amalgam_subrelation_treeing)
