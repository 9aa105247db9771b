from .reduced_tuple import ReducedTuple, is_reduced, find_closing_tuple, closing_tuple_from_cycle
from .product_verifier import (Accept, Reject, ProductVerdict, verify_free_product, check_free_product,
                               verify_amalgam, check_amalgam, stabilizer_decomposition)
from .graph_of_relations import RelationEdge, GraphOfRelations, RootedTreeOfRelations
from .desingularization import (ExtraEdge, Representation, Desingularization, BulletViolation,
                                representatives_forest, desingularize, validate_desingularization)
from .analysis import GeodesicAmalgam, GenerationSplit, geodesic_amalgam, generation_split
from .kurosh import (KuroshFactor, KuroshDecomposition, RestrictionDecomposition, kurosh, restrict_decomposition,
                     check_decomposition)
from .certificate_checker import CheckReport, check_product, check_treeing, check_kurosh, check_certificate
