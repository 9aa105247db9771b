from .finite_space import FiniteSpace, PointSet
from .equiv_relation import (EquivRelation, relation_generated_by, saturate, classify_domain, fundamental_domain,
                             join, intersect, restrict, is_subrelation)
from .partial_iso import PartialIso, invert, compose, conjugate, push_forward, pseudogroup_member
from .graphing import Graphing, Treeing, spanning_treeing
