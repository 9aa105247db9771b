from .fibered_space import FiberedSpace, FiberNumbering, Action, PartialSection, FiberedMorphism, SectionedSpace
from .canonical_spaces import canonical_left, quotient, right_quotient, right_quotient_symmetry, restrict_action
from .orbits import (validate_action, orbit_relation, stabilizer, exhaust_sections, rf_fundamental_domain,
                     is_homogeneous, is_saturating)
from .morphisms import induced_morphism, canonical_iso, stable_conjugacy_witness, extend_to_canonical
