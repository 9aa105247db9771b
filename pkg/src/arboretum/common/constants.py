from enum import Enum


class DomainKind(Enum):
    FUNDAMENTAL = "fundamental"
    COMPLETE = "complete"
    BOTH = "both"
    NEITHER = "neither"


class Color(Enum):
    FIRST = 1
    SECOND = 2


class Orientation(Enum):
    POSITIVE = 1
    NEGATIVE = -1


class Verdict(Enum):
    ACCEPT = "accept"
    REJECT = "reject"


class CertificateKind(Enum):
    FREE_PRODUCT = "free-product"
    AMALGAM = "amalgam"
    KUROSH = "kurosh"
    RESTRICTION = "restriction"
    TREEING = "treeing"


class WitnessKind(Enum):
    CYCLE = "cycle"
    DISCONNECTED = "disconnected"


class Bullet(Enum):
    REPRESENTATIVES = "representatives"
    EXTRA_EDGE_SECTION = "extra-edge-section"
    STABILIZER_COMPATIBILITY = "stabilizer-compatibility"
    EDGE_PARTITION = "edge-partition"
    DIAGONAL_AVOIDANCE = "diagonal-avoidance"


class GeneratorKind(Enum):
    FREE = "free"
    AMALGAM = "amalgam"
    TREEING = "treeing"
    PERTURBED = "perturbed"


class ExitCode(Enum):
    ACCEPT = 0
    REJECT = 1
    INPUT_ERROR = 2
