"""Exception hierarchy shared by every module.

Each class carries a short machine-readable ``code`` that the command line
front end prints and maps onto an exit status.
"""


class HyperDPError(Exception):
    code = "error"


# input hygiene
class InvalidHypergraph(HyperDPError, ValueError):
    code = "invalid_hypergraph"


class EmptyVertexSet(InvalidHypergraph):
    code = "empty_vertex_set"


class OutOfRangeVertex(InvalidHypergraph):
    code = "out_of_range_vertex"


class DuplicateEdge(InvalidHypergraph):
    code = "duplicate_edge"


class EdgeContainment(InvalidHypergraph):
    code = "edge_containment"


class EdgeTooSmall(InvalidHypergraph):
    code = "edge_too_small"


class IndexOutOfRange(HyperDPError, IndexError):
    code = "index_out_of_range"


class DomainError(HyperDPError, ValueError):
    code = "domain_error"


class NotUniform(DomainError):
    code = "not_uniform"


class BadParameters(DomainError):
    code = "bad_parameters"


class InvalidConfig(HyperDPError, ValueError):
    code = "invalid_config"


class ResourceLimit(HyperDPError):
    """Raised when an enumeration would exceed the configured budget."""

    code = "resource_limit"

    def __init__(self, required, budget, what="enumeration"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs about {required} elementary checks, "
            f"budget is {budget}"
        )


class NonIntegralCoefficient(HyperDPError, ArithmeticError):
    code = "non_integral_coefficient"


# covers
class InvalidCover(HyperDPError, ValueError):
    code = "invalid_cover"


class DomainNotAnEdge(InvalidCover):
    code = "domain_not_an_edge"


class DisjointnessViolation(InvalidCover):
    code = "disjointness_violation"


class TooManyMapsOnEdge(InvalidCover):
    code = "too_many_maps_on_edge"


class NotFull(InvalidCover):
    code = "not_full"


class VerificationFailure(HyperDPError, AssertionError):
    code = "verification_failure"
