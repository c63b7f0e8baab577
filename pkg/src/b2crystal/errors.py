"""Exception types shared across the package."""


class UnsupportedPair(ValueError):
    """Rank-2 restriction of a Cartan matrix is outside the supported list."""


class DuplicateEdge(ValueError):
    """Adding an edge would give a vertex two arrows of one color."""


class NonTerminating(RuntimeError):
    """A monochromatic walk exceeded the vertex count (cycle)."""


class UndefinedStep(ValueError):
    """A Kashiwara step required by a computation does not exist."""


class InconsistentWeight(ValueError):
    """Two paths from the maximum element carry different color multisets."""

    def __init__(self, vertex, first, second):
        self.vertex = vertex
        self.first = dict(first)
        self.second = dict(second)
        super().__init__(
            f"vertex {vertex}: conflicting path multisets {self.first} vs {self.second}"
        )


class BudgetExceeded(RuntimeError):
    """Generation or synthesis outgrew its configured vertex/layer budget."""


class HypothesisNotMet(ValueError):
    """Closed-form corollary evaluated outside its hypothesis domain."""


class MembershipViolation(RuntimeError):
    """A generated vertex failed the highest-weight membership predicate."""


class SynthesisInconsistency(RuntimeError):
    """Axiom-driven synthesis produced contradictory state."""


class PrereqFailed(ValueError):
    """Isomorphism construction input failed its preconditions."""


class NotIsomorphic(ValueError):
    """The layered isomorphism construction broke down."""

    def __init__(self, layer, detail):
        self.layer = layer
        self.detail = detail
        super().__init__(f"layer {layer}: {detail}")
