"""
Bookkeeping of Chow ranks and Euler numbers along

    C  <-r-  T^  -->  T''  -->  T'  -->  T~

(T~ the toric variety of the Weyl fan, T' its blow up in the identity e,
T'' the blow up of T' in 12 disjoint rational curves, T^ the blow up of T''
in 16 disjoint surfaces, and r contracting 12 divisors P^1 x V to surfaces V.)

Blowing up a smooth center Z of codimension c adds sum_{j=1}^{c-1} A^{k-j}(Z)
to A^k and chi(Z)(c-1) to the Euler number; contracting P^1 x V -> V removes
A^{k-1}(V) from A^k and chi(V) from the Euler number.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

from . import toricfan

POINT, CURVE, SURFACE = "point", "curve", "surface"
_DIM = {POINT: 0, CURVE: 1, SURFACE: 2}


@dataclass(frozen=True)
class VarietyState:
    chow_ranks: tuple
    euler: int
    dim: int = 4

    def __post_init__(self):
        if len(self.chow_ranks) != self.dim + 1:
            raise ValueError("need %d Chow ranks" % (self.dim + 1))

    def check(self):
        """Smooth projective with algebraic cohomology: symmetric, ends 1, chi = sum."""
        r = self.chow_ranks
        problems = []
        if r[0] != 1 or r[-1] != 1:
            problems.append("a_0 or a_n is not 1")
        if tuple(r) != tuple(reversed(r)):
            problems.append("ranks are not symmetric")
        if sum(r) != self.euler:
            problems.append("euler %d != sum of ranks %d" % (self.euler, sum(r)))
        return problems


@dataclass(frozen=True)
class CenterData:
    kind: str
    count: int
    chow_ranks: tuple
    euler: int
    provenance: str = ""

    def __post_init__(self):
        if self.kind not in _DIM:
            raise ValueError("unknown center kind %r" % self.kind)
        if len(self.chow_ranks) != _DIM[self.kind] + 1:
            raise ValueError("a %s has %d Chow ranks" % (self.kind, _DIM[self.kind] + 1))
        if self.kind == CURVE and (self.euler != 2 or self.chow_ranks != (1, 1)):
            raise ValueError("curve centers must be rational")
        if self.kind == SURFACE and self.euler != sum(self.chow_ranks):
            raise ValueError("surface euler must be 1 + rk A^1 + 1")

    @property
    def dim(self) -> int:
        return _DIM[self.kind]


def blow_up(s: VarietyState, c: CenterData) -> VarietyState:
    if c.dim >= s.dim:
        raise ValueError("center must have smaller dimension")
    codim = s.dim - c.dim
    ranks = list(s.chow_ranks)
    for k in range(s.dim + 1):
        for j in range(1, codim):
            if 0 <= k - j <= c.dim:
                ranks[k] += c.count * c.chow_ranks[k - j]
    return VarietyState(tuple(ranks), s.euler + c.count * c.euler * (codim - 1), s.dim)


def contract(s: VarietyState, c: CenterData) -> VarietyState:
    """Contract `count` divisors P^1 x V onto copies of V (c describes V)."""
    ranks = list(s.chow_ranks)
    for k in range(1, s.dim + 1):
        if 0 <= k - 1 <= c.dim:
            ranks[k] -= c.count * c.chow_ranks[k - 1]
    return VarietyState(tuple(ranks), s.euler - c.count * c.euler, s.dim)


# milestones (rk A^1, rk A^2) quoted for each stage
MILESTONES = {
    "T~": (44, 102),
    "T'": (45, 103),
    "T''": (57, 127),
    "T^": (73, 207),
    "C": (61, 147),
}


@dataclass
class Stage:
    name: str
    operation: str
    center: dict | None
    state: VarietyState

    def as_dict(self) -> dict:
        d = {"stage": self.name, "operation": self.operation,
             "chow_ranks": list(self.state.chow_ranks), "euler": self.state.euler}
        if self.center:
            d["center"] = self.center
        return d


@dataclass
class PipelineResult:
    final: VarietyState
    trace: list = field(default_factory=list)


class MilestoneMismatch(AssertionError):
    pass


def surface_center() -> CenterData:
    """S_i'': the toric surface S_i (from its fan) blown up in the point e."""
    ranks = {toricfan.chow_ranks(sf) for _pair, sf in toricfan.surface_fans()}
    if len(ranks) != 1:
        raise MilestoneMismatch("the 16 surfaces have different Chow ranks: %s" % ranks)
    r = ranks.pop()
    blown = (r[0], r[1] + 1, r[2])
    return CenterData(SURFACE, 16, blown, sum(blown),
                      "fan of each S_i (rk A^1 = %d) plus the exceptional curve over e" % r[1])


def run_naruki_pipeline() -> PipelineResult:
    f = toricfan.build_weyl_fan()
    s = VarietyState(toricfan.chow_ranks(f), toricfan.euler(f))
    trace = [Stage("T~", "toric variety of the Weyl fan", None, s)]
    steps = [
        ("T'", "blow up", CenterData(POINT, 1, (1,), 1, "identity e of the torus")),
        ("T''", "blow up", CenterData(CURVE, 12, (1, 1), 2, "12 disjoint rational curves C_j' (stated)")),
        ("T^", "blow up", surface_center()),
        ("C", "contract", CenterData(SURFACE, 12, (1, 5, 1), 7,
                                      "V = P^2 blown up in 4 points (stated), divisors P^1 x V")),
    ]
    for name, op, c in steps:
        s = blow_up(s, c) if op == "blow up" else contract(s, c)
        trace.append(Stage(name, op, asdict(c), s))
    for st in trace:
        got = st.state.chow_ranks[1:3]
        if got != MILESTONES[st.name]:
            raise MilestoneMismatch("%s: ranks A^1, A^2 = %s, expected %s"
                                    % (st.name, got, MILESTONES[st.name]))
        bad = st.state.check()
        if bad:
            raise MilestoneMismatch("%s: %s" % (st.name, "; ".join(bad)))
    return PipelineResult(s, trace)


def render_trace(result: PipelineResult, fmt: str = "markdown") -> str:
    if fmt == "json":
        import json
        return json.dumps([st.as_dict() for st in result.trace], indent=1)
    lines = ["| stage | operation | center | ranks | euler |",
             "|---|---|---|---|---|"]
    for st in result.trace:
        c = ""
        if st.center:
            c = "%d x %s %s" % (st.center["count"], st.center["kind"],
                                tuple(st.center["chow_ranks"]))
        lines.append("| %s | %s | %s | %s | %d |" % (st.name, st.operation, c,
                                                     tuple(st.state.chow_ranks), st.state.euler))
    return "\n".join(lines) + "\n"
