"""Fixed suite of dominating pairs used by the degree experiments and acceptance tests.

Weights are given by fundamental-weight coefficients.  Every pair here was
checked to satisfy ``lam >= mu`` before being frozen.
"""

from dataclasses import dataclass

from .rootsys import build_root_system


@dataclass(frozen=True)
class SuitePair:
    type_label: str
    rank: int
    lam_fw: tuple
    mu_fw: tuple

    def build(self):
        rs = build_root_system(self.type_label, self.rank)
        return rs, rs.from_dynkin(self.lam_fw), rs.from_dynkin(self.mu_fw)

    @property
    def name(self):
        fw = lambda v: ",".join(map(str, v))  # noqa: E731
        return f"{self.type_label}{self.rank}[{fw(self.lam_fw)}|{fw(self.mu_fw)}]"


def _p(t, r, lam, mu):
    return SuitePair(t, r, tuple(lam), tuple(mu))


DEGREE_SUITE = (
    _p("A", 1, (2,), (0,)),
    _p("A", 1, (3,), (1,)),
    _p("A", 1, (1,), (1,)),
    _p("A", 2, (1, 1), (0, 0)),
    _p("A", 2, (3, 0), (0, 0)),
    _p("A", 2, (2, 2), (1, 1)),
    _p("A", 2, (2, 1), (0, 2)),
    _p("A", 2, (2, 2), (2, 2)),
    _p("A", 3, (1, 0, 1), (0, 0, 0)),
    _p("A", 3, (2, 0, 2), (0, 2, 0)),
    _p("A", 3, (0, 2, 0), (0, 0, 0)),
    _p("A", 3, (1, 1, 1), (1, 1, 1)),
    _p("B", 2, (0, 2), (0, 0)),
    _p("B", 2, (1, 0), (0, 0)),
    _p("B", 2, (1, 1), (0, 1)),
    _p("B", 2, (2, 2), (0, 0)),
    _p("B", 2, (1, 0), (1, 0)),
    _p("B", 2, (0, 2), (1, 0)),
    _p("B", 3, (1, 0, 0), (0, 0, 0)),
    _p("B", 3, (0, 1, 0), (0, 0, 0)),
    _p("B", 3, (1, 0, 2), (1, 0, 0)),
    _p("B", 3, (1, 1, 1), (0, 0, 1)),
    _p("B", 3, (0, 0, 2), (0, 0, 0)),
    _p("C", 2, (2, 0), (0, 0)),
    _p("C", 2, (0, 1), (0, 1)),
    _p("C", 2, (2, 1), (0, 1)),
    _p("C", 3, (1, 1, 1), (0, 2, 0)),
    _p("C", 3, (0, 1, 0), (0, 0, 0)),
    _p("C", 3, (2, 0, 0), (0, 1, 0)),
    _p("C", 3, (1, 0, 1), (0, 1, 0)),
    _p("D", 4, (0, 1, 0, 0), (0, 0, 0, 0)),
    _p("D", 4, (1, 0, 0, 0), (1, 0, 0, 0)),
    _p("D", 4, (2, 0, 0, 0), (0, 1, 0, 0)),
    _p("D", 4, (1, 0, 1, 1), (0, 1, 0, 0)),
    _p("D", 4, (0, 0, 1, 1), (1, 0, 0, 0)),
    _p("D", 4, (1, 1, 1, 1), (0, 0, 0, 0)),
)

# G2 pairs for the informational probe of the formula beyond classical types
G2_PROBE = (
    _p("G2", 2, (1, 0), (0, 0)),
    _p("G2", 2, (0, 1), (0, 0)),
    _p("G2", 2, (1, 1), (0, 0)),
    _p("G2", 2, (0, 1), (1, 0)),
    _p("G2", 2, (2, 0), (0, 1)),
    _p("G2", 2, (1, 1), (1, 0)),
    _p("G2", 2, (1, 1), (1, 1)),
)
