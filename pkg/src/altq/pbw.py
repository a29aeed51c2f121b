"""PBW monomial census against the Hilbert series of the alternating algebra."""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import G, GenSymbol, Gt, Kind, W
from .report import CheckReport

__all__ = ["BiSeries", "hilbert_phi", "pbw_generators", "pbw_monomials", "census", "check_pbw", "ORDERS"]


@dataclass
class BiSeries:
    """Coefficients d[i, j] for i + j <= max_total_degree."""

    max_total_degree: int
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, ij) -> int:
        return self.coeffs.get(tuple(ij), 0)

    def grid(self) -> dict:
        n = self.max_total_degree
        return {(i, j): self[i, j] for i in range(n + 1) for j in range(n + 1 - i)}

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.max_total_degree == other.max_total_degree and self.grid() == other.grid()

    def is_symmetric(self) -> bool:
        g = self.grid()
        return all(g[i, j] == g[j, i] for (i, j) in g)


def _mul_geometric(coeffs: dict, step: tuple[int, int], n: int) -> dict:
    """Multiply by 1/(1 - lambda^a mu^b), truncating at total degree n."""
    a, b = step
    out = dict(coeffs)
    # in-place prefix sums along the step direction, lowest degree first
    keys = sorted({(i, j) for i in range(n + 1) for j in range(n + 1 - i)}, key=lambda ij: (ij[0] + ij[1], ij))
    for (i, j) in keys:
        prev = (i - a, j - b)
        if prev[0] >= 0 and prev[1] >= 0:
            out[(i, j)] = out.get((i, j), 0) + out.get(prev, 0)
    return {k: v for k, v in out.items() if v}


def hilbert_phi(max_total_degree: int) -> BiSeries:
    """Phi = H * Z expanded up to total degree ``max_total_degree``."""
    n = max_total_degree
    if n < 0:
        raise ValueError("max_total_degree must be >= 0")
    coeffs = {(0, 0): 1}
    for l in range(1, n + 1):
        steps = [(l, l - 1), (l - 1, l), (l, l), (l, l)]  # the last factor is Z
        for st in steps:
            if st[0] + st[1] <= n:
                coeffs = _mul_geometric(coeffs, st, n)
    return BiSeries(n, coeffs)


# the standard linear orders; classes are compared first, then indices
ORDERS = {
    "Abar_q": (Kind.WM, Kind.G, Kind.GT, Kind.WP),
    "barA_q": (Kind.WM, Kind.G, Kind.WP),
    "barA_q_alt": (Kind.WP, Kind.G, Kind.WM),
}


def pbw_generators(max_total_degree: int, basis: str = "Abar_q") -> list[GenSymbol]:
    """Generators with total degree <= bound, sorted by the chosen linear order."""
    classes = ORDERS[basis]
    out = []
    for k in range(max_total_degree + 1):
        for sym in (W(-k), W(k + 1), G(k + 1), Gt(k + 1)):
            if sym.kind in classes and sum(sym.deg) <= max_total_degree:
                out.append(sym)
    rank = {kind: i for i, kind in enumerate(classes)}
    return sorted(out, key=lambda s: (rank[s.kind], s.index))


def pbw_monomials(max_total_degree: int, basis: str = "Abar_q"):
    """Yield every non-decreasing word (in the linear order) with total degree <= bound."""
    gens = pbw_generators(max_total_degree, basis)

    def rec(start: int, word: tuple, deg: tuple):
        yield word, deg
        for idx in range(start, len(gens)):
            s = gens[idx]
            d = (deg[0] + s.deg[0], deg[1] + s.deg[1])
            if d[0] + d[1] <= max_total_degree:
                yield from rec(idx, word + (s,), d)

    yield from rec(0, (), (0, 0))


def census(max_total_degree: int, basis: str = "Abar_q") -> BiSeries:
    if basis not in ORDERS:
        raise ValueError(f"unknown basis {basis!r}; choose from {sorted(ORDERS)}")
    counts: dict = {}
    for _, deg in pbw_monomials(max_total_degree, basis):
        counts[deg] = counts.get(deg, 0) + 1
    return BiSeries(max_total_degree, counts)


def check_pbw(max_total_degree: int = 8) -> CheckReport:
    phi = hilbert_phi(max_total_degree)
    full = census(max_total_degree, "Abar_q")
    bar1 = census(max_total_degree, "barA_q")
    bar2 = census(max_total_degree, "barA_q_alt")
    mism = sorted(k for k, v in phi.grid().items() if full.grid()[k] != v)
    return CheckReport.of(
        f"pbw.census.deg{max_total_degree}",
        not mism and phi.is_symmetric() and bar1 == bar2,
        "PBW census versus the Hilbert series",
        mismatches=[list(m) for m in mism],
        phi_symmetric=phi.is_symmetric(),
        d11=phi[1, 1],
        barA_orders_agree=bar1 == bar2,
        barA_d11=bar1[1, 1],
        phi_grid={f"{i},{j}": v for (i, j), v in sorted(phi.grid().items())},
    )
