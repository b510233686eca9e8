"""Closed-form bounds on ``sat(n, H, F)`` as exact rationals.

Each report says whether a bound holds at every admissible ``n`` (``exact``)
or only for large ``n`` with lower-order terms dropped (``asymptotic``).
Only exact bounds may be compared with oracle values.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial

from .counting import rooted_pair_count
from .graph import Graph, independence_number


class BoundRangeError(ValueError):
    """Parameters outside a bound's stated validity range."""


def falling_factorial(m: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= m - i
    return out


@dataclass
class BoundReport:
    case: str
    params: dict
    lower: Fraction | None = None
    upper: Fraction | None = None
    lower_exact: bool = True
    upper_exact: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        d = asdict(self)
        for key in ("lower", "upper"):
            v = d[key]
            d[key] = None if v is None else str(v)
        return json.dumps(d)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BoundRangeError(message)


def ehm(n: int, s: int) -> BoundReport:
    _require(s >= 3, "s >= 3")
    _require(n >= s - 2, "n >= s - 2")
    v = Fraction((s - 2) * (n - s + 2) + comb(s - 2, 2))
    return BoundReport("EHM", {"n": n, "s": s}, v, v, notes=["sat(n, K_s): lower = upper"])


def kr_ks(n: int, r: int, s: int) -> BoundReport:
    _require(s > r >= 3, "s > r >= 3")
    _require(n >= s - 2, "n >= s - 2")
    c1 = comb(s - 2, r - 1)
    upper = Fraction((n - s + 2) * c1 + comb(s - 2, r))
    first = Fraction(c1, r - 1) * n - 2 * c1
    second = Fraction(c1 + comb(s - 3, r - 2), r) * n
    return BoundReport(
        "KrKs",
        {"n": n, "r": r, "s": s},
        max(first, second),
        upper,
        lower_exact=False,
        notes=["lower bound holds only for n beyond an unspecified n_{s,r}"],
    )


def quad_lb(n: int, h: Graph, s: int, h1: int | None = None, h2: int | None = None) -> BoundReport:
    _require(s >= 3, "s >= 3")
    _require(h.n <= s, "H has at most s vertices")
    nonedges = h.nonedges()
    _require(bool(nonedges), "H is not complete")
    if h1 is None or h2 is None:
        h1, h2 = nonedges[0]
    _require(not h.has_edge(h1, h2) and h1 != h2, "h1 h2 is a nonedge of H")
    f = rooted_pair_count(h, h1, h2, s)
    lower = f * (Fraction(n * n, 2 * (s - 1)) - Fraction(n, 2))
    return BoundReport(
        "QuadLB",
        {"n": n, "s": s, "h1": h1, "h2": h2, "f": f},
        lower,
        None,
        notes=[f"f_(h1,h2)(H) = {f}"],
    )


def c4_k4(n: int) -> BoundReport:
    _require(n >= 4, "n >= 4")
    return BoundReport(
        "C4K4",
        {"n": n},
        None,
        Fraction(comb(n - 2, 2)),
        notes=["lower bound C(n,2) - n^(5/3+delta) is asymptotic and not evaluated"],
    )


def cr_ks(n: int, r: int, s: int) -> BoundReport:
    """Leading terms only: both sides carry unspecified ``o(n^k)`` corrections."""
    _require(s >= 5, "s >= 5")
    _require(3 <= r <= 2 * s - 4, "3 <= r <= 2s - 4")
    k = r // 2
    nk = Fraction(n) ** k
    if r % 2 == 0:
        lo = Fraction(falling_factorial(s - 2, k), 4 * k)
        hi = Fraction(falling_factorial(s - 2, k), 2 * k)
    else:
        lo = Fraction(
            falling_factorial(s - 2, k + 1) * factorial(k - 2),
            r * (r - 3) * falling_factorial(r, k) * (s - 1),
        ) if r > 3 else None
        hi = Fraction(falling_factorial(s - 2, k + 1), 2)
    notes = [f"k = {k}", f"upper coefficient {hi}"]
    if lo is None:
        notes.append("odd-r lower coefficient is undefined at r = 3 (factor r - 3 in the denominator)")
    else:
        notes.append(f"lower coefficient {lo}")
    return BoundReport(
        "CrKs",
        {"n": n, "r": r, "s": s, "k": k},
        None if lo is None else lo * nk,
        hi * nk,
        lower_exact=False,
        upper_exact=False,
        notes=notes,
    )


def c6_k5(n: int) -> BoundReport:
    _require(n >= 5, "n >= 5")
    return BoundReport(
        "C6K5",
        {"n": n},
        Fraction(n) ** 3,
        Fraction(6 * comb(n - 3, 3)),
        lower_exact=False,
        notes=["lower bound is (1 - o(1)) n^3; only the leading term is shown"],
    )


def kt_count(n: int, r: int, f: Graph) -> BoundReport:
    _require(r >= 2, "r >= 2")
    _require(f.num_edges() > 0, "F has an edge")
    _require(n >= f.n, "n >= |V(F)|")
    a = independence_number(f)
    v = Fraction(n * comb(f.n - 2, r - 1) + comb(f.n - a - 1, r))
    return BoundReport(
        "KTcount",
        {"n": n, "r": r, "F_vertices": f.n, "alpha": a},
        None,
        v,
        notes=["bound on K_r copies in the greedy clique-plus-independent-set construction"],
    )


def k3_c4(n: int) -> BoundReport:
    _require(n >= 4, "n >= 4")
    return BoundReport("K3C4", {"n": n}, None, Fraction((n - 1) // 2),
                       notes=["dominating vertex plus a maximum matching"])


def c4_c6(t: int) -> BoundReport:
    _require(t >= 1, "t >= 1")
    return BoundReport("C4C6", {"n": 10 * t + 1, "t": t}, None, Fraction(2 * t),
                       notes=["t copies of an 11-vertex builder with two 4-cycles"])


def k3_k4(n: int) -> BoundReport:
    _require(n >= 7, "n >= 7")
    v = Fraction(n - 2)
    return BoundReport("K3K4", {"n": n}, v, v)


CASES = {
    "EHM": (ehm, ("n", "s")),
    "KrKs": (kr_ks, ("n", "r", "s")),
    "QuadLB": (quad_lb, ("n", "h", "s")),
    "C4K4": (c4_k4, ("n",)),
    "CrKs": (cr_ks, ("n", "r", "s")),
    "C6K5": (c6_k5, ("n",)),
    "KTcount": (kt_count, ("n", "r", "f")),
    "K3C4": (k3_c4, ("n",)),
    "C4C6": (c4_c6, ("t",)),
    "K3K4": (k3_k4, ("n",)),
}


def evaluate_bound(case: str, **params) -> BoundReport:
    if case not in CASES:
        raise BoundRangeError(f"unknown case {case!r}; choose from {sorted(CASES)}")
    fn, names = CASES[case]
    # pattern parameters may be spelled H and F
    params = {k.lower() if k in ("H", "F") else k: v for k, v in params.items()}
    missing = [p for p in names if p not in params]
    if missing:
        raise BoundRangeError(f"{case} needs parameters {missing}")
    return fn(**params)


# (result, hypothesis) rows of the summary table
SUMMARY_ROWS = [
    ("sat(n,K_r,F) = O(n)", "n >= 1, r >= 2"),
    ("sat(n,H,K_s) = Omega(n^2)", "H != K_s, |V(H)| = s >= 3"),
    ("sat(n,K_r,K_s) = Theta(n)", "s > r >= 3"),
    ("sat(n,K_3,K_4) = n-2", "n >= 7"),
    ("sat(n,C_4,K_4) ~ n^2/2", ""),
    ("sat(n,C_r,K_s) = Theta(n^floor(r/2))", "s >= 5, r <= 2s-4"),
    ("sat(n,C_6,K_5) ~ n^3", ""),
    ("sat(n,K_3,C_k) = 0", "k >= 5, n >= 2k+2"),
    ("sat(n,C_4,C_k) = 0", "n >= 111, k in {7,8,9,10}"),
    ("sat(n,C_2l,C_2k) = 0", "l >= k"),
    ("sat(n,C_2l,C_2k) = O_{k,l}(n)", "l < k"),
    ("sat(n,H,C_{2k+1}) = 0", "n >= 2k+2 >= 4, H not bipartite"),
    ("sat(n,C_t,C_k) = 0", "n >= t >= k >= 3"),
    ("sat(m(r-1)+1,C_t,C_k) = 0", "t >= r+1, 2r-2 >= k >= r+1"),
    ("sat(n,K_3,C_4) <= floor((n-1)/2)", "n >= 4"),
    ("sat(10t+1,C_4,C_6) <= 2t", "t >= 1"),
]


def summary_table(n: int, r: int = 3, s: int = 5) -> list[dict]:
    """The summary rows with whichever closed forms apply evaluated at ``(n, r, s)``."""
    evals = {
        3: lambda: kr_ks(n, r, s),
        4: lambda: k3_k4(n),
        5: lambda: c4_k4(n),
        6: lambda: cr_ks(n, 6, s),
        7: lambda: c6_k5(n),
        15: lambda: k3_c4(n),
    }
    out = []
    for i, (result, hyp) in enumerate(SUMMARY_ROWS, start=1):
        row = {"row": i, "result": result, "hypothesis": hyp, "lower": None, "upper": None}
        if i in evals:
            try:
                rep = evals[i]()
                row["lower"] = None if rep.lower is None else str(rep.lower)
                row["upper"] = None if rep.upper is None else str(rep.upper)
            except BoundRangeError as exc:
                row["note"] = f"not evaluated: {exc}"
        out.append(row)
    return out
