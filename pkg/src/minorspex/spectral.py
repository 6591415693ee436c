"""Spectral radius, Perron vectors, the book closed form and eigenvalue bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from .graph import Graph, GraphError, bits, component_masks

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 1_000_000
COMPARE_EPS = 1e-9
EXACT_RECHECK_GAP = 1e-6


class ConvergenceError(ArithmeticError):
    """Power iteration did not reach the requested residual."""


@dataclass(frozen=True)
class SpectralCertificate:
    rho: float
    perron: tuple[float, ...]
    iterations: int
    residual: float

    @property
    def top_vertex(self) -> int:
        """u*: a vertex with the largest Perron entry (least id on ties)."""
        return max(range(len(self.perron)), key=lambda v: (self.perron[v], -v))


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: float
    rhs: float
    satisfied: bool
    slack: float
    equality: bool = False
    info: dict | None = None

    @classmethod
    def make(cls, name: str, lhs: float, rhs: float, eps: float = COMPARE_EPS, info: dict | None = None) -> BoundReport:
        return cls(name, lhs, rhs, lhs <= rhs + eps, rhs - lhs, abs(rhs - lhs) <= eps, info)


def adjacency_matrix(g: Graph, dtype=np.float64) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=dtype)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def _power_component(a: np.ndarray, tol: float, cap: int) -> tuple[float, np.ndarray, int, float]:
    k = a.shape[0]
    if k == 1:
        return 0.0, np.ones(1), 0, 0.0
    shifted = a + np.eye(k)
    x = np.full(k, 1.0 / math.sqrt(k))
    rho = 0.0
    for it in range(1, cap + 1):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            return rho, x, it, residual
    raise ConvergenceError(f"residual above {tol} after {cap} iterations")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iterations: int = MAX_ITERATIONS) -> SpectralCertificate:
    """Largest adjacency eigenvalue with a Perron vector supported on a maximising component."""
    if g.n < 1:
        raise GraphError("spectral radius needs at least one vertex")
    a = adjacency_matrix(g)
    best: tuple[float, list[int], np.ndarray] | None = None
    iterations = 0
    residual = 0.0
    for comp in component_masks(g):
        idx = bits(comp)
        rho, x, it, res = _power_component(a[np.ix_(idx, idx)], tol, max_iterations)
        iterations += it
        residual = max(residual, res)
        if best is None or rho > best[0] + tol:
            best = (rho, idx, x)
    assert best is not None
    rho, idx, x = best
    perron = np.zeros(g.n)
    perron[idx] = np.abs(x)
    return SpectralCertificate(rho, tuple(float(v) for v in perron), iterations, residual)


def spectral_radius_fast(g: Graph) -> float:
    """Dense symmetric eigensolve; used for bulk screening during searches."""
    if g.n == 0:
        raise GraphError("spectral radius needs at least one vertex")
    if g.m == 0:
        return 0.0
    return float(np.linalg.eigvalsh(adjacency_matrix(g))[-1])


def book_rho(gamma: int, n: int) -> float:
    """Closed form for rho(B_{gamma, n-gamma})."""
    if not 1 <= gamma < n:
        raise ValueError("book_rho needs 1 <= gamma < n")
    return (gamma - 1) / 2 + math.sqrt(gamma * n - (3 * gamma * gamma + 2 * gamma - 1) / 4)


def quadratic_upper_bound_check(rho: float, gamma: int, alpha: int, n: int) -> BoundReport:
    """(rho - gamma + 1)(rho - alpha) <= (n - gamma) gamma."""
    lhs = (rho - gamma + 1) * (rho - alpha)
    rhs = float((n - gamma) * gamma)
    explicit = math.sqrt(gamma * n) + (alpha + gamma - 1) / 2
    return BoundReport.make("quadratic_upper", lhs, rhs, info={"explicit_leading_terms": explicit})


def regular_bound_check(rho: float, s1: int, gamma: int, n: int) -> BoundReport:
    """rho^2 - (s1 + gamma - 2) rho <= gamma (n - gamma) - (gamma - 1)(s1 - 1)."""
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    lhs = rho * rho - (s1 + gamma - 2) * rho
    rhs = float(gamma * (n - gamma) - (gamma - 1) * (s1 - 1))
    return BoundReport.make("regular_join", lhs, rhs)


def edge_density_bound(h: Graph) -> int:
    """Per-vertex edge coefficient 2^(|H|+1) e(H) for H-minor-free graphs."""
    if h.n and min(h.degrees()) < 1:
        raise GraphError("pattern must have minimum degree at least 1")
    return 2 ** (h.n + 1) * h.m


def lambda_level_set(cert: SpectralCertificate, lam: float, c_family: int) -> list[int]:
    """Vertices whose Perron entry is at least (10 C)^(-lam) times the largest entry."""
    if lam <= 0:
        raise ValueError("lambda must be positive")
    x = cert.perron
    top = x[cert.top_vertex]
    threshold = (10 * c_family) ** (-lam) * top
    return [v for v in range(len(x)) if x[v] >= threshold]


def dominating_vertices(g: Graph) -> list[int]:
    full = g.full_mask
    return [v for v in range(g.n) if g.rows[v] | (1 << v) == full]


# ---------------------------------------------------------------- exact arithmetic


def characteristic_polynomial(g: Graph) -> list[int]:
    """Integer coefficients of det(xI - A), highest degree first (Faddeev-LeVerrier)."""
    n = g.n
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
        prod = [[0] * n for _ in range(n)]
        for i in range(n):
            row = prod[i]
            for t in bits(g.rows[i]):
                mt = m[t]
                for j in range(n):
                    row[j] += mt[j]
            row[i] += c
        m = prod
        tr = 0
        for i in range(n):
            for t in bits(g.rows[i]):
                tr += m[t][i]
        num = -tr
        if num % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = num // k
        coeffs.append(c)
    return coeffs


_X = sympy.Symbol("x")


def _poly(g: Graph) -> sympy.Poly:
    return sympy.Poly(characteristic_polynomial(g), _X, domain="ZZ")


def _top_interval(p: sympy.Poly) -> tuple[Fraction, Fraction]:
    ivs = p.intervals()
    a, b = ivs[-1][0]
    return Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))


def rho_interval(g: Graph, width: float = 1e-12) -> tuple[Fraction, Fraction]:
    """Rational isolating interval for the spectral radius, no wider than ``width``."""
    if g.m == 0:
        return Fraction(0), Fraction(0)
    p = _poly(g)
    a, b = _top_interval(p)
    a, b = p.refine_root(sympy.Rational(a.numerator, a.denominator), sympy.Rational(b.numerator, b.denominator), eps=sympy.Rational(str(width)))
    return Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))


def compare_rho_exact(g1: Graph, g2: Graph) -> int:
    """Sign of rho(g1) - rho(g2), decided in exact arithmetic."""
    if g1.m == 0 or g2.m == 0:
        r1 = 0 if g1.m == 0 else 1
        r2 = 0 if g2.m == 0 else 1
        return (r1 > r2) - (r1 < r2)
    p1, p2 = _poly(g1), _poly(g2)
    common = sympy.gcd(p1, p2)
    a1, b1 = _top_interval(p1)
    a2, b2 = _top_interval(p2)
    if common.degree() > 0:
        s = sympy.Rational
        hit1 = common.count_roots(s(a1.numerator, a1.denominator), s(b1.numerator, b1.denominator)) > 0
        hit2 = common.count_roots(s(a2.numerator, a2.denominator), s(b2.numerator, b2.denominator)) > 0
        # rho1 a root of p2 gives rho1 <= rho2 and vice versa
        if hit1 and hit2:
            return 0
    eps = Fraction(1, 2**20)
    while True:
        if b1 < a2:
            return -1
        if b2 < a1:
            return 1
        a1, b1 = _refine(p1, a1, b1, eps)
        a2, b2 = _refine(p2, a2, b2, eps)
        eps /= 2**20


def _refine(p: sympy.Poly, a: Fraction, b: Fraction, eps: Fraction) -> tuple[Fraction, Fraction]:
    s = sympy.Rational
    lo, hi = p.refine_root(s(a.numerator, a.denominator), s(b.numerator, b.denominator), eps=s(eps.numerator, eps.denominator))
    return Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))


def rho_ties_exact(graphs: Sequence[Graph]) -> list[list[int]]:
    """Group indices of ``graphs`` with exactly equal spectral radius."""
    groups: list[list[int]] = []
    for i, g in enumerate(graphs):
        for grp in groups:
            if compare_rho_exact(graphs[grp[0]], g) == 0:
                grp.append(i)
                break
        else:
            groups.append([i])
    return groups
