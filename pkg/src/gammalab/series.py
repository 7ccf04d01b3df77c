"""
Truncated formal power series in x with exact bivariate polynomial coefficients.

The generating function F(x) = sum_n A_n(s,t) x^n of the two-sided Eulerian
polynomials ties together the sum-indecomposable, skew-indecomposable and
simple permutations:

    F  = x + I+ F + st I- F + S(F)
    I+ = x + st I- F + S(F)
    I- = x + I+ F + S(F)

Solving the linear system gives I+ = F/(1+F), I- = F/(1+stF), and expressing
S through the compositional inverse of F yields, coefficientwise,

    simp_n(s,t) = -f_n^inv(s,t) + (-1)^(n-1) + (-st)^(n-1)      (n >= 4),

which computes the simple-permutation polynomials without enumerating S_n.
Every rational expression is realized as a truncated geometric series, so all
coefficients stay exact integer polynomials throughout.

`rsk_two_sided_eulerian` provides an independent route to A_n(s,t): descents
of a permutation match descents of its recording tableau and descents of the
inverse match those of the insertion tableau, so A_n(s,t) = sum over shapes
of D_shape(s) * D_shape(t), where D_shape counts standard Young tableaux by
descent number.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InversionError, ResourceBoundError
from .permutations import (
    MAX_ENUMERATION_N,
    eulerian_distribution,
    simple_distribution,
)
from .polys import ONE, ST, ZERO, BivarPoly

# The tableau route scales with the number of standard Young tableaux
# (~2.4M at n = 14), not with n!.
MAX_RSK_N = 14


class PowerSeries:
    """Coefficients c_0..c_N of a series truncated at order N.

    The series of interest here all have zero constant term; c_0 is carried
    anyway so that geometric expansions like 1/(1+F) stay in the same type.
    """

    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: list[BivarPoly] | None = None):
        if order < 1:
            raise ValueError("order must be at least 1")
        self.order = order
        c = list(coeffs) if coeffs is not None else []
        if len(c) > order + 1:
            raise ValueError(f"got {len(c)} coefficients for order {order}")
        c.extend([ZERO] * (order + 1 - len(c)))
        self._c = c

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls(order, [ZERO, ONE])

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls(order, [])

    def coeff(self, n: int) -> BivarPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self._c[n]

    def coefficients(self) -> list[BivarPoly]:
        return list(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.order == other.order and self._c == other._c
        return NotImplemented

    def json_form(self) -> dict:
        """{order: N, coefficients: [terms of c_1 .. c_N]}; c_0 omitted when zero."""
        out = {
            "order": self.order,
            "coefficients": [c.json_terms() for c in self._c[1:]],
        }
        if not self._c[0].is_zero():
            out["constant"] = self._c[0].json_terms()
        return out

    def __repr__(self) -> str:
        head = ", ".join(f"x^{n}: {c.text()}" for n, c in enumerate(self._c[:5]) if not c.is_zero())
        return f"PowerSeries(order={self.order}, {head}, ...)"

    def _check_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"mixed truncation orders {self.order} and {other.order}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(self.order, [a + b for a, b in zip(self._c, other._c)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(self.order, [a - b for a, b in zip(self._c, other._c)])

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.order, [-a for a in self._c])

    def __mul__(self, other: "PowerSeries | BivarPoly | int") -> "PowerSeries":
        if isinstance(other, (BivarPoly, int)):
            return PowerSeries(self.order, [a * other for a in self._c])
        self._check_order(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self._c):
            if a.is_zero():
                continue
            for j in range(0, n + 1 - i):
                b = other._c[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(n, out)

    __rmul__ = __mul__

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Substitute ``inner`` for x; requires inner to have no constant term."""
        self._check_order(inner)
        if not inner._c[0].is_zero():
            raise ValueError("composition requires a series with zero constant term")
        # Horner: c_0 + G*(c_1 + G*(c_2 + ...)).
        acc = PowerSeries.zero(self.order)
        for k in range(self.order, 0, -1):
            acc._c[0] = acc._c[0] + self._c[k]
            acc = acc * inner
        acc._c[0] = acc._c[0] + self._c[0]
        return acc


def geometric_inverse(y: PowerSeries) -> PowerSeries:
    """1/(1 + y) = sum_k (-y)^k, for y with zero constant term."""
    if not y._c[0].is_zero():
        raise ValueError("geometric expansion requires a series with zero constant term")
    acc = PowerSeries.zero(y.order)
    one = ONE
    for _ in range(y.order, -1, -1):
        acc = acc * -1 * y
        acc._c[0] = acc._c[0] + one
    return acc


# ---------------------------------------------------------------------------
# the Eulerian series and its tableau-based oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tableau_descent_vectors(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """For each partition shape of n, the counts of standard Young tableaux by
    descent number (an entry i is a descent when i+1 sits in a lower row).

    Computed by a growth-chain walk: add boxes one at a time, tracking the row
    of the last-added box and the running descent count.
    """
    states: dict[tuple[tuple[int, ...], int], dict[int, int]] = {((1,), 0): {0: 1}}
    for _ in range(n - 1):
        nxt: dict[tuple[tuple[int, ...], int], dict[int, int]] = {}
        for (shape, row), vec in states.items():
            rows = len(shape)
            for r in range(rows + 1):
                if r < rows:
                    if r > 0 and shape[r] >= shape[r - 1]:
                        continue
                    nshape = shape[:r] + (shape[r] + 1,) + shape[r + 1:]
                else:
                    nshape = shape + (1,)
                bump = 1 if r > row else 0
                target = nxt.setdefault((nshape, r), {})
                for d, c in vec.items():
                    target[d + bump] = target.get(d + bump, 0) + c
        states = nxt
    by_shape: dict[tuple[int, ...], dict[int, int]] = {}
    for (shape, _), vec in states.items():
        target = by_shape.setdefault(shape, {})
        for d, c in vec.items():
            target[d] = target.get(d, 0) + c
    return {
        shape: tuple(vec.get(d, 0) for d in range(max(vec) + 1))
        for shape, vec in by_shape.items()
    }


def rsk_two_sided_eulerian(n: int) -> BivarPoly:
    """A_n(s,t) as sum over shapes of D_shape(s) * D_shape(t)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_RSK_N:
        raise ResourceBoundError(f"tableau route is bounded at n = {MAX_RSK_N}")
    coeffs: dict[tuple[int, int], int] = {}
    for vec in _tableau_descent_vectors(n).values():
        for a, ca in enumerate(vec):
            if not ca:
                continue
            for b, cb in enumerate(vec):
                if cb:
                    key = (a, b)
                    coeffs[key] = coeffs.get(key, 0) + ca * cb
    return BivarPoly(coeffs)


def eulerian_series(
    N: int,
    method: str = "rsk",
    threads: int = 1,
    max_enum_n: int = MAX_ENUMERATION_N,
) -> PowerSeries:
    """F(x) with coefficient A_n(s,t) at x^n, by either route."""
    if method == "rsk":
        if N > MAX_RSK_N:
            raise ResourceBoundError(f"tableau route is bounded at order {MAX_RSK_N}")
        coeffs = [ZERO] + [rsk_two_sided_eulerian(n) for n in range(1, N + 1)]
    elif method == "enumerate":
        if N > max_enum_n:
            raise ResourceBoundError(
                f"full enumeration is bounded at order {max_enum_n}; use method='rsk'"
            )
        coeffs = [ZERO] + [
            eulerian_distribution(n, threads=threads, max_n=max_enum_n).poly
            for n in range(1, N + 1)
        ]
    else:
        raise ValueError(f"unknown method {method!r} (expected 'rsk' or 'enumerate')")
    return PowerSeries(N, coeffs)


# ---------------------------------------------------------------------------
# compositional inverse and the simple-permutation series
# ---------------------------------------------------------------------------

def functional_inverse(F: PowerSeries) -> PowerSeries:
    """The series G with F(G(x)) = G(F(x)) = x up to the truncation order.

    Requires a zero constant term and leading coefficient 1, which keeps all
    inverse coefficients in the polynomial ring.
    """
    if not F._c[0].is_zero():
        raise InversionError("series has a nonzero constant term")
    if F._c[1] != ONE:
        raise InversionError("leading coefficient must be exactly 1")
    N = F.order
    G = PowerSeries.x(N)
    for n in range(2, N + 1):
        # With g_n still unset, the x^n coefficient of F(G) is off by exactly g_n.
        G._c[n] = -F.compose(G).coeff(n)
    return G


def indecomposable_series(F: PowerSeries) -> tuple[PowerSeries, PowerSeries]:
    """(I+, I-) = (F/(1+F), F/(1+stF)) by geometric expansion.

    Coefficient n of I+ is the joint polynomial over the sum-indecomposable
    permutations of length n, and dually for I-.
    """
    i_plus = F * geometric_inverse(F)
    i_minus = F * geometric_inverse(F * ST)
    return i_plus, i_minus


def simple_series(
    N: int,
    method: str = "inversion",
    f_method: str = "rsk",
    threads: int = 1,
    max_enum_n: int = MAX_ENUMERATION_N,
) -> PowerSeries:
    """S(x) with coefficient simp_n(s,t) at x^n (zero below n = 4).

    method='inversion' derives the coefficients from the compositional inverse
    of the Eulerian series (built by ``f_method``); method='enumerate' filters
    S_n for simple permutations directly.  The two agree everywhere.
    """
    if N < 4:
        raise ValueError("order must be at least 4; shorter coefficients all vanish")
    if method == "inversion":
        F = eulerian_series(N, method=f_method, threads=threads, max_enum_n=max_enum_n)
        G = functional_inverse(F)
        coeffs = [ZERO] * 4
        for n in range(4, N + 1):
            sign = ONE if (n - 1) % 2 == 0 else -ONE
            st_pow = ST ** (n - 1) if (n - 1) % 2 == 0 else -(ST ** (n - 1))
            coeffs.append(-G.coeff(n) + sign + st_pow)
        return PowerSeries(N, coeffs)
    if method == "enumerate":
        if N > max_enum_n:
            raise ResourceBoundError(
                f"full enumeration is bounded at order {max_enum_n}; use method='inversion'"
            )
        coeffs = [ZERO] * 4 + [
            simple_distribution(n, threads=threads, max_n=max_enum_n).poly
            for n in range(4, N + 1)
        ]
        return PowerSeries(N, coeffs)
    raise ValueError(f"unknown method {method!r} (expected 'inversion' or 'enumerate')")


# ---------------------------------------------------------------------------
# system verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SystemReport:
    order: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failures(self) -> list[str]:
        return [name for name, passed in self.checks if not passed]


def verify_system_identities(N: int, method: str = "rsk", threads: int = 1) -> SystemReport:
    """Check the defining identities, their solutions, the inverse formula and
    the reversal symmetries, all coefficientwise and exact to order N."""
    F = eulerian_series(N, method=method, threads=threads)
    x = PowerSeries.x(N)
    i_plus, i_minus = indecomposable_series(F)
    G = functional_inverse(F)
    if N >= 4:
        S = simple_series(N, method="inversion", f_method=method, threads=threads)
    else:
        S = PowerSeries.zero(N)
    SoF = S.compose(F)
    st = ST

    checks: list[tuple[str, bool]] = []
    checks.append((
        "defining identity for F",
        F == x + i_plus * F + (i_minus * F) * st + SoF,
    ))
    checks.append((
        "defining identity for the sum-indecomposable series",
        i_plus == x + (i_minus * F) * st + SoF,
    ))
    checks.append((
        "defining identity for the skew-indecomposable series",
        i_minus == x + i_plus * F + SoF,
    ))
    one_plus_f = _one_plus(F)
    one_plus_stf = _one_plus(F * st)
    checks.append(("solution I+ * (1+F) = F", i_plus * one_plus_f == F))
    checks.append(("solution I- * (1+stF) = F", i_minus * one_plus_stf == F))
    lhs = (SoF + x) * one_plus_f * one_plus_stf
    rhs = F * (_one(N) - (F * F) * st)
    checks.append(("solution for the simple series, cleared of denominators", lhs == rhs))
    # Partial-fraction form: S = -F_inv + x/(1+stx) + x/(1+x) - x.
    frac = (-G + x * geometric_inverse(x * st) + x * geometric_inverse(x) - x)
    checks.append(("partial-fraction form reproduces the simple series", frac == S))
    checks.append(("compositional inverse: F(G) = x", F.compose(G) == x))
    checks.append(("compositional inverse: G(F) = x", G.compose(F) == x))
    pal = all(
        _centrally_symmetric(F.coeff(n), n - 1) for n in range(1, N + 1)
    )
    checks.append(("palindromic symmetry of every Eulerian coefficient", pal))
    dual = all(
        _mirror(i_plus.coeff(n), n - 1) == i_minus.coeff(n) for n in range(1, N + 1)
    )
    checks.append(("value-flip duality between I+ and I-", dual))
    return SystemReport(N, tuple(checks))


def _one(N: int) -> PowerSeries:
    return PowerSeries(N, [ONE])


def _one_plus(y: PowerSeries) -> PowerSeries:
    out = PowerSeries(y.order, y.coefficients())
    out._c[0] = out._c[0] + ONE
    return out


def _centrally_symmetric(P: BivarPoly, m: int) -> bool:
    return all(
        0 <= m - p and 0 <= m - q and P.coeff(m - p, m - q) == v
        for (p, q), v in P.items()
    )


def _mirror(P: BivarPoly, m: int) -> BivarPoly:
    """Replace each monomial s^p t^q by s^(m-p) t^(m-q)."""
    if any(p > m or q > m for (p, q), _ in P.items()):
        raise ValueError(f"degree exceeds {m}")
    return BivarPoly({(m - p, m - q): v for (p, q), v in P.items()})
