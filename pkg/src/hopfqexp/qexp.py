"""The quasi-exponent engine.

qexp(H) is the smallest n such that u^n is unipotent, where u is the
Drinfeld element of D(H).  Two independent routes compute the minimal
polynomial of u: the cheap default works with the N x N operators

    T_n = m_n (Id (x) S^-2 (x) ... (x) S^(-2n+2)) Delta_n

on H itself (a vanishing combination sum a_i T_i = 0 is equivalent to
f(u) = 0 for f = sum a_i x^i), and the cross-check builds D(H) and
takes the minimal polynomial of the regular representation of u.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .double import (
    QuasitriangularData,
    drinfeld_double,
    drinfeld_element,
    regular_representation,
)
from .hopf import (
    AlgebraElement,
    HopfAlgebraData,
    OrderSearchExhausted,
    TensorElement,
    TensorSquareElement,
    s2_order,
    tensor_unit,
)
from .linalg import (
    ExactMatrix,
    ExactPolynomial,
    SpanSolver,
    default_order_bound,
    minimal_polynomial,
    root_of_unity_order,
    squarefree_part,
)

#: largest double dimension the regular-representation route will attempt
REGULAR_ROUTE_ENVELOPE = 4096


@dataclass
class QexpReport:
    algebra: str
    min_poly_u: ExactPolynomial
    squarefree: ExactPolynomial
    qexp: int
    exponent: int | str  # positive integer or "infinite"
    s2_order: int
    unipotency_index: int
    route: str
    cross_checked: bool

    def to_dict(self) -> dict:
        from .scalars import scalar_to_json

        return {
            "name": self.algebra,
            "min_poly": [scalar_to_json(c) for c in self.min_poly_u.coeffs],
            "squarefree": [scalar_to_json(c) for c in self.squarefree.coeffs],
            "qexp": self.qexp,
            "exponent": self.exponent,
            "s2_order": self.s2_order,
            "unipotency_index": self.unipotency_index,
            "route": self.route,
            "cross_checked": self.cross_checked,
        }


def iterated_maps(H: HopfAlgebraData, n: int):
    """(m_n, Delta_n): m_n = m(m_{n-1} (x) Id), Delta_n = (Delta_{n-1} (x) Id)Delta.

    m_1 = Delta_1 = Id.  For n = 0 the conventions match T_0 = unit after
    counit: m_0 embeds a scalar as a multiple of 1 and Delta_0 is the
    counit.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        def m0(scalar):
            return H.unit_element().scale(scalar)

        def delta0(h: AlgebraElement):
            return h.counit()

        return m0, delta0

    def m_n(t) -> AlgebraElement:
        if n == 1:
            return t if isinstance(t, AlgebraElement) else t.to_element()
        if t.arity != n:
            raise ValueError("arity mismatch")
        while isinstance(t, TensorElement) and t.arity > 1:
            t = t.multiply_legs(0)
        return t

    def delta_n(h: AlgebraElement):
        if n == 1:
            return h
        t = h.comul()
        t = TensorElement(H, 2, t.data)
        while t.arity < n:
            t = t.comult_leg(t.arity - 1)
        return t

    return m_n, delta_n


def t_map(H: HopfAlgebraData, n: int) -> ExactMatrix:
    """The matrix of T_n; T_0: h -> eps(h) 1, T_1 = Id, and
    T_{n+1} = m (T_n (x) S^{-2n}) Delta."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cache = H._cache.setdefault("t_maps", [])
    if not cache:
        t0 = ExactMatrix(
            [[H.unit[i] * H.counit[k] for k in range(H.dim)] for i in range(H.dim)],
            H.conductor)
        cache.append(t0)
    while len(cache) <= n:
        m = len(cache) - 1  # we extend from T_m to T_{m+1}
        cache.append(_t_next(H, cache[m], m))
    return cache[n]


def _sinv2_pow(H: HopfAlgebraData, n: int) -> ExactMatrix:
    cache = H._cache.setdefault("sinv2_pows", [ExactMatrix.identity(H.dim, H.conductor)])
    sinv2 = None
    while len(cache) <= n:
        if sinv2 is None:
            sinv2 = H.antipode_inv @ H.antipode_inv
        cache.append(cache[-1] @ sinv2)
    return cache[n]


def _t_next(H: HopfAlgebraData, t_m: ExactMatrix, m: int) -> ExactMatrix:
    smat = _sinv2_pow(H, m)
    cols = []
    for k in range(H.dim):
        acc: dict[int, object] = {}
        for (a, b), c in H.comult[k].items():
            ta = {i: t_m.entries[i][a] for i in range(H.dim)
                  if not t_m.entries[i][a].is_zero()}
            sb = {i: smat.entries[i][b] for i in range(H.dim)
                  if not smat.entries[i][b].is_zero()}
            prod = H.mul_dicts(ta, sb)
            for i, v in prod.items():
                cur = acc.get(i)
                acc[i] = v * c if cur is None else cur + v * c
        col = [H.zero_scalar] * H.dim
        for i, v in acc.items():
            if not v.is_zero():
                col[i] = v
        cols.append(col)
    return ExactMatrix.from_columns(cols, H.conductor)


def u_min_poly_via_t(H: HopfAlgebraData) -> ExactPolynomial:
    """Minimal polynomial of u from the first dependence among T_0, T_1, ...

    f(u) = 0 holds exactly when sum a_i T_i = 0 with f = sum a_i x^i, so
    the first linear dependence is the minimal polynomial of u.
    """
    solver = SpanSolver(H.conductor)
    for n in range(H.dim * H.dim + 2):
        coeffs = solver.insert(t_map(H, n).vectorize())
        if coeffs is not None:
            return ExactPolynomial([-c for c in coeffs] + [1], H.conductor)
    raise AssertionError("no dependence among T_n up to dim^2")  # pragma: no cover


def u_min_poly_via_regular(H: HopfAlgebraData,
                           qt: QuasitriangularData | None = None) -> ExactPolynomial:
    """Minimal polynomial of the regular representation of u in D(H)."""
    if H.dim * H.dim > REGULAR_ROUTE_ENVELOPE:
        raise ValueError(
            f"the double of {H.name} has dimension {H.dim * H.dim}, beyond the "
            f"regular-representation envelope {REGULAR_ROUTE_ENVELOPE}; "
            "use the T-route instead")
    if qt is None:
        qt = drinfeld_double(H)
    u = drinfeld_element(qt)
    return minimal_polynomial(regular_representation(qt.algebra, u))


def unipotency_index(min_poly_u: ExactPolynomial, qexp: int) -> int:
    """Smallest N with (1 - u^qexp)^N = 0, read off the minimal polynomial."""
    f = min_poly_u
    one = ExactPolynomial([1], f.conductor)
    g = (one - ExactPolynomial.x_power(qexp, f.conductor)) % f
    power = one % f
    for n in range(1, f.degree + 1):
        power = (power * g) % f
        if power.is_zero():
            return n
    raise AssertionError("(1 - x^qexp) is not nilpotent modulo the minimal "
                         "polynomial; qexp is wrong")  # pragma: no cover


def quasi_exponent(H: HopfAlgebraData, route: str = "t",
                   cross_check: bool = False,
                   bound: int | None = None) -> QexpReport:
    """The full quasi-exponent report for H."""
    if route not in ("t", "regular"):
        raise ValueError("route must be 't' or 'regular'")
    if route == "t":
        f = u_min_poly_via_t(H)
    else:
        f = u_min_poly_via_regular(H)
    cross_checked = False
    if cross_check:
        other = u_min_poly_via_regular(H) if route == "t" else u_min_poly_via_t(H)
        if other != f:
            raise AssertionError(
                f"route disagreement for {H.name}: {f!r} vs {other!r}")
        cross_checked = True
    sf = squarefree_part(f)
    b = bound if bound is not None else default_order_bound(sf)
    q = root_of_unity_order(sf, b)
    if q is None:
        raise OrderSearchExhausted(
            f"quasi-exponent of {H.name}: root-of-unity order not found "
            f"within bound {b}")
    exponent: int | str = q if f.monic() == sf else "infinite"
    return QexpReport(
        algebra=H.name,
        min_poly_u=f,
        squarefree=sf,
        qexp=q,
        exponent=exponent,
        s2_order=s2_order(H),
        unipotency_index=unipotency_index(f, q),
        route=route,
        cross_checked=cross_checked,
    )


def element_minimal_polynomial(a: AlgebraElement) -> ExactPolynomial:
    """Minimal polynomial of an algebra element, from its power sequence.

    The first linear dependence among 1, a, a^2, ... is the minimal
    polynomial of a (equivalently of its left-regular matrix, which is
    faithful in a unital algebra).
    """
    H = a.parent
    solver = SpanSolver(H.conductor)
    power = H.unit_element()
    for _ in range(H.dim + 1):
        coeffs = solver.insert(list(power.coeffs))
        if coeffs is not None:
            return ExactPolynomial([-c for c in coeffs] + [1], H.conductor)
        power = power * a
    raise AssertionError("no dependence among element powers")  # pragma: no cover


def is_unipotent_element(a: AlgebraElement) -> bool:
    """True iff a - 1 is nilpotent, i.e. the minimal polynomial is (x-1)^k."""
    f = element_minimal_polynomial(a)
    one = ExactPolynomial([1], f.conductor)
    x_minus_1 = ExactPolynomial([-1, 1], f.conductor)
    power = one
    for _ in range(f.degree):
        power = power * x_minus_1
    return f == power


# -- the R_n elements and Corollary-style divisibility checks -------------------


def r_n(qt: QuasitriangularData, n: int) -> TensorSquareElement:
    """R_n = R (Id (x) S^2)(R) ... (Id (x) S^(2n-2))(R); R_0 = 1 (x) 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    D = qt.algebra
    cache = qt._cache.setdefault("r_list", [tensor_unit(D)])
    s2_pows = qt._cache.setdefault(
        "s2_pows", [ExactMatrix.identity(D.dim, D.conductor)])
    while len(cache) <= n:
        m = len(cache) - 1
        while len(s2_pows) <= m:
            s2_pows.append(s2_pows[-1] @ D.s_squared)
        nxt = cache[-1] * qt.R.apply_leg(1, s2_pows[m])
        cache.append(TensorSquareElement(D, nxt.data))
    return cache[n]


def check_corollary_24(qt: QuasitriangularData, n: int, Nmax: int) -> bool:
    """True iff sum_k (-1)^k C(N, k) R_{nk} = 0 for some N <= Nmax."""
    if n < 1 or Nmax < 1:
        raise ValueError("n and Nmax must be positive")
    D = qt.algebra
    for N in range(1, Nmax + 1):
        acc = TensorElement(D, 2, {})
        for k in range(N + 1):
            term = r_n(qt, n * k).scale((-1) ** k * comb(N, k))
            acc = acc + term
        if acc.is_zero():
            return True
    return False
