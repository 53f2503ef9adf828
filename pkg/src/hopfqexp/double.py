"""The Drinfeld double D(H) = H*cop (x) H and its R-matrix.

The double's basis element at index j*N + i is f_j (x) h_i, where f_j
is the dual basis of H* (the dual index varies slower).  The cross
relation used is

    (f (x) h)(f' (x) h') = f (h1 -> f' <- Sinv(h3)) (x) h2 h',

with -> and <- the left and right hit actions of H on H*.  Whatever
convention is chosen must pass the quasitriangularity checks and the
S^2-by-conjugation identity; those checks are run on every preset.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import (
    AlgebraElement,
    HopfAlgebraData,
    TensorElement,
    TensorSquareElement,
    _dadd,
    _dense,
    _sparse,
    tensor_unit,
)
from .linalg import ExactMatrix


@dataclass
class QuasitriangularData:
    """A Drinfeld double with its universal R-matrix.

    basis_split[k] = (dual index j, primal index i) for k = j*N + i.
    """

    algebra: HopfAlgebraData
    R: TensorSquareElement
    basis_split: list[tuple[int, int]]
    source: HopfAlgebraData
    _cache: dict = field(default_factory=dict, repr=False)

    def iota_primal(self, h: AlgebraElement) -> AlgebraElement:
        """Embed an element of H as epsilon (x) h in the double."""
        if h.parent is not self.source:
            raise ValueError("element does not belong to the source algebra")
        D, H = self.algebra, self.source
        N = H.dim
        coeffs = [D.zero_scalar] * D.dim
        for i, c in enumerate(h.coeffs):
            if c.is_zero():
                continue
            for j, e in enumerate(H.counit):
                if not e.is_zero():
                    coeffs[j * N + i] = coeffs[j * N + i] + c * e
        return AlgebraElement(D, coeffs)

    def iota_dual(self, dual_coeffs) -> AlgebraElement:
        """Embed a functional sum(c_j f_j) as f (x) 1 in the double."""
        D, H = self.algebra, self.source
        N = H.dim
        coeffs = [D.zero_scalar] * D.dim
        for j, c in enumerate(dual_coeffs):
            c = H.scalar(c)
            if c.is_zero():
                continue
            for i, u in enumerate(H.unit):
                if not u.is_zero():
                    coeffs[j * N + i] = coeffs[j * N + i] + c * u
        return AlgebraElement(D, coeffs)


def drinfeld_double(H: HopfAlgebraData) -> QuasitriangularData:
    N = H.dim
    ND = N * N
    cond = H.conductor
    one = H.one_scalar
    sinv = H.antipode_inv
    sinv_cols = [_sparse(sinv.column(c)) for c in range(N)]

    # Delta3(e_i): triples (a, b, c) -> coeff
    delta3 = []
    for i in range(N):
        d: dict[tuple[int, int, int], object] = {}
        for (a, b2), c1 in H.comult[i].items():
            for (b, c), c2 in H.comult[b2].items():
                _dadd(d, (a, b, c), c1 * c2)
        delta3.append(d)

    # cross[i][l]: (1 (x) h_i)(f_l (x) 1) as {(dual k1, primal k2): coeff}
    # term for each triple (a,b,c): (e_a -> f_l <- Sinv(e_c)) (x) e_b,
    # and (e_a -> f_l <- Sinv(e_c)) has f_s-coefficient
    # <f_l, Sinv(e_c) e_s e_a>.
    act_cache: dict[tuple[int, int], list] = {}

    def acted(a: int, c: int):
        """For the pair (a, c): acted[l] = sparse dual vector over s."""
        key = (a, c)
        if key not in act_cache:
            rows = [dict() for _ in range(N)]
            left = sinv_cols[c]
            for s in range(N):
                prod = H.mul_dicts(H.mul_dicts(left, {s: one}), {a: one})
                for l, v in prod.items():
                    rows[l][s] = v
            act_cache[key] = rows
        return act_cache[key]

    cross = [[{} for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for (a, b, c), gamma in delta3[i].items():
            rows = acted(a, c)
            for l in range(N):
                dest = cross[i][l]
                for s, v in rows[l].items():
                    _dadd(dest, (s, b), gamma * v)

    # full multiplication: (f_j (x) e_i)(f_l (x) e_m)
    dm = H.dual_mult
    mult: dict[tuple[int, int], dict[int, object]] = {}
    for i in range(N):
        for l in range(N):
            base = cross[i][l]
            if not base:
                continue
            for j in range(N):
                for m in range(N):
                    out: dict[int, object] = {}
                    for (s, b), v in base.items():
                        dvec = dm.get((j, s))
                        if dvec is None:
                            continue
                        pvec = H.mult.get((b, m))
                        if pvec is None:
                            continue
                        for k1, c1 in dvec.items():
                            vc1 = v * c1
                            for k2, c2 in pvec.items():
                                _dadd(out, k1 * N + k2, vc1 * c2)
                    if out:
                        mult[(j * N + i, l * N + m)] = out

    # coalgebra structure: tensor-product coalgebra of H*cop and H
    comult = []
    for j in range(N):
        # Delta_{H*cop}(f_j): (b, a) with coefficient mu[(a,b)][j]
        dual_pairs: dict[tuple[int, int], object] = {}
        for (a, b), vec in H.mult.items():
            cj = vec.get(j)
            if cj is not None:
                _dadd(dual_pairs, (b, a), cj)
        for i in range(N):
            d: dict[tuple[int, int], object] = {}
            for (b, a), c1 in dual_pairs.items():
                for (p, q), c2 in H.comult[i].items():
                    _dadd(d, (b * N + p, a * N + q), c1 * c2)
            comult.append(d)

    unit = [H.counit[j] * H.unit[i] for j in range(N) for i in range(N)]
    counit = [H.unit[j] * H.counit[i] for j in range(N) for i in range(N)]

    # antipode: S_D(f_j (x) e_i) = (eps (x) S(e_i)) . ((Sinv)^T f_j (x) 1)
    def raw_mul(a: dict, b: dict) -> dict:
        out: dict[int, object] = {}
        for p, x in a.items():
            for q, y in b.items():
                vec = mult.get((p, q))
                if vec is None:
                    continue
                xy = x * y
                for k, c in vec.items():
                    _dadd(out, k, xy * c)
        return out

    s_cols = []
    eps_sparse = [(j, e) for j, e in enumerate(H.counit) if not e.is_zero()]
    unit_sparse = [(i, u) for i, u in enumerate(H.unit) if not u.is_zero()]
    for j in range(N):
        # (Sinv)^T f_j has f_l coefficient Sinv[j][l]
        fpart: dict[int, object] = {}
        for l in range(N):
            c = sinv.entries[j][l]
            if c.is_zero():
                continue
            for i, u in unit_sparse:
                _dadd(fpart, l * N + i, c * u)
        for i in range(N):
            hpart: dict[int, object] = {}
            for p, c in _sparse(H.antipode.column(i)).items():
                for jj, e in eps_sparse:
                    _dadd(hpart, jj * N + p, c * e)
            img = raw_mul(hpart, fpart)
            s_cols.append(_dense(img, ND, cond))
    antipode = ExactMatrix.from_columns(s_cols, cond)

    D = HopfAlgebraData(
        name=f"D({H.name})", dim=ND, conductor=cond,
        basis_labels=[f"{H.basis_labels[j]}^|{H.basis_labels[i]}"
                      for j in range(N) for i in range(N)],
        mult=mult, unit=unit, comult=comult, counit=counit, antipode=antipode,
    )

    r_data = {}
    for i in range(N):
        for j, e in eps_sparse:
            for p, u in unit_sparse:
                _dadd(r_data, (j * N + i, i * N + p), e * u)
    R = TensorSquareElement(D, r_data)
    split = [(j, i) for j in range(N) for i in range(N)]
    return QuasitriangularData(algebra=D, R=R, basis_split=split, source=H)


def r_inverse(qt: QuasitriangularData) -> TensorSquareElement:
    """(S (x) Id)(R), verified to be a two-sided inverse of R."""
    if "r_inverse" not in qt._cache:
        D = qt.algebra
        cand = qt.R.apply_leg(0, D.antipode)
        unit2 = tensor_unit(D)
        if qt.R * cand != unit2 or cand * qt.R != unit2:
            raise ValueError("(S (x) Id)(R) is not inverse to R; the double is broken")
        qt._cache["r_inverse"] = TensorSquareElement(D, cand.data)
    return qt._cache["r_inverse"]


def verify_quasitriangular(qt: QuasitriangularData) -> list[str]:
    """Exact hexagon identities, Delta-op intertwining, and invertibility."""
    D, R = qt.algebra, qt.R
    violations = []
    try:
        r_inverse(qt)
    except ValueError:
        violations.append("R is not invertible")
    r13 = R.embed(3, [0, 2])
    if R.comult_leg(0) != r13 * R.embed(3, [1, 2]):
        violations.append("hexagon (Delta (x) Id)(R) = R13 R23 fails")
    if R.comult_leg(1) != r13 * R.embed(3, [0, 1]):
        violations.append("hexagon (Id (x) Delta)(R) = R13 R12 fails")
    for a in range(D.dim):
        da = TensorElement(D, 2, D.comult[a])
        if da.swap_legs(0, 1) * R != R * da:
            violations.append(f"Delta-op intertwining fails at basis {a}")
            break
    return violations


def drinfeld_element(qt: QuasitriangularData) -> AlgebraElement:
    """u = m21 (Id (x) S)(R)."""
    if "u" not in qt._cache:
        D = qt.algebra
        qt._cache["u"] = (
            qt.R.apply_leg(1, D.antipode).swap_legs(0, 1).multiply_legs(0))
    return qt._cache["u"]


def u_inverse(qt: QuasitriangularData) -> AlgebraElement:
    """The inverse of the Drinfeld element, from its regular representation."""
    if "u_inv" not in qt._cache:
        D = qt.algebra
        u = drinfeld_element(qt)
        lu = regular_representation(D, u)
        qt._cache["u_inv"] = AlgebraElement(D, lu.inverse().apply(list(D.unit)))
    return qt._cache["u_inv"]


def verify_s2_conjugation(qt: QuasitriangularData,
                          u: AlgebraElement | None = None) -> bool:
    """S^2(b) u = u b for every basis element b, with u invertible."""
    D = qt.algebra
    if u is None:
        u = drinfeld_element(qt)
    try:
        regular_representation(D, u).inverse()
    except ValueError:
        return False
    for b in range(D.dim):
        eb = D.basis_element(b)
        s2b = AlgebraElement(D, D.s_squared.apply(list(eb.coeffs)))
        if s2b * u != u * eb:
            return False
    return True


def regular_representation(A: HopfAlgebraData, a: AlgebraElement) -> ExactMatrix:
    """The matrix of left multiplication by a."""
    if a.parent is not A:
        raise ValueError("element does not belong to the algebra")
    return A.left_mult_matrix(a)
