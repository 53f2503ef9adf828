"""Finite-dimensional Hopf algebras by exact structure constants.

An algebra of dimension N over Q(zeta_m) is described by sparse
structure tensors: ``mult[(i, j)]`` is the product of basis elements i
and j as a sparse coefficient dict, ``comult[k]`` maps basis pairs to
the coefficients of Delta(e_k), and the antipode is an exact N x N
matrix.  `validate` checks every Hopf axiom on all basis-index
combinations; nothing here is trusted without that check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Mapping, Sequence

from .linalg import ExactMatrix
from .scalars import CyclotomicNumber, as_scalar, lift_conductor


class OrderSearchExhausted(RuntimeError):
    """An order search passed its bound; surfaced, never swallowed."""


SparseVec = dict[int, CyclotomicNumber]
SparsePairs = dict[tuple[int, int], CyclotomicNumber]


def _dadd(acc: dict, key, value) -> None:
    cur = acc.get(key)
    if cur is None:
        if not value.is_zero():
            acc[key] = value
    else:
        s = cur + value
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def _dense(vec: SparseVec, n: int, conductor: int) -> list[CyclotomicNumber]:
    zero = CyclotomicNumber.zero(conductor)
    out = [zero] * n
    for k, v in vec.items():
        out[k] = v
    return out


def _sparse(vec: Sequence[CyclotomicNumber]) -> SparseVec:
    return {i: v for i, v in enumerate(vec) if not v.is_zero()}


class HopfAlgebraData:
    """Structure constants of a finite-dimensional Hopf algebra."""

    __slots__ = (
        "name", "dim", "conductor", "basis_labels",
        "mult", "unit", "comult", "counit", "antipode",
        "grouplike_vectors", "grading", "_cache",
    )

    def __init__(self, name: str, dim: int, conductor: int,
                 basis_labels: Sequence[str],
                 mult: Mapping[tuple[int, int], Mapping[int, object]],
                 unit: Sequence, comult: Sequence[Mapping[tuple[int, int], object]],
                 counit: Sequence, antipode: ExactMatrix,
                 grouplike_vectors: Sequence[Sequence] | None = None,
                 grading: Sequence[int] | None = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if len(basis_labels) != dim or len(unit) != dim or len(counit) != dim:
            raise ValueError("basis data length mismatch")
        if len(comult) != dim:
            raise ValueError("comultiplication tensor length mismatch")
        if antipode.rows != dim or antipode.cols != dim:
            raise ValueError("antipode shape mismatch")
        self.name = name
        self.dim = dim
        self.conductor = conductor
        self.basis_labels = list(basis_labels)
        self.mult = {}
        for (i, j), vec in mult.items():
            d = {k: as_scalar(v, conductor) for k, v in vec.items()}
            d = {k: v for k, v in d.items() if not v.is_zero()}
            if d:
                self.mult[(i, j)] = d
        self.unit = tuple(as_scalar(v, conductor) for v in unit)
        self.comult = []
        for k in range(dim):
            d = {pair: as_scalar(v, conductor) for pair, v in comult[k].items()}
            self.comult.append({p: v for p, v in d.items() if not v.is_zero()})
        self.counit = tuple(as_scalar(v, conductor) for v in counit)
        self.antipode = antipode if antipode.conductor == conductor else \
            ExactMatrix(antipode.entries, conductor)
        self.grouplike_vectors = (
            [tuple(as_scalar(v, conductor) for v in g) for g in grouplike_vectors]
            if grouplike_vectors is not None else None
        )
        self.grading = list(grading) if grading is not None else None
        self._cache = {}

    # -- scalars and elements ---------------------------------------------

    def scalar(self, v) -> CyclotomicNumber:
        return as_scalar(v, self.conductor)

    @property
    def zero_scalar(self) -> CyclotomicNumber:
        return CyclotomicNumber.zero(self.conductor)

    @property
    def one_scalar(self) -> CyclotomicNumber:
        return CyclotomicNumber.one(self.conductor)

    def element(self, coeffs: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, [self.scalar(c) for c in coeffs])

    def basis_element(self, k: int) -> "AlgebraElement":
        coeffs = [self.zero_scalar] * self.dim
        coeffs[k] = self.one_scalar
        return AlgebraElement(self, coeffs)

    def unit_element(self) -> "AlgebraElement":
        return AlgebraElement(self, list(self.unit))

    # -- sparse kernel operations -------------------------------------------

    def mul_dicts(self, a: SparseVec, b: SparseVec) -> SparseVec:
        out: SparseVec = {}
        mult = self.mult
        for p, x in a.items():
            for q, y in b.items():
                vec = mult.get((p, q))
                if vec is None:
                    continue
                xy = x * y
                if xy.is_zero():
                    continue
                for k, c in vec.items():
                    _dadd(out, k, xy * c)
        return out

    def comul_dict(self, a: SparseVec) -> SparsePairs:
        out: SparsePairs = {}
        for k, x in a.items():
            for pair, c in self.comult[k].items():
                _dadd(out, pair, x * c)
        return out

    def counit_dict(self, a: SparseVec) -> CyclotomicNumber:
        acc = self.zero_scalar
        for k, x in a.items():
            e = self.counit[k]
            if not e.is_zero():
                acc = acc + x * e
        return acc

    def matrix_apply_dict(self, m: ExactMatrix, a: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for j, x in a.items():
            for i in range(self.dim):
                c = m.entries[i][j]
                if not c.is_zero():
                    _dadd(out, i, x * c)
        return out

    # -- cached derived structure ---------------------------------------------

    @property
    def antipode_inv(self) -> ExactMatrix:
        if "antipode_inv" not in self._cache:
            self._cache["antipode_inv"] = self.antipode.inverse()
        return self._cache["antipode_inv"]

    @property
    def s_squared(self) -> ExactMatrix:
        if "s_squared" not in self._cache:
            self._cache["s_squared"] = self.antipode @ self.antipode
        return self._cache["s_squared"]

    @property
    def dual_mult(self) -> dict[tuple[int, int], SparseVec]:
        """Multiplication tensor of the dual: transpose of comult."""
        if "dual_mult" not in self._cache:
            dm: dict[tuple[int, int], SparseVec] = {}
            for k in range(self.dim):
                for (i, j), c in self.comult[k].items():
                    dm.setdefault((i, j), {})[k] = c
            self._cache["dual_mult"] = dm
        return self._cache["dual_mult"]

    def left_mult_matrix(self, a: "AlgebraElement") -> ExactMatrix:
        cols = []
        sp = _sparse(a.coeffs)
        for k in range(self.dim):
            col = self.mul_dicts(sp, {k: self.one_scalar})
            cols.append(_dense(col, self.dim, self.conductor))
        return ExactMatrix.from_columns(cols, self.conductor)

    # -- comparisons --------------------------------------------------------

    def same_structure(self, other: "HopfAlgebraData") -> bool:
        """Identical structure constants (names/labels ignored)."""
        return (
            self.dim == other.dim
            and self.conductor == other.conductor
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __repr__(self):
        return f"HopfAlgebraData({self.name!r}, dim={self.dim}, conductor={self.conductor})"


class AlgebraElement:
    """An element of a HopfAlgebraData, as a dense coefficient vector."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: HopfAlgebraData, coeffs: Sequence[CyclotomicNumber]):
        if len(coeffs) != parent.dim:
            raise ValueError("coefficient length does not match the algebra dimension")
        self.parent = parent
        self.coeffs = tuple(coeffs)

    def _check(self, other: "AlgebraElement") -> None:
        if other.parent is not self.parent:
            raise ValueError("elements live in different algebras")

    def sparse(self) -> SparseVec:
        return _sparse(self.coeffs)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.parent, [-a for a in self.coeffs])

    def scale(self, c) -> "AlgebraElement":
        c = self.parent.scalar(c)
        return AlgebraElement(self.parent, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            prod = self.parent.mul_dicts(self.sparse(), other.sparse())
            return AlgebraElement(
                self.parent, _dense(prod, self.parent.dim, self.parent.conductor))
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers are not defined for algebra elements")
        result = self.parent.unit_element()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def comul(self) -> "TensorSquareElement":
        return TensorSquareElement(self.parent, self.parent.comul_dict(self.sparse()))

    def counit(self) -> CyclotomicNumber:
        return self.parent.counit_dict(self.sparse())

    def antipode(self) -> "AlgebraElement":
        return AlgebraElement(self.parent, self.parent.antipode.apply(list(self.coeffs)))

    def antipode_inv(self) -> "AlgebraElement":
        return AlgebraElement(self.parent, self.parent.antipode_inv.apply(list(self.coeffs)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.parent is other.parent and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.parent), self.coeffs))

    def __repr__(self):
        terms = [f"({c!r})*{self.parent.basis_labels[i]}"
                 for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "AlgebraElement(" + (" + ".join(terms) or "0") + ")"


class TensorElement:
    """A sparse element of H^(tensor arity), arity >= 1."""

    __slots__ = ("parent", "arity", "data")

    def __init__(self, parent: HopfAlgebraData, arity: int,
                 data: Mapping[tuple[int, ...], object]):
        self.parent = parent
        self.arity = arity
        d = {}
        for key, v in data.items():
            v = parent.scalar(v)
            if not v.is_zero():
                d[tuple(key)] = v
        self.data = d

    @classmethod
    def unit(cls, parent: HopfAlgebraData, arity: int) -> "TensorElement":
        terms = {(): parent.one_scalar}
        for _ in range(arity):
            nxt = {}
            for key, c in terms.items():
                for k, u in enumerate(parent.unit):
                    if not u.is_zero():
                        nxt[key + (k,)] = c * u
            terms = nxt
        return cls(parent, arity, terms)

    def _check(self, other: "TensorElement") -> None:
        if other.parent is not self.parent or other.arity != self.arity:
            raise ValueError("tensor elements are incompatible")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.data)
        for key, v in other.data.items():
            _dadd(out, key, v)
        return TensorElement(self.parent, self.arity, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.parent, self.arity, {k: -v for k, v in self.data.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = self.parent.scalar(c)
        return TensorElement(self.parent, self.arity,
                             {k: v * c for k, v in self.data.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Componentwise product in the tensor-power algebra."""
        self._check(other)
        H = self.parent
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for tkey, tval in self.data.items():
            for skey, sval in other.data.items():
                partial = {(): tval * sval}
                dead = False
                for leg in range(self.arity):
                    vec = H.mult.get((tkey[leg], skey[leg]))
                    if not vec:
                        dead = True
                        break
                    nxt = {}
                    for pkey, pc in partial.items():
                        for k, c in vec.items():
                            _dadd(nxt, pkey + (k,), pc * c)
                    partial = nxt
                    if not partial:
                        dead = True
                        break
                if not dead:
                    for key, c in partial.items():
                        _dadd(out, key, c)
        return TensorElement(H, self.arity, out)

    def apply_leg(self, leg: int, matrix: ExactMatrix) -> "TensorElement":
        """Apply a linear map (as a matrix on basis coordinates) to one leg."""
        H = self.parent
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for key, v in self.data.items():
            j = key[leg]
            for i in range(H.dim):
                c = matrix.entries[i][j]
                if not c.is_zero():
                    _dadd(out, key[:leg] + (i,) + key[leg + 1:], v * c)
        return TensorElement(H, self.arity, out)

    def comult_leg(self, leg: int) -> "TensorElement":
        """Apply the comultiplication to one leg (arity grows by one)."""
        H = self.parent
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for key, v in self.data.items():
            for (a, b), c in H.comult[key[leg]].items():
                _dadd(out, key[:leg] + (a, b) + key[leg + 1:], v * c)
        return TensorElement(H, self.arity + 1, out)

    def counit_leg(self, leg: int) -> "TensorElement | AlgebraElement | CyclotomicNumber":
        """Contract one leg with the counit (arity drops by one)."""
        H = self.parent
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for key, v in self.data.items():
            e = H.counit[key[leg]]
            if not e.is_zero():
                _dadd(out, key[:leg] + key[leg + 1:], v * e)
        if self.arity == 1:
            return out.get((), H.zero_scalar)
        if self.arity == 2:
            vec = {k[0]: v for k, v in out.items()}
            return AlgebraElement(H, _dense(vec, H.dim, H.conductor))
        return TensorElement(H, self.arity - 1, out)

    def multiply_legs(self, leg: int) -> "TensorElement | AlgebraElement":
        """Multiply legs ``leg`` and ``leg+1`` together (arity drops by one)."""
        H = self.parent
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for key, v in self.data.items():
            vec = H.mult.get((key[leg], key[leg + 1]))
            if not vec:
                continue
            rest = key[:leg] + key[leg + 2:]
            for k, c in vec.items():
                _dadd(out, rest[:leg] + (k,) + rest[leg:], v * c)
        if self.arity == 2:
            vec1 = {k[0]: v for k, v in out.items()}
            return AlgebraElement(H, _dense(vec1, H.dim, H.conductor))
        return TensorElement(H, self.arity - 1, out)

    def swap_legs(self, a: int, b: int) -> "TensorElement":
        out = {}
        for key, v in self.data.items():
            lst = list(key)
            lst[a], lst[b] = lst[b], lst[a]
            _dadd(out, tuple(lst), v)
        return TensorElement(self.parent, self.arity, out)

    def embed(self, arity: int, positions: Sequence[int]) -> "TensorElement":
        """Place the legs at the given positions; unit elsewhere (e.g. R13)."""
        if len(positions) != self.arity:
            raise ValueError("positions must match the arity")
        H = self.parent
        unit_support = [(k, u) for k, u in enumerate(H.unit) if not u.is_zero()]
        free = [p for p in range(arity) if p not in positions]
        out: dict[tuple[int, ...], CyclotomicNumber] = {}
        for key, v in self.data.items():
            partial = [(dict(zip(positions, key)), v)]
            for p in free:
                partial = [({**d, p: k}, c * u)
                           for d, c in partial for k, u in unit_support]
            for d, c in partial:
                _dadd(out, tuple(d[p] for p in range(arity)), c)
        return TensorElement(H, arity, out)

    def to_element(self) -> AlgebraElement:
        if self.arity != 1:
            raise ValueError("not an arity-1 tensor")
        vec = {k[0]: v for k, v in self.data.items()}
        return AlgebraElement(self.parent, _dense(vec, self.parent.dim, self.parent.conductor))

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.parent is other.parent and self.arity == other.arity
                and self.data == other.data)

    def __hash__(self):
        return hash((id(self.parent), self.arity, tuple(sorted(self.data.items(),
                                                               key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"TensorElement(arity={self.arity}, terms={len(self.data)})"


class TensorSquareElement(TensorElement):
    """An element of H tensor H, the home of R, J, Q sources and R_n."""

    def __init__(self, parent: HopfAlgebraData, data):
        if isinstance(data, ExactMatrix):
            mapping = {(i, j): data.entries[i][j]
                       for i in range(data.rows) for j in range(data.cols)}
        else:
            mapping = data
        super().__init__(parent, 2, mapping)

    @classmethod
    def from_elements(cls, a: AlgebraElement, b: AlgebraElement) -> "TensorSquareElement":
        data = {}
        for i, x in enumerate(a.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(b.coeffs):
                if not y.is_zero():
                    data[(i, j)] = x * y
        return cls(a.parent, data)

    def coeff_matrix(self) -> ExactMatrix:
        H = self.parent
        m = ExactMatrix.zeros(H.dim, H.dim, H.conductor)
        for (i, j), v in self.data.items():
            m.entries[i][j] = v
        return m


def tensor_unit(parent: HopfAlgebraData) -> TensorSquareElement:
    t = TensorElement.unit(parent, 2)
    return TensorSquareElement(parent, t.data)


# -- axiom verification -------------------------------------------------------

def validate(H: HopfAlgebraData) -> list[str]:
    """All Hopf axioms, checked exactly on every basis-index combination.

    Returns named violations; an empty list means the data is a Hopf
    algebra.  Each axiom reports at most one witness.
    """
    violations: list[str] = []
    N = H.dim
    one = _sparse(H.unit)
    unit_el = H.unit_element()

    def mul_basis(i, j):
        return H.mult.get((i, j), {})

    # associativity
    for i in range(N):
        for j in range(N):
            ij = mul_basis(i, j)
            for k in range(N):
                left = H.mul_dicts(ij, {k: H.one_scalar})
                right = H.mul_dicts({i: H.one_scalar}, mul_basis(j, k))
                if left != right:
                    violations.append(f"associativity fails at basis ({i},{j},{k})")
                    break
            else:
                continue
            break
        else:
            continue
        break

    # unitality
    for k in range(N):
        ek = {k: H.one_scalar}
        if H.mul_dicts(one, ek) != ek or H.mul_dicts(ek, one) != ek:
            violations.append(f"unitality fails at basis {k}")
            break

    # coassociativity
    for k in range(N):
        lhs: dict = {}
        rhs: dict = {}
        for (a, b), c in H.comult[k].items():
            for (p, q), d in H.comult[a].items():
                _dadd(lhs, (p, q, b), c * d)
            for (p, q), d in H.comult[b].items():
                _dadd(rhs, (a, p, q), c * d)
        if lhs != rhs:
            violations.append(f"coassociativity fails at basis {k}")
            break

    # counit axiom
    for k in range(N):
        left: SparseVec = {}
        right: SparseVec = {}
        for (a, b), c in H.comult[k].items():
            ea, eb = H.counit[a], H.counit[b]
            if not ea.is_zero():
                _dadd(left, b, c * ea)
            if not eb.is_zero():
                _dadd(right, a, c * eb)
        ek = {k: H.one_scalar}
        if left != ek or right != ek:
            violations.append(f"counit axiom fails at basis {k}")
            break

    # bialgebra: counit and comultiplication are algebra maps
    if H.counit_dict(one) != H.one_scalar:
        violations.append("counit of the unit is not 1")
    if H.comul_dict(one) != TensorElement.unit(H, 2).data:
        violations.append("comultiplication of the unit is not 1 tensor 1")
    for i in range(N):
        di = TensorElement(H, 2, H.comult[i])
        for j in range(N):
            prod = mul_basis(i, j)
            eps_prod = H.counit_dict(prod)
            if eps_prod != H.counit[i] * H.counit[j]:
                violations.append(f"counit is not multiplicative at ({i},{j})")
                break
            dj = TensorElement(H, 2, H.comult[j])
            if (di * dj).data != H.comul_dict(prod):
                violations.append(f"comultiplication is not multiplicative at ({i},{j})")
                break
        else:
            continue
        break

    # antipode axiom and invertibility
    try:
        H.antipode_inv
    except ValueError:
        violations.append("antipode is not invertible")
    for k in range(N):
        left_acc: SparseVec = {}
        right_acc: SparseVec = {}
        for (a, b), c in H.comult[k].items():
            sa = H.matrix_apply_dict(H.antipode, {a: H.one_scalar})
            for key, v in H.mul_dicts(sa, {b: H.one_scalar}).items():
                _dadd(left_acc, key, c * v)
            sb = H.matrix_apply_dict(H.antipode, {b: H.one_scalar})
            for key, v in H.mul_dicts({a: H.one_scalar}, sb).items():
                _dadd(right_acc, key, c * v)
        expected = {kk: H.counit[k] * u for kk, u in one.items()
                    if not (H.counit[k] * u).is_zero()}
        if left_acc != expected or right_acc != expected:
            violations.append(f"antipode axiom fails at basis {k}")
            break

    return violations


# -- duals, opposites, tensor products ---------------------------------------

def dual(H: HopfAlgebraData) -> HopfAlgebraData:
    """The dual Hopf algebra on the dual basis."""
    N = H.dim
    mult = {pair: dict(vec) for pair, vec in H.dual_mult.items()}
    comult = []
    for k in range(N):
        d: SparsePairs = {}
        for (i, j), vec in H.mult.items():
            c = vec.get(k)
            if c is not None:
                d[(i, j)] = c
        comult.append(d)
    return HopfAlgebraData(
        name=f"{H.name}*",
        dim=N,
        conductor=H.conductor,
        basis_labels=[f"{lbl}^" for lbl in H.basis_labels],
        mult=mult,
        unit=list(H.counit),
        comult=comult,
        counit=list(H.unit),
        antipode=H.antipode.transpose(),
    )


def variant(H: HopfAlgebraData, which: str) -> HopfAlgebraData:
    """Opposite / co-opposite / both; antipode flips to its inverse for one swap."""
    if which not in ("op", "cop", "op_cop"):
        raise ValueError("variant must be one of op, cop, op_cop")
    mult = H.mult
    comult = H.comult
    antipode = H.antipode
    if which in ("op", "op_cop"):
        mult = {(j, i): dict(vec) for (i, j), vec in mult.items()}
    if which in ("cop", "op_cop"):
        comult = [{(j, i): c for (i, j), c in d.items()} for d in comult]
    if which != "op_cop":
        antipode = H.antipode_inv
    return HopfAlgebraData(
        name=f"{H.name}^{which}",
        dim=H.dim,
        conductor=H.conductor,
        basis_labels=list(H.basis_labels),
        mult=mult,
        unit=list(H.unit),
        comult=comult,
        counit=list(H.counit),
        antipode=antipode,
        grouplike_vectors=H.grouplike_vectors,
        grading=H.grading,
    )


def lift_algebra(H: HopfAlgebraData, conductor: int) -> HopfAlgebraData:
    """The same algebra with all scalars expressed in Q(zeta_conductor)."""
    if conductor == H.conductor:
        return H
    if conductor % H.conductor != 0:
        raise ValueError("target conductor must be a multiple of the current one")

    def lift(v):
        return lift_conductor(v, conductor)

    return HopfAlgebraData(
        name=H.name,
        dim=H.dim,
        conductor=conductor,
        basis_labels=list(H.basis_labels),
        mult={pair: {k: lift(c) for k, c in vec.items()} for pair, vec in H.mult.items()},
        unit=[lift(v) for v in H.unit],
        comult=[{p: lift(c) for p, c in d.items()} for d in H.comult],
        counit=[lift(v) for v in H.counit],
        antipode=ExactMatrix([[lift(e) for e in row] for row in H.antipode.entries], conductor),
        grouplike_vectors=(
            [[lift(v) for v in g] for g in H.grouplike_vectors]
            if H.grouplike_vectors is not None else None),
        grading=H.grading,
    )


def tensor(H1: HopfAlgebraData, H2: HopfAlgebraData) -> HopfAlgebraData:
    """Componentwise Hopf structure on H1 tensor H2."""
    m = lcm(H1.conductor, H2.conductor)
    A, B = lift_algebra(H1, m), lift_algebra(H2, m)
    N1, N2 = A.dim, B.dim

    def idx(i1, i2):
        return i1 * N2 + i2

    mult = {}
    for (i1, j1), v1 in A.mult.items():
        for (i2, j2), v2 in B.mult.items():
            vec = {}
            for k1, c1 in v1.items():
                for k2, c2 in v2.items():
                    vec[idx(k1, k2)] = c1 * c2
            mult[(idx(i1, i2), idx(j1, j2))] = vec
    comult = []
    for k1 in range(N1):
        for k2 in range(N2):
            d = {}
            for (a1, b1), c1 in A.comult[k1].items():
                for (a2, b2), c2 in B.comult[k2].items():
                    d[(idx(a1, a2), idx(b1, b2))] = c1 * c2
            comult.append(d)
    unit = [A.unit[i1] * B.unit[i2] for i1 in range(N1) for i2 in range(N2)]
    counit = [A.counit[i1] * B.counit[i2] for i1 in range(N1) for i2 in range(N2)]
    antipode = A.antipode.kron(B.antipode)
    grouplikes = None
    if A.grouplike_vectors is not None and B.grouplike_vectors is not None:
        grouplikes = [
            [x * y for x in g1 for y in g2]
            for g1 in A.grouplike_vectors for g2 in B.grouplike_vectors
        ]
    grading = None
    if A.grading is not None and B.grading is not None:
        grading = [A.grading[i1] + B.grading[i2] for i1 in range(N1) for i2 in range(N2)]
    return HopfAlgebraData(
        name=f"{H1.name}(x){H2.name}",
        dim=N1 * N2,
        conductor=m,
        basis_labels=[f"{a}|{b}" for a in A.basis_labels for b in B.basis_labels],
        mult=mult,
        unit=unit,
        comult=comult,
        counit=counit,
        antipode=antipode,
        grouplike_vectors=grouplikes,
        grading=grading,
    )


# -- antipode order, grouplikes -----------------------------------------------

def s2_order(H: HopfAlgebraData, bound: int | None = None) -> int:
    """Smallest k with (S^2)^k = Id."""
    if bound is None:
        bound = 4 * H.dim * H.dim + 240
    s2 = H.s_squared
    power = s2
    for k in range(1, bound + 1):
        if power.is_identity():
            return k
        power = power @ s2
    raise OrderSearchExhausted(
        f"order of the squared antipode of {H.name} exceeds the bound {bound}")


def is_grouplike(g: AlgebraElement) -> bool:
    """Delta(g) = g tensor g and counit(g) = 1, checked exactly."""
    if g.counit() != 1:
        return False
    return g.comul() == TensorSquareElement.from_elements(g, g)


def element_order(g: AlgebraElement, bound: int | None = None) -> int:
    """Smallest k >= 1 with g^k = 1."""
    H = g.parent
    if bound is None:
        bound = 4 * H.dim * H.dim + 240
    unit = H.unit_element()
    power = g
    for k in range(1, bound + 1):
        if power == unit:
            return k
        power = power * g
    raise OrderSearchExhausted(f"order of the element exceeds the bound {bound}")


@dataclass
class GrouplikeSet:
    """A verified, multiplicatively closed set of grouplike elements."""

    parent: HopfAlgebraData
    elements: list[AlgebraElement] = field(default_factory=list)

    @classmethod
    def build(cls, parent: HopfAlgebraData,
              vectors: Iterable[Sequence]) -> "GrouplikeSet":
        elements = [parent.element(v) for v in vectors]
        seen = {el.coeffs for el in elements}
        for el in elements:
            if not is_grouplike(el):
                raise ValueError(f"declared grouplike is not grouplike: {el!r}")
        for a in elements:
            for b in elements:
                if (a * b).coeffs not in seen:
                    raise ValueError("grouplike set is not closed under products")
            if a.antipode().coeffs not in seen:
                raise ValueError("grouplike set is not closed under inverses")
        return cls(parent, elements)

    def exponent(self, bound: int | None = None) -> int:
        result = 1
        for g in self.elements:
            result = lcm(result, element_order(g, bound))
        return result

    def __len__(self):
        return len(self.elements)


# -- Hopf subalgebra closure ----------------------------------------------------

class EchelonSpace:
    """Gauss-Jordan reduced spanning set with coordinate extraction."""

    def __init__(self, ambient_dim: int, conductor: int):
        self.ambient_dim = ambient_dim
        self.conductor = conductor
        self.rows: list[tuple[int, list[CyclotomicNumber]]] = []

    def reduce(self, vec: Sequence[CyclotomicNumber]) -> list[CyclotomicNumber]:
        vec = list(vec)
        for pos, row in self.rows:
            c = vec[pos]
            if not c.is_zero():
                for i, x in enumerate(row):
                    if not x.is_zero():
                        vec[i] = vec[i] - c * x
        return vec

    def insert(self, vec: Sequence[CyclotomicNumber]) -> bool:
        red = self.reduce(vec)
        pos = next((i for i, x in enumerate(red) if not x.is_zero()), None)
        if pos is None:
            return False
        inv = red[pos].inverse()
        new_row = [x * inv for x in red]
        for p, row in self.rows:
            c = row[pos]
            if not c.is_zero():
                for i, x in enumerate(new_row):
                    if not x.is_zero():
                        row[i] = row[i] - c * x
        self.rows.append((pos, new_row))
        self.rows.sort(key=lambda pr: pr[0])
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def coordinates(self, vec: Sequence[CyclotomicNumber]) -> list[CyclotomicNumber] | None:
        """Coordinates over the reduced basis, or None if outside the span."""
        coords = [vec[pos] for pos, _ in self.rows]
        recon = [CyclotomicNumber.zero(self.conductor)] * self.ambient_dim
        for c, (_, row) in zip(coords, self.rows):
            if not c.is_zero():
                for i, x in enumerate(row):
                    if not x.is_zero():
                        recon[i] = recon[i] + c * x
        if any(a != b for a, b in zip(recon, vec)):
            return None
        return coords


def subalgebra_closure(H: HopfAlgebraData,
                       generators: Sequence[AlgebraElement]) -> HopfAlgebraData:
    """Smallest Hopf subalgebra containing the generators, as standalone data.

    Alternates linear closure passes under multiplication, both
    comultiplication legs, and the antipode until the dimension
    stabilizes.
    """
    N = H.dim
    space = EchelonSpace(N, H.conductor)
    space.insert(list(H.unit))
    for g in generators:
        if g.parent is not H:
            raise ValueError("generator from a different algebra")
        space.insert(list(g.coeffs))

    changed = True
    while changed:
        changed = False
        basis = [list(row) for _, row in space.rows]
        candidates: list[list[CyclotomicNumber]] = []
        for a in basis:
            sa = _sparse(a)
            for b in basis:
                candidates.append(_dense(H.mul_dicts(sa, _sparse(b)), N, H.conductor))
            candidates.append(H.antipode.apply(a))
            pairs = H.comul_dict(sa)
            lefts: dict[int, SparseVec] = {}
            rights: dict[int, SparseVec] = {}
            for (i, j), c in pairs.items():
                _dadd(lefts.setdefault(j, {}), i, c)
                _dadd(rights.setdefault(i, {}), j, c)
            for vec in lefts.values():
                candidates.append(_dense(vec, N, H.conductor))
            for vec in rights.values():
                candidates.append(_dense(vec, N, H.conductor))
        for cand in candidates:
            if space.insert(cand):
                changed = True

    basis = [list(row) for _, row in space.rows]
    d = len(basis)

    def coords(vec) -> list[CyclotomicNumber]:
        c = space.coordinates(vec)
        if c is None:
            raise AssertionError("closure is not closed; this is a bug")
        return c

    mult = {}
    for a in range(d):
        sa = _sparse(basis[a])
        for b in range(d):
            prod = _dense(H.mul_dicts(sa, _sparse(basis[b])), N, H.conductor)
            vec = _sparse(coords(prod))
            if vec:
                mult[(a, b)] = vec
    unit = coords(list(H.unit))
    counit = [H.counit_dict(_sparse(v)) for v in basis]
    antipode_cols = [coords(H.antipode.apply(v)) for v in basis]
    comult = []
    pivot_positions = [pos for pos, _ in space.rows]
    for a in range(d):
        pairs = H.comul_dict(_sparse(basis[a]))
        # coordinates in the sub-basis tensor square read off at pivot pairs
        dd: SparsePairs = {}
        for r, pr in enumerate(pivot_positions):
            for s, ps in enumerate(pivot_positions):
                c = pairs.get((pr, ps))
                if c is not None and not c.is_zero():
                    dd[(r, s)] = c
        # verify the reconstruction: the closure guarantees containment
        recon: SparsePairs = {}
        for (r, s), c in dd.items():
            for i, x in enumerate(basis[r]):
                if x.is_zero():
                    continue
                for j, y in enumerate(basis[s]):
                    if not y.is_zero():
                        _dadd(recon, (i, j), c * x * y)
        if recon != pairs:
            raise AssertionError("comultiplication does not close; this is a bug")
        comult.append(dd)

    return HopfAlgebraData(
        name=f"{H.name}<sub dim {d}>",
        dim=d,
        conductor=H.conductor,
        basis_labels=[f"v{r}" for r in range(d)],
        mult=mult,
        unit=unit,
        comult=comult,
        counit=counit,
        antipode=ExactMatrix.from_columns(antipode_cols, H.conductor),
    )
