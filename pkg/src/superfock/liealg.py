"""Spin-factor Jordan superalgebra and the TKK Lie superalgebra built on it.

The TKK algebra is graded as (minus copy of J) + istr(J) + (plus copy of J),
with istr(J) spanned by left multiplications L_a and the inner derivations
[L_a, L_b].  All structure constants are computed once from the Jordan
product and cached on the :class:`TKK` instance; the Cayley transform and the
differential-operator realization are derived from them.
"""

from __future__ import annotations

import json
from functools import lru_cache

from . import linalg
from .algebra import Signature, SuperPolynomial, angular_L
from .scalars import HALF, I, ONE, QQi

Vec = tuple[QQi, ...]


class Jordan:
    """J = K e_0 + V with product (a e_0 + u)(b e_0 + v) = (ab + <u,v>) e_0 + a v + b u."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self.dim = sig.nvars

    def parity(self, l: int) -> int:
        return self.sig.parity(l)

    def multiply(self, a: list[QQi], b: list[QQi]) -> list[QQi]:
        sig = self.sig
        pair = QQi(0)
        for i in range(1, self.dim):
            ai = a[i]
            if not ai:
                continue
            for j, bij in sig.beta_rows[i]:
                if j >= 1 and b[j]:
                    pair = pair + ai * bij * b[j]
        out = [a[0] * b[0] + pair]
        for i in range(1, self.dim):
            out.append(a[0] * b[i] + b[0] * a[i])
        return out

    def basis_product(self, i: int, j: int) -> list[QQi]:
        a = [QQi(0)] * self.dim
        b = [QQi(0)] * self.dim
        a[i] = ONE
        b[j] = ONE
        return self.multiply(a, b)

    def left_mult_matrix(self, l: int) -> list[list[QQi]]:
        """Matrix of L_{e_l} in the basis (e_0, ..., e_{dim-1})."""
        cols = [self.basis_product(l, k) for k in range(self.dim)]
        return [[cols[k][r] for k in range(self.dim)] for r in range(self.dim)]


def _mat_apply(mat, vec):
    n = len(mat)
    return [sum((mat[r][c] * vec[c] for c in range(n) if vec[c]), QQi(0)) for r in range(n)]


def _graded_comm(a, b, pa: int, pb: int):
    ab = linalg.mat_mul(a, b)
    ba = linalg.mat_mul(b, a)
    s = -1 if (pa and pb) else 1
    n = len(a)
    return [[ab[r][c] - ba[r][c] if s > 0 else ab[r][c] + ba[r][c] for c in range(n)]
            for r in range(n)]


class TKK:
    """TKK Lie superalgebra of the spin factor, with cached structure constants."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self.jordan = Jordan(sig)
        nv = sig.nvars
        self.basis: list[tuple] = []
        self.basis.extend(("minus", l) for l in range(nv))
        self.basis.extend(("L", l) for l in range(nv))
        self.inn_pairs = [(i, j) for i in range(1, nv) for j in range(i + 1, nv)]
        self.inn_pairs += [(i, i) for i in range(sig.m, nv)]
        self.basis.extend(("inn",) + p for p in self.inn_pairs)
        self.basis.extend(("plus", l) for l in range(nv))
        self.index = {d: k for k, d in enumerate(self.basis)}
        self.dim = len(self.basis)

        self._lmat = [self.jordan.left_mult_matrix(l) for l in range(nv)]
        self._innmat = {}
        for (i, j) in self.inn_pairs:
            self._innmat[(i, j)] = _graded_comm(self._lmat[i], self._lmat[j],
                                                sig.parity(i), sig.parity(j))
        self._inn_columns = [
            {r * nv + c: m[r][c] for r in range(nv) for c in range(nv) if m[r][c]}
            for m in (self._innmat[p] for p in self.inn_pairs)
        ]
        if linalg.rank([dict(col) for col in self._transpose_cols(self._inn_columns, nv * nv)],
                       len(self._inn_columns)) != len(self._inn_columns):
            raise AssertionError("inner-derivation candidates are dependent")

        self.struct: dict[tuple[int, int], dict[int, QQi]] = {}
        for a in range(self.dim):
            for b in range(self.dim):
                self.struct[(a, b)] = self._basis_bracket(a, b)

    @staticmethod
    def _transpose_cols(columns, nrows):
        rows: dict[int, dict[int, QQi]] = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                rows.setdefault(r, {})[c] = v
        return [rows.get(r, {}) for r in range(nrows)]

    # -- structure ---------------------------------------------------------

    def parity(self, idx: int) -> int:
        d = self.basis[idx]
        if d[0] == "inn":
            return (self.sig.parity(d[1]) + self.sig.parity(d[2])) & 1
        return self.sig.parity(d[1])

    def _decompose_inn(self, mat) -> dict[int, QQi]:
        nv = self.sig.nvars
        target = {r * nv + c: mat[r][c] for r in range(nv) for c in range(nv) if mat[r][c]}
        sol = linalg.solve_columns(self._inn_columns, target)
        if sol is None:
            raise AssertionError("operator not in the span of inner derivations")
        base = len(self.basis) - self.sig.nvars - len(self.inn_pairs)
        return {base + k: v for k, v in sol.items()}

    def _decompose_istr(self, mat) -> dict[int, QQi]:
        """Split an istr operator into L-part (read off at e_0) plus inner part."""
        nv = self.sig.nvars
        u = [mat[r][0] for r in range(nv)]
        out: dict[int, QQi] = {}
        rest = [row[:] for row in mat]
        for l in range(nv):
            if u[l]:
                out[self.index[("L", l)]] = u[l]
                lm = self._lmat[l]
                for r in range(nv):
                    for c in range(nv):
                        if lm[r][c]:
                            rest[r][c] = rest[r][c] - u[l] * lm[r][c]
        out.update(self._decompose_inn(rest))
        return {k: v for k, v in out.items() if v}

    def _istr_matrix(self, desc) -> list[list[QQi]]:
        if desc[0] == "L":
            return self._lmat[desc[1]]
        return self._innmat[(desc[1], desc[2])]

    def _basis_bracket(self, a: int, b: int) -> dict[int, QQi]:
        da, db = self.basis[a], self.basis[b]
        ka, kb = da[0], db[0]
        nv = self.sig.nvars
        if (ka, kb) in (("minus", "minus"), ("plus", "plus")):
            return {}
        if ka in ("L", "inn") and kb in ("L", "inn"):
            comm = _graded_comm(self._istr_matrix(da), self._istr_matrix(db),
                                self.parity(a), self.parity(b))
            return self._decompose_istr(comm)
        if ka == "plus" and kb == "minus":
            jp = self.jordan.basis_product(da[1], db[1])
            out: dict[int, QQi] = {}
            for l, v in enumerate(jp):
                if v:
                    out[self.index[("L", l)]] = v + v
            comm = _graded_comm(self._lmat[da[1]], self._lmat[db[1]],
                                self.parity(a), self.parity(b))
            for k, v in self._decompose_inn(comm).items():
                cur = out.get(k, QQi(0)) + v + v
                if cur.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = cur
            return out
        if ka in ("L", "inn") and kb in ("minus", "plus"):
            mat = self._istr_matrix(da)
            vec = [QQi(0)] * nv
            vec[db[1]] = ONE
            img = _mat_apply(mat, vec)
            if kb == "minus" and ka == "L":
                img = [-v for v in img]
            return {self.index[(kb, l)]: v for l, v in enumerate(img) if v}
        # remaining cases by graded antisymmetry
        sign = -1 if (self.parity(a) and self.parity(b)) else 1
        rev = self.struct.get((b, a))
        if rev is None:
            rev = self._basis_bracket(b, a)
        return {k: (-v if sign > 0 else v) for k, v in rev.items()}

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: dict[int, QQi]) -> "TKKElement":
        return TKKElement(self, {k: QQi.coerce(v) for k, v in coeffs.items()
                                 if not QQi.coerce(v).is_zero()})

    def zero(self) -> "TKKElement":
        return TKKElement(self, {})

    def minus(self, l: int, c=1) -> "TKKElement":
        return self.element({self.index[("minus", l)]: c})

    def plus(self, l: int, c=1) -> "TKKElement":
        return self.element({self.index[("plus", l)]: c})

    def L(self, l: int, c=1) -> "TKKElement":
        return self.element({self.index[("L", l)]: c})

    def inn(self, i: int, j: int, c=1) -> "TKKElement":
        return self.element({self.index[("inn", i, j)]: c})

    def basis_element(self, idx: int) -> "TKKElement":
        return self.element({idx: ONE})

    def bracket(self, x: "TKKElement", y: "TKKElement") -> "TKKElement":
        out: dict[int, QQi] = {}
        for a, ca in x.coeffs.items():
            for b, cb in y.coeffs.items():
                st = self.struct[(a, b)]
                if not st:
                    continue
                cab = ca * cb
                for k, v in st.items():
                    s = out.get(k, QQi(0)) + cab * v
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return TKKElement(self, out)

    # -- Cayley transform ------------------------------------------------

    def _ad_matrix(self, idx: int) -> list[list[QQi]]:
        cols = []
        for b in range(self.dim):
            st = self.struct[(idx, b)]
            cols.append([st.get(r, QQi(0)) for r in range(self.dim)])
        return [[cols[c][r] for c in range(self.dim)] for r in range(self.dim)]

    @property
    def cayley_matrix(self) -> list[list[QQi]]:
        return self._cayley_matrices()[0]

    @property
    def cayley_inverse_matrix(self) -> list[list[QQi]]:
        return self._cayley_matrices()[1]

    @lru_cache(maxsize=1)
    def _cayley_matrices(self):
        n = self.dim
        am = self._ad_matrix(self.index[("minus", 0)])
        ap = self._ad_matrix(self.index[("plus", 0)])
        for mat in (am, ap):
            cube = linalg.mat_mul(mat, linalg.mat_mul(mat, mat))
            if any(any(v for v in row) for row in cube):
                raise AssertionError("ad(e_0^+/-) is not 3-step nilpotent")

        def expo(mat, t: QQi):
            half_t2 = t * t * HALF
            sq = linalg.mat_mul(mat, mat)
            out = [[(ONE if r == c else QQi(0)) + t * mat[r][c] + half_t2 * sq[r][c]
                    for c in range(n)] for r in range(n)]
            return out

        c = linalg.mat_mul(expo(am, I * HALF), expo(ap, I))
        cinv = linalg.mat_mul(expo(ap, -I), expo(am, -I * HALF))
        prod = linalg.mat_mul(c, cinv)
        assert all(prod[r][c] == (ONE if r == c else QQi(0)) for r in range(n) for c in range(n))
        return c, cinv

    def cayley(self, x: "TKKElement") -> "TKKElement":
        return self._apply_matrix(self.cayley_matrix, x)

    def cayley_inverse(self, x: "TKKElement") -> "TKKElement":
        return self._apply_matrix(self.cayley_inverse_matrix, x)

    def _apply_matrix(self, mat, x: "TKKElement") -> "TKKElement":
        out: dict[int, QQi] = {}
        for c, v in x.coeffs.items():
            for r in range(self.dim):
                if mat[r][c]:
                    s = out.get(r, QQi(0)) + mat[r][c] * v
                    if s.is_zero():
                        out.pop(r, None)
                    else:
                        out[r] = s
        return TKKElement(self, out)

    # -- differential realization and matrix model ------------------------

    @property
    def big_signature(self) -> Signature:
        return self._big_signature()

    @lru_cache(maxsize=1)
    def _big_signature(self) -> Signature:
        m, n = self.sig.m, self.sig.n
        size = m + 2 + 2 * n
        beta = [[QQi(0)] * size for _ in range(size)]
        beta[0][0] = ONE
        for i in range(1, m):
            beta[i][i] = ONE
        beta[m][m] = QQi(-1)
        beta[m + 1][m + 1] = QQi(-1)
        for i in range(n):
            beta[m + 2 + i][m + 2 + n + i] = QQi(-1)
            beta[m + 2 + n + i][m + 2 + i] = ONE
        return Signature(m + 2, n, varset="y", beta=tuple(tuple(r) for r in beta))

    def _tilde(self, i: int) -> int:
        return i if i < self.sig.m else i + 2

    def realization_pairs(self, idx: int) -> list[tuple[QQi, int, int]]:
        """Basis image as a combination sum c * L_{a,b} on the big algebra."""
        m = self.sig.m
        kind, *rest = self.basis[idx]
        if kind == "minus":
            l = rest[0]
            a = m if l == 0 else self._tilde(l)
            return [(ONE, a, m + 1), (ONE, a, 0)]
        if kind == "plus":
            l = rest[0]
            if l == 0:
                return [(QQi(-1), m, m + 1), (ONE, m, 0)]
            return [(ONE, self._tilde(l), m + 1), (QQi(-1), self._tilde(l), 0)]
        if kind == "L":
            l = rest[0]
            if l == 0:
                return [(ONE, 0, m + 1)]
            return [(ONE, self._tilde(l), m)]
        i, j = rest
        return [(ONE, self._tilde(i), self._tilde(j))]

    def realize(self, x: "TKKElement"):
        """Differential operator on the big polynomial algebra."""
        pairs: list[tuple[QQi, int, int]] = []
        for idx, c in x.coeffs.items():
            pairs.extend((c * s, a, b) for s, a, b in self.realization_pairs(idx))

        def op(p: SuperPolynomial) -> SuperPolynomial:
            out = SuperPolynomial.zero(p.sig)
            for s, a, b in pairs:
                out = out + angular_L(a, b, p).scale(s)
            return out

        return op

    def osp_matrix(self, x: "TKKElement") -> list[list[QQi]]:
        """Matrix of the realized operator on the span of the big variables."""
        bsig = self.big_signature
        op = self.realize(x)
        nv = bsig.nvars
        mat = [[QQi(0)] * nv for _ in range(nv)]
        for c in range(nv):
            img = op(SuperPolynomial.variable(bsig, c))
            for (ev, odd), coeff in img.terms.items():
                if odd:
                    r = odd[0]
                else:
                    r = ev.index(1)
                mat[r][c] = coeff
        return mat

    # -- export ------------------------------------------------------------

    def basis_label(self, idx: int) -> str:
        d = self.basis[idx]
        if d[0] == "inn":
            return f"[L{d[1]},L{d[2]}]"
        if d[0] == "L":
            return f"L{d[1]}"
        return f"e{d[1]}{'-' if d[0] == 'minus' else '+'}"

    def structure_constants_json(self) -> str:
        table = {}
        for (a, b), st in sorted(self.struct.items()):
            if not st:
                continue
            key = f"{self.basis_label(a)} , {self.basis_label(b)}"
            table[key] = {self.basis_label(k): str(v) for k, v in sorted(st.items())}
        return json.dumps(table, indent=1, sort_keys=True)


class TKKElement:
    """Exact coordinate vector over the TKK basis."""

    __slots__ = ("tkk", "coeffs")

    def __init__(self, tkk: TKK, coeffs: dict[int, QQi]):
        self.tkk = tkk
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def parity(self) -> int:
        ps = {self.tkk.parity(k) for k in self.coeffs}
        if len(ps) > 1:
            raise ValueError("element has mixed parity")
        return ps.pop() if ps else 0

    def __add__(self, other: "TKKElement") -> "TKKElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, QQi(0)) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TKKElement(self.tkk, out)

    def __neg__(self) -> "TKKElement":
        return TKKElement(self.tkk, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "TKKElement") -> "TKKElement":
        return self + (-other)

    def scale(self, c) -> "TKKElement":
        c = QQi.coerce(c)
        if c.is_zero():
            return TKKElement(self.tkk, {})
        return TKKElement(self.tkk, {k: v * c for k, v in self.coeffs.items()})

    def bracket(self, other: "TKKElement") -> "TKKElement":
        return self.tkk.bracket(self, other)

    def part(self, kind: str) -> dict[int, QQi]:
        """Coefficients of the minus/L/inn/plus block, keyed by descriptor tail."""
        out = {}
        for idx, v in self.coeffs.items():
            d = self.tkk.basis[idx]
            if d[0] == kind:
                out[d[1] if len(d) == 2 else (d[1], d[2])] = v
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TKKElement) and self.tkk is other.tkk \
            and self.coeffs == other.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.tkk.basis_label(k)}"
                          for k, v in sorted(self.coeffs.items()))

    __repr__ = __str__


@lru_cache(maxsize=None)
def tkk_for(sig: Signature) -> TKK:
    return TKK(sig)


def k_basis(tkk: TKK) -> list[TKKElement]:
    """Basis of the subalgebra {(x, I, -x)}: e_l^- - e_l^+ plus the inner part."""
    out = [tkk.minus(l) - tkk.plus(l) for l in range(tkk.sig.nvars)]
    out.extend(tkk.inn(i, j) for i, j in tkk.inn_pairs)
    return out


def k_closes(tkk: TKK) -> bool:
    """Brackets of k-basis pairs stay inside k: no L-part, minus = -plus."""
    basis = k_basis(tkk)
    for x in basis:
        for y in basis:
            z = tkk.bracket(x, y)
            if z.part("L"):
                return False
            mp = z.part("minus")
            pp = z.part("plus")
            keys = set(mp) | set(pp)
            for l in keys:
                if mp.get(l, QQi(0)) != -pp.get(l, QQi(0)):
                    return False
    return True


def k_center_dimension(tkk: TKK) -> int:
    """Dimension of the center of k, via an exact nullspace."""
    basis = k_basis(tkk)
    rows: list[dict[int, QQi]] = []
    row_index: dict[tuple[int, int], int] = {}
    images = [[tkk.bracket(b, x) for x in basis] for b in basis]
    for j, img_row in enumerate(images):
        for c, z in enumerate(img_row):
            for k, v in z.coeffs.items():
                rid = row_index.setdefault((j, k), len(row_index))
                while len(rows) <= rid:
                    rows.append({})
                rows[rid][c] = v
    return len(basis) - linalg.rank(rows, len(basis))
