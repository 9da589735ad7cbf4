"""Non-positive DG-rings and DG-modules, trivial extensions, H^0, the
projection/section pair, and restriction to complexes over H^0.

A DG-ring is stored degreewise: finite-dimensional graded pieces in degrees
[lo, 0], multiplication tensors per degree pair, a degree +1 differential and
a degree-0 unit. Every constructor runs the exhaustive basis checks (d^2 = 0,
graded associativity and unit, Leibniz) unless told not to; with total
dimensions in the tens this is cheap and catches sign errors mechanically.

Graded elements are dicts {degree: coefficient tuple}; missing degrees are 0.
"""
from __future__ import annotations

from .algebra import Algebra, LeftModule
from .complexes import BddComplex, BimoduleComplex
from .errors import (HomalgError, NoCanonicalSection, NotTrivialExtension,
                     ShapeMismatch, SupPositive)
from .field import Field
from .matrix import (ExactMatrix, unit_vec, vec_add, vec_is_zero, vec_scale,
                     zero_vec)


# ---- graded element helpers ----

def gv_clean(field: Field, x: dict) -> dict:
    return {d: v for d, v in x.items() if not vec_is_zero(field, v)}


def gv_add(field: Field, x: dict, y: dict) -> dict:
    out = dict(x)
    for d, v in y.items():
        if d in out:
            out[d] = vec_add(field, out[d], v)
        else:
            out[d] = v
    return gv_clean(field, out)


def gv_scale(field: Field, c, x: dict) -> dict:
    return gv_clean(field, {d: vec_scale(field, c, v) for d, v in x.items()})


def gv_eq(field: Field, x: dict, y: dict) -> bool:
    return gv_clean(field, x) == gv_clean(field, y)


class DGRing:
    __slots__ = ("field", "dims", "mult", "diff", "unit", "labels", "meta")

    def __init__(self, field: Field, dims: dict, mult: dict, diff: dict, unit,
                 labels: dict | None = None, verify: bool = True, meta=None):
        self.field = field
        self.dims = {int(d): int(n) for d, n in dims.items() if n}
        if any(d > 0 for d in self.dims):
            raise SupPositive("DG-ring pieces must sit in degrees <= 0")
        if 0 not in self.dims:
            raise ShapeMismatch("a unital DG-ring needs a degree-0 piece")
        self.mult = {}
        for (p, q), tensor in mult.items():
            t = tuple(tuple(tuple(field.coerce(c) for c in vec) for vec in row)
                      for row in tensor)
            self.mult[(p, q)] = t
        self.diff = {int(d): m for d, m in diff.items() if not m.is_zero()}
        self.unit = tuple(field.coerce(c) for c in unit)
        self.labels = labels or {}
        self.meta = meta or {}
        if verify:
            self._verify()

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def lo(self) -> int:
        return min(self.dims)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_degree_zero(self) -> bool:
        return set(self.dims) == {0}

    def mult_vec(self, p: int, xv, q: int, yv) -> tuple:
        f = self.field
        out_dim = self.dim(p + q)
        out = [f.zero()] * out_dim
        tensor = self.mult.get((p, q))
        if tensor is None or out_dim == 0:
            return tuple(out)
        for i, xi in enumerate(xv):
            if not xi:
                continue
            ti = tensor[i]
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                c = f.mul(xi, yj)
                for k, s in enumerate(ti[j]):
                    if s:
                        out[k] = f.add(out[k], f.mul(c, s))
        return tuple(out)

    def mult_elem(self, x: dict, y: dict) -> dict:
        f = self.field
        out: dict = {}
        for p, xv in x.items():
            for q, yv in y.items():
                if self.dim(p + q) == 0:
                    continue
                v = self.mult_vec(p, xv, q, yv)
                if not vec_is_zero(f, v):
                    out = gv_add(f, out, {p + q: v})
        return out

    def diff_mat(self, d: int) -> ExactMatrix:
        m = self.diff.get(d)
        if m is not None:
            return m
        return ExactMatrix.zeros(self.field, self.dim(d + 1), self.dim(d))

    def diff_elem(self, x: dict) -> dict:
        f = self.field
        out: dict = {}
        for d, v in x.items():
            if self.dim(d + 1) == 0:
                continue
            w = self.diff_mat(d).apply(v)
            if not vec_is_zero(f, w):
                out = gv_add(f, out, {d + 1: w})
        return out

    def basis_elem(self, d: int, i: int) -> dict:
        return {d: unit_vec(self.field, self.dim(d), i)}

    def unit_elem(self) -> dict:
        return {0: self.unit}

    def _verify(self):
        f = self.field
        for d, m in self.diff.items():
            if m.rows != self.dim(d + 1) or m.cols != self.dim(d):
                raise ShapeMismatch(f"differential at degree {d} has wrong shape")
            nxt = self.diff_mat(d + 1)
            if not nxt.mul(m).is_zero():
                raise HomalgError(f"d^2 != 0 at degree {d}")
        degs = self.degrees()
        for p in degs:
            for i in range(self.dim(p)):
                e = self.basis_elem(p, i)
                if not gv_eq(f, self.mult_elem(self.unit_elem(), e), e):
                    raise HomalgError(f"unit fails on the left at ({p}, {i})")
                if not gv_eq(f, self.mult_elem(e, self.unit_elem()), e):
                    raise HomalgError(f"unit fails on the right at ({p}, {i})")
        for p in degs:
            for q in degs:
                for r in degs:
                    if self.dim(p + q + r) == 0 and self.dim(p + q) == 0 \
                            and self.dim(q + r) == 0:
                        continue
                    for i in range(self.dim(p)):
                        ei = self.basis_elem(p, i)
                        for j in range(self.dim(q)):
                            ej = self.basis_elem(q, j)
                            eij = self.mult_elem(ei, ej)
                            for k in range(self.dim(r)):
                                ek = self.basis_elem(r, k)
                                lhs = self.mult_elem(eij, ek)
                                rhs = self.mult_elem(ei, self.mult_elem(ej, ek))
                                if not gv_eq(f, lhs, rhs):
                                    raise HomalgError(
                                        f"graded associativity fails at degrees "
                                        f"({p},{q},{r}) indices ({i},{j},{k})")
        # Leibniz: d(ab) = (da) b + (-1)^{|a|} a (db)
        for p in degs:
            for q in degs:
                for i in range(self.dim(p)):
                    ei = self.basis_elem(p, i)
                    dei = self.diff_elem(ei)
                    sign = f.coerce(-1 if p % 2 else 1)
                    for j in range(self.dim(q)):
                        ej = self.basis_elem(q, j)
                        lhs = self.diff_elem(self.mult_elem(ei, ej))
                        rhs = gv_add(f, self.mult_elem(dei, ej),
                                     gv_scale(f, sign,
                                              self.mult_elem(ei, self.diff_elem(ej))))
                        if not gv_eq(f, lhs, rhs):
                            raise HomalgError(
                                f"Leibniz fails at degrees ({p},{q}) indices ({i},{j})")

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "degrees": {str(d): n for d, n in sorted(self.dims.items())},
            "mult": {f"{p},{q}": [[[f.show(c) for c in vec] for vec in row]
                                  for row in t]
                     for (p, q), t in sorted(self.mult.items())},
            "diff": {str(d): m.to_json() for d, m in sorted(self.diff.items())},
            "unit": [f.show(c) for c in self.unit],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DGRing":
        field = Field.from_json(data["field"])
        dims = {int(d): int(n) for d, n in data["degrees"].items()}
        mult = {}
        for key, t in data.get("mult", {}).items():
            p, q = (int(x) for x in key.split(","))
            mult[(p, q)] = t
        diff = {int(d): ExactMatrix.from_json(field, m)
                for d, m in data.get("diff", {}).items()}
        return cls(field, dims, mult, diff, data["unit"])

    def __repr__(self):
        shape = ", ".join(f"{d}:{n}" for d, n in sorted(self.dims.items()))
        return f"DGRing[{shape}]"


def dgring_from_algebra(a: Algebra) -> DGRing:
    """An ordinary algebra viewed as a DG-ring concentrated in degree 0."""
    return DGRing(a.field, {0: a.dim}, {(0, 0): a.sc}, {}, a.unit,
                  verify=False, meta={"algebra": a})


class DGModule:
    __slots__ = ("dgring", "dims", "action", "diff", "meta")

    def __init__(self, dgring: DGRing, dims: dict, action: dict, diff: dict,
                 verify: bool = True, meta=None):
        self.dgring = dgring
        self.dims = {int(d): int(n) for d, n in dims.items() if n}
        self.action = {}
        f = dgring.field
        for (p, q), tensor in action.items():
            t = tuple(tuple(tuple(f.coerce(c) for c in vec) for vec in row)
                      for row in tensor)
            self.action[(p, q)] = t
        self.diff = {int(d): m for d, m in diff.items() if not m.is_zero()}
        self.meta = meta or {}
        if verify:
            self._verify()

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def lo(self) -> int:
        return min(self.dims) if self.dims else 0

    def hi(self) -> int:
        return max(self.dims) if self.dims else 0

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def act_vec(self, p: int, bv, q: int, mv) -> tuple:
        f = self.dgring.field
        out_dim = self.dim(p + q)
        out = [f.zero()] * out_dim
        tensor = self.action.get((p, q))
        if tensor is None or out_dim == 0:
            return tuple(out)
        for i, bi in enumerate(bv):
            if not bi:
                continue
            ti = tensor[i]
            for j, mj in enumerate(mv):
                if not mj:
                    continue
                c = f.mul(bi, mj)
                for k, s in enumerate(ti[j]):
                    if s:
                        out[k] = f.add(out[k], f.mul(c, s))
        return tuple(out)

    def act_elem(self, x: dict, m: dict) -> dict:
        f = self.dgring.field
        out: dict = {}
        for p, xv in x.items():
            for q, mv in m.items():
                if self.dim(p + q) == 0:
                    continue
                v = self.act_vec(p, xv, q, mv)
                if not vec_is_zero(f, v):
                    out = gv_add(f, out, {p + q: v})
        return out

    def diff_mat(self, d: int) -> ExactMatrix:
        m = self.diff.get(d)
        if m is not None:
            return m
        return ExactMatrix.zeros(self.dgring.field, self.dim(d + 1), self.dim(d))

    def diff_elem(self, m: dict) -> dict:
        f = self.dgring.field
        out: dict = {}
        for d, v in m.items():
            if self.dim(d + 1) == 0:
                continue
            w = self.diff_mat(d).apply(v)
            if not vec_is_zero(f, w):
                out = gv_add(f, out, {d + 1: w})
        return out

    def basis_elem(self, d: int, i: int) -> dict:
        return {d: unit_vec(self.dgring.field, self.dim(d), i)}

    def _verify(self):
        b = self.dgring
        f = b.field
        for d in list(self.diff):
            m = self.diff_mat(d)
            if m.rows != self.dim(d + 1) or m.cols != self.dim(d):
                raise ShapeMismatch(f"module differential at degree {d} has wrong shape")
            if not self.diff_mat(d + 1).mul(m).is_zero():
                raise HomalgError(f"module d^2 != 0 at degree {d}")
        for q in self.degrees():
            for j in range(self.dim(q)):
                mj = self.basis_elem(q, j)
                if not gv_eq(f, self.act_elem(b.unit_elem(), mj), mj):
                    raise HomalgError(f"unit does not act as identity at ({q},{j})")
        for p in b.degrees():
            for q in b.degrees():
                for r in self.degrees():
                    for i in range(b.dim(p)):
                        ei = b.basis_elem(p, i)
                        for j in range(b.dim(q)):
                            ej = b.basis_elem(q, j)
                            eij = b.mult_elem(ei, ej)
                            for k in range(self.dim(r)):
                                mk = self.basis_elem(r, k)
                                lhs = self.act_elem(eij, mk)
                                rhs = self.act_elem(ei, self.act_elem(ej, mk))
                                if not gv_eq(f, lhs, rhs):
                                    raise HomalgError(
                                        f"action associativity fails at "
                                        f"({p},{q},{r}) ({i},{j},{k})")
        # Leibniz for the action: d(b m) = (db) m + (-1)^{|b|} b (dm)
        for p in b.degrees():
            sign = f.coerce(-1 if p % 2 else 1)
            for q in self.degrees():
                for i in range(b.dim(p)):
                    ei = b.basis_elem(p, i)
                    dei = b.diff_elem(ei)
                    for j in range(self.dim(q)):
                        mj = self.basis_elem(q, j)
                        lhs = self.diff_elem(self.act_elem(ei, mj))
                        rhs = gv_add(f, self.act_elem(dei, mj),
                                     gv_scale(f, sign,
                                              self.act_elem(ei, self.diff_elem(mj))))
                        if not gv_eq(f, lhs, rhs):
                            raise HomalgError(
                                f"action Leibniz fails at ({p},{q}) ({i},{j})")

    def shift(self, j: int) -> "DGModule":
        """(M[j])^n = M^{n+j}; differential and action signs adjusted."""
        f = self.dgring.field
        dims = {d - j: n for d, n in self.dims.items()}
        sgn = f.coerce(-1 if j % 2 else 1)
        diff = {d - j: m.scale(sgn) for d, m in self.diff.items()}
        action = {}
        for (p, q), t in self.action.items():
            if p % 2 and j % 2:
                t = tuple(tuple(tuple(f.neg(c) for c in vec) for vec in row)
                          for row in t)
            action[(p, q - j)] = t
        return DGModule(self.dgring, dims, action, diff, verify=False)

    def __repr__(self):
        shape = ", ".join(f"{d}:{n}" for d, n in sorted(self.dims.items()))
        return f"DGModule[{shape}]"


def regular_dgmodule(b: DGRing) -> DGModule:
    action = {pq: t for pq, t in b.mult.items()}
    return DGModule(b, dict(b.dims), action, dict(b.diff), verify=False,
                    meta={"regular": True})


class DGModuleMap:
    """Degree-0 map of DG-modules: commutes with differentials and the action."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: DGModule, target: DGModule, comps: dict,
                 verify: bool = True):
        self.source = source
        self.target = target
        self.comps = {}
        for d, m in comps.items():
            if m.rows != target.dim(d) or m.cols != source.dim(d):
                raise ShapeMismatch(f"map component at degree {d} has wrong shape")
            if not m.is_zero():
                self.comps[d] = m
        if verify:
            self._verify()

    def comp(self, d: int) -> ExactMatrix:
        m = self.comps.get(d)
        if m is not None:
            return m
        return ExactMatrix.zeros(self.source.dgring.field,
                                 self.target.dim(d), self.source.dim(d))

    def apply(self, m: dict) -> dict:
        f = self.source.dgring.field
        out: dict = {}
        for d, v in m.items():
            w = self.comp(d).apply(v)
            if not vec_is_zero(f, w):
                out = gv_add(f, out, {d: w})
        return out

    def _verify(self):
        src, tgt = self.source, self.target
        b = src.dgring
        degs = sorted(set(src.degrees()) | set(tgt.degrees()))
        for d in degs:
            lhs = tgt.diff_mat(d).mul(self.comp(d))
            rhs = self.comp(d + 1).mul(src.diff_mat(d))
            if lhs != rhs:
                raise HomalgError(f"DG-module map does not commute with d at {d}")
        for p in b.degrees():
            for q in src.degrees():
                for i in range(b.dim(p)):
                    ei = b.basis_elem(p, i)
                    for j in range(src.dim(q)):
                        mj = src.basis_elem(q, j)
                        lhs = self.apply(src.act_elem(ei, mj))
                        rhs = tgt.act_elem(ei, self.apply(mj))
                        if not gv_eq(b.field, lhs, rhs):
                            raise HomalgError(
                                f"DG-module map not equivariant at ({p},{q}) ({i},{j})")


# ---------------------------------------------------------------------------
# trivial extension
# ---------------------------------------------------------------------------


def trivial_extension(a: Algebra, m: BimoduleComplex) -> DGRing:
    """B = A (+) M with [a1; m1][a2; m2] = [a1 a2; a1 m2 + m1 a2] and the
    differential of M (zero on A). Requires sup of the terms <= 0."""
    if m.algebra_left != a or m.algebra_right != a:
        raise HomalgError("trivial extension needs an (A, A)-bimodule complex")
    if any(d > 0 for d in m.degrees()):
        raise SupPositive("bimodule complex must be concentrated in degrees <= 0")
    f = a.field
    n = a.dim
    m0 = m.term_dim(0)
    dims = {0: n + m0}
    for d in m.degrees():
        if d < 0:
            dims[d] = m.term_dim(d)

    def zero_tensor(pi, qj, out_dim):
        return [[[f.zero()] * out_dim for _ in range(qj)] for _ in range(pi)]

    mult = {}
    # (0, 0)
    t00 = zero_tensor(n + m0, n + m0, n + m0)
    for i in range(n):
        for j in range(n):
            for k, c in enumerate(a.sc[i][j]):
                t00[i][j][k] = c
    if m0:
        bim0 = m.term(0)
        for i in range(n):
            la = bim0.left_action[i]
            ra = bim0.right_action[i]
            for j in range(m0):
                for k in range(m0):
                    t00[i][n + j][n + k] = la.get(k, j)      # a . m
                    t00[n + j][i][n + k] = ra.get(k, j)      # m . a
    mult[(0, 0)] = t00
    for d in m.degrees():
        if d >= 0:
            continue
        bim = m.term(d)
        md = bim.dim
        t0d = zero_tensor(n + m0, md, md)
        td0 = zero_tensor(md, n + m0, md)
        for i in range(n):
            la = bim.left_action[i]
            ra = bim.right_action[i]
            for j in range(md):
                for k in range(md):
                    t0d[i][j][k] = la.get(k, j)
                    td0[j][i][k] = ra.get(k, j)
        mult[(0, d)] = t0d
        mult[(d, 0)] = td0

    diff = {}
    for d in m.degrees():
        if d >= 0:
            continue
        dm = m.diff(d)
        if dm.is_zero():
            continue
        if d == -1:
            tgt = dims[0]
            ent = [f.zero()] * (tgt * dm.cols)
            for r in range(dm.rows):
                for c in range(dm.cols):
                    ent[(n + r) * dm.cols + c] = dm.get(r, c)
            diff[d] = ExactMatrix(f, tgt, dm.cols, ent)
        else:
            diff[d] = dm
    unit = list(a.unit) + [f.zero()] * m0
    labels = {0: list(a.labels) + [f"m0_{t}" for t in range(m0)]}
    return DGRing(f, dims, mult, diff, unit, labels=labels, verify=True,
                  meta={"trivial_extension": (a, m)})


def h0(b: DGRing) -> Algebra:
    """H^0(B) = B^0 / im(d^{-1}) with the induced multiplication.

    For a trivial extension with sup(M) < 0 the result has structure constants
    identical to A, and A's certified radical/idempotent data is reattached."""
    from .matrix import coords_in_span, quotient_reps
    f = b.field
    n0 = b.dim(0)
    dneg = b.diff_mat(-1)
    im = [tuple(c) for c in dneg.image_basis().columns()] if b.dim(-1) else []
    full = [unit_vec(f, n0, i) for i in range(n0)]
    reps = quotient_reps(f, im, full, n0)
    amb = list(im) + list(reps)
    sc = []
    for x in reps:
        plane = []
        for y in reps:
            prod = b.mult_vec(0, x, 0, y)
            coords = coords_in_span(f, amb, prod, n0)
            if coords is None:
                raise HomalgError("degree-0 product escaped B^0")
            plane.append(tuple(coords[len(im):]))
        sc.append(tuple(plane))
    ucoords = coords_in_span(f, amb, b.unit, n0)
    unit = tuple(ucoords[len(im):])
    te = b.meta.get("trivial_extension")
    rad_cert = None
    idem_cert = None
    labels = None
    if te is not None:
        a, mcx = te
        if len(reps) == a.dim and tuple(sc) == a.sc and unit == a.unit:
            rad_cert = a._radical_cert
            idem_cert = a._idem_cert
            labels = a.labels
    return Algebra(f, sc, unit, labels=labels, verify=False,
                   radical_basis=rad_cert, primitive_idempotents=idem_cert)


class SectionData:
    """pi: B^0 -> H^0(B) and its multiplicative section tau: H^0(B) -> B^0."""

    __slots__ = ("dgring", "h0_algebra", "pi", "tau")

    def __init__(self, dgring: DGRing, h0_algebra: Algebra, pi: ExactMatrix,
                 tau: ExactMatrix):
        self.dgring = dgring
        self.h0_algebra = h0_algebra
        self.pi = pi
        self.tau = tau

    def tau_elem(self, avec) -> dict:
        return {0: self.tau.apply(avec)}


def projection_and_section(b: DGRing) -> SectionData:
    """For a trivial extension with sup(M) < 0: pi . tau = 1 and tau(a) = [a; 0]."""
    te = b.meta.get("trivial_extension")
    if te is None:
        raise NoCanonicalSection("DG-ring was not built as a trivial extension")
    a, mcx = te
    if any(d >= 0 for d in mcx.degrees()):
        raise NoCanonicalSection("section needs sup(M) < 0 strictly")
    f = b.field
    h = h0(b)
    if h.sc != a.sc:
        raise NotTrivialExtension("H^0 does not reproduce the base algebra")
    n0 = b.dim(0)
    tau = ExactMatrix.identity(f, a.dim)  # B^0 = A on the nose here
    pi = ExactMatrix.identity(f, n0)
    sd = SectionData(b, h, pi, tau)
    comp = pi.mul(tau)
    if comp != ExactMatrix.identity(f, h.dim):
        raise HomalgError("pi . tau is not the identity")
    for i in range(h.dim):
        for j in range(h.dim):
            lhs = b.mult_vec(0, tau.apply(unit_vec(f, h.dim, i)), 0,
                             tau.apply(unit_vec(f, h.dim, j)))
            rhs = tau.apply(h.sc[i][j])
            if lhs != rhs:
                raise HomalgError("section is not multiplicative")
    return sd


def restrict_along_tau(b: DGRing, x: DGModule | None = None) -> BddComplex:
    """View a DG-module (default: B itself) as a complex of H^0(B)-modules
    through the section."""
    sd = projection_and_section(b)
    a = sd.h0_algebra
    if x is None:
        x = regular_dgmodule(b)
    f = b.field
    terms = {}
    for d in x.degrees():
        nd = x.dim(d)
        action = []
        for i in range(a.dim):
            tv = sd.tau.apply(unit_vec(f, a.dim, i))
            cols = [x.act_vec(0, tv, d, unit_vec(f, nd, j)) for j in range(nd)]
            action.append(ExactMatrix.from_cols(f, cols, nrows=nd))
        terms[d] = LeftModule(a, nd, action, verify=False)
    diffs = {d: x.diff_mat(d) for d in x.degrees() if not x.diff_mat(d).is_zero()}
    return BddComplex(a, terms, diffs)


def dgmodule_from_complex(b: DGRing, c: BddComplex) -> DGModule:
    """A complex over an algebra as a DG-module over that algebra's degree-0
    DG-ring (the two carry exactly the same data)."""
    a = b.meta.get("algebra")
    if a is None or c.algebra != a:
        raise HomalgError("dgmodule_from_complex needs the matching degree-0 DG-ring")
    dims = {d: c.term(d).dim for d in c.degrees()}
    action = {}
    for d in c.degrees():
        t = c.term(d)
        action[(0, d)] = [[tuple(t.action[i].col(j)) for j in range(t.dim)]
                          for i in range(a.dim)]
    diffs = {d: c.diffs[d] for d in c.diffs}
    return DGModule(b, dims, action, diffs, verify=False)


def dgmodule_to_complex(x: DGModule) -> BddComplex:
    b = x.dgring
    a = b.meta.get("algebra")
    if a is None:
        raise HomalgError("dgmodule_to_complex needs a degree-0 DG-ring")
    f = b.field
    terms = {}
    for d in x.degrees():
        nd = x.dim(d)
        action = []
        for i in range(a.dim):
            cols = [x.act_vec(0, unit_vec(f, a.dim, i), d, unit_vec(f, nd, j))
                    for j in range(nd)]
            action.append(ExactMatrix.from_cols(f, cols, nrows=nd))
        terms[d] = LeftModule(a, nd, action, verify=False)
    diffs = {d: x.diff_mat(d) for d in x.degrees() if not x.diff_mat(d).is_zero()}
    return BddComplex(a, terms, diffs, verify=False)


def module_in_degree_zero(b: DGRing, m: LeftModule, sd: SectionData | None = None) -> DGModule:
    """An H^0(B)-module as a DG-module concentrated in degree 0: B^0 acts
    through pi, everything in negative degrees acts as zero."""
    f = b.field
    if sd is None:
        if b.is_degree_zero():
            a = b.meta.get("algebra")
            if a is None or m.algebra != a:
                raise HomalgError("module is not over this DG-ring's algebra")
            action = {(0, 0): [[tuple(m.action[i].col(j)) for j in range(m.dim)]
                               for i in range(a.dim)]}
            return DGModule(b, {0: m.dim}, action, {}, verify=False)
        sd = projection_and_section(b)
    if m.algebra != sd.h0_algebra and m.algebra.sc != sd.h0_algebra.sc:
        raise HomalgError("module is not over H^0 of this DG-ring")
    n0 = b.dim(0)
    tensor = []
    for i in range(n0):
        abar = sd.pi.apply(unit_vec(f, n0, i))
        mat = ExactMatrix.zeros(f, m.dim, m.dim)
        for t, c in enumerate(abar):
            if c:
                mat = mat.add(m.action[t].scale(c))
        tensor.append([tuple(mat.col(j)) for j in range(m.dim)])
    return DGModule(b, {0: m.dim}, {(0, 0): tensor}, {}, verify=True)
