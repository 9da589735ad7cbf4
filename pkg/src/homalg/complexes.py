"""Bounded complexes of modules/bimodules, cohomology, shifts, cones,
tensor and Hom complexes, quasi-isomorphism testing.

Sign conventions, fixed once for the whole package:
  * cohomological grading, d^n: C^n -> C^{n+1};
  * shift: (C[j])^n = C^{n+j}, differential multiplied by (-1)^j;
  * cone(f: X->Y)^n = X^{n+1} (+) Y^n, d(x, y) = (-d x, f(x) + d y);
  * tensor: d(x (x) y) = dx (x) y + (-1)^p x (x) dy on bidegree (p, q);
  * Hom: (d phi)(x) = d(phi x) - (-1)^{|phi|} phi(d x).
"""
from __future__ import annotations

from .algebra import (Algebra, Bimodule, LeftModule, action_of_element,
                      hom_basis, zero_module)
from .errors import FieldMismatch, HomalgError, ShapeMismatch
from .field import Field
from .matrix import (ExactMatrix, coords_in_span, quotient_reps, span_basis,
                     unit_vec)

_trivial_cache: dict[Field, Algebra] = {}


def trivial_algebra(field: Field) -> Algebra:
    """The base field as a one-dimensional algebra (carrier for k-complexes)."""
    if field not in _trivial_cache:
        _trivial_cache[field] = Algebra(field, [[[field.one()]]], [field.one()],
                                        labels=["1"], verify=False)
    return _trivial_cache[field]


def module_over_trivial(field: Field, dim: int) -> LeftModule:
    return LeftModule(trivial_algebra(field), dim,
                      [ExactMatrix.identity(field, dim)], verify=False)


class BddComplex:
    """Bounded complex of left modules over a fixed algebra."""

    __slots__ = ("algebra", "terms", "diffs")

    def __init__(self, algebra: Algebra, terms: dict, diffs: dict, verify: bool = True):
        self.algebra = algebra
        self.terms = {n: m for n, m in terms.items() if m.dim > 0}
        self.diffs = {}
        for n, d in diffs.items():
            src = self.term(n)
            tgt = self.term(n + 1)
            if d.rows != tgt.dim or d.cols != src.dim:
                raise ShapeMismatch(f"differential at degree {n} has wrong shape")
            if not d.is_zero():
                self.diffs[n] = d
        if verify:
            self._verify()

    def _verify(self):
        for n, m in self.terms.items():
            if m.algebra != self.algebra:
                raise FieldMismatch("complex term over the wrong algebra")
        for n, d in self.diffs.items():
            nxt = self.diff(n + 1)
            if not nxt.mul(d).is_zero():
                raise HomalgError(f"d^2 != 0 at degree {n}")
            src, tgt = self.term(n), self.term(n + 1)
            for i in range(self.algebra.dim):
                if d.mul(src.action[i]) != tgt.action[i].mul(d):
                    raise HomalgError(f"differential at degree {n} is not equivariant")

    def term(self, n: int) -> LeftModule:
        return self.terms.get(n) or zero_module(self.algebra)

    def diff(self, n: int) -> ExactMatrix:
        d = self.diffs.get(n)
        if d is not None:
            return d
        return ExactMatrix.zeros(self.algebra.field, self.term(n + 1).dim,
                                 self.term(n).dim)

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def lo(self) -> int:
        degs = self.degrees()
        return degs[0] if degs else 0

    def hi(self) -> int:
        degs = self.degrees()
        return degs[-1] if degs else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if self.is_zero():
            return "BddComplex(0)"
        shape = ", ".join(f"{n}:{m.dim}" for n, m in sorted(self.terms.items()))
        return f"BddComplex[{shape}]"


def single_module_complex(m: LeftModule, degree: int = 0) -> BddComplex:
    return BddComplex(m.algebra, {degree: m}, {}, verify=False)


def cohomology_data(c: BddComplex, n: int):
    """(H^n as a module, representative cocycles in term n coords, boundary basis)."""
    f = c.algebra.field
    tn = c.term(n)
    ker = c.diff(n).kernel_basis().columns() if tn.dim else []
    ker = [tuple(v) for v in ker]
    prev = c.diff(n - 1)
    im = [tuple(v) for v in prev.image_basis().columns()] if prev.rows else []
    reps = quotient_reps(f, im, ker, tn.dim) if tn.dim else []
    amb = list(im) + list(reps)
    action = []
    for i in range(c.algebra.dim):
        cols = []
        for v in reps:
            w = tn.action[i].apply(v)
            coords = coords_in_span(f, amb, w, tn.dim)
            if coords is None:
                raise HomalgError("cohomology representatives not action-stable")
            cols.append(coords[len(im):])
        action.append(ExactMatrix.from_cols(f, cols, nrows=len(reps)))
    return LeftModule(c.algebra, len(reps), action, verify=False), reps, im


def cohomology(c: BddComplex, n: int) -> LeftModule:
    return cohomology_data(c, n)[0]


def cohomology_dim(c: BddComplex, n: int) -> int:
    tn = c.term(n).dim
    if tn == 0:
        return 0
    return tn - c.diff(n).rank() - c.diff(n - 1).rank()


def inf_sup_amp(c: BddComplex):
    """(inf, sup, amp) of the cohomology; the zero complex reports (None, None, None),
    meaning +infinity / -infinity / undefined."""
    degs = c.degrees()
    if not degs:
        return None, None, None
    nz = [n for n in range(degs[0], degs[-1] + 1) if cohomology_dim(c, n) > 0]
    if not nz:
        return None, None, None
    return nz[0], nz[-1], nz[-1] - nz[0]


def shift(c: BddComplex, j: int) -> BddComplex:
    terms = {n: c.term(n + j) for n in [d - j for d in c.degrees()]}
    sign = c.algebra.field.coerce(-1 if j % 2 else 1)
    diffs = {n - j: c.diffs[n].scale(sign) for n in c.diffs}
    return BddComplex(c.algebra, terms, diffs, verify=False)


def direct_sum_complexes(a: BddComplex, b: BddComplex) -> BddComplex:
    if a.algebra != b.algebra:
        raise FieldMismatch("direct sum over different algebras")
    f = a.algebra.field
    terms = {}
    diffs = {}
    for n in set(a.degrees()) | set(b.degrees()):
        terms[n] = a.term(n).direct_sum(b.term(n))
    lo = min(list(a.degrees() or [0]) + list(b.degrees() or [0]))
    hi = max(list(a.degrees() or [0]) + list(b.degrees() or [0]))
    for n in range(lo - 1, hi + 1):
        da, db = a.diff(n), b.diff(n)
        if da.is_zero() and db.is_zero():
            continue
        rows = da.rows + db.rows
        cols = da.cols + db.cols
        ent = [f.zero()] * (rows * cols)
        for r in range(da.rows):
            for cc in range(da.cols):
                ent[r * cols + cc] = da.get(r, cc)
        for r in range(db.rows):
            for cc in range(db.cols):
                ent[(da.rows + r) * cols + (da.cols + cc)] = db.get(r, cc)
        diffs[n] = ExactMatrix(f, rows, cols, ent)
    return BddComplex(a.algebra, terms, diffs, verify=False)


class ChainMap:
    __slots__ = ("source", "target", "comps")

    def __init__(self, source: BddComplex, target: BddComplex, comps: dict,
                 verify: bool = True):
        self.source = source
        self.target = target
        self.comps = {}
        for n, m in comps.items():
            if m.rows != target.term(n).dim or m.cols != source.term(n).dim:
                raise ShapeMismatch(f"chain map component at degree {n} has wrong shape")
            if not m.is_zero():
                self.comps[n] = m
        if verify:
            self._verify()

    def comp(self, n: int) -> ExactMatrix:
        m = self.comps.get(n)
        if m is not None:
            return m
        return ExactMatrix.zeros(self.source.algebra.field,
                                 self.target.term(n).dim, self.source.term(n).dim)

    def _verify(self):
        lo = min([*self.source.degrees(), *self.target.degrees()], default=0) - 1
        hi = max([*self.source.degrees(), *self.target.degrees()], default=0) + 1
        for n in range(lo, hi):
            lhs = self.target.diff(n).mul(self.comp(n))
            rhs = self.comp(n + 1).mul(self.source.diff(n))
            if lhs != rhs:
                raise HomalgError(f"chain map does not commute with d at degree {n}")
            src, tgt = self.source.term(n), self.target.term(n)
            m = self.comp(n)
            for i in range(self.source.algebra.dim):
                if m.mul(src.action[i]) != tgt.action[i].mul(m):
                    raise HomalgError(f"chain map component at degree {n} not equivariant")

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"


def cone(f: ChainMap) -> BddComplex:
    """cone(f)^n = X^{n+1} (+) Y^n with d(x, y) = (-dx, f(x) + dy)."""
    x, y = f.source, f.target
    fld = x.algebra.field
    terms = {}
    diffs = {}
    degs = set()
    for n in x.degrees():
        degs.add(n - 1)
    degs |= set(y.degrees())
    for n in degs:
        terms[n] = x.term(n + 1).direct_sum(y.term(n))
    lo = min(degs, default=0) - 1
    hi = max(degs, default=0) + 1
    for n in range(lo, hi):
        dx = x.diff(n + 1)
        dy = y.diff(n)
        fn = f.comp(n + 1)
        rows = dx.rows + dy.rows
        cols = dx.cols + dy.cols
        if rows == 0 or cols == 0:
            continue
        ent = [fld.zero()] * (rows * cols)
        for r in range(dx.rows):
            for c in range(dx.cols):
                ent[r * cols + c] = fld.neg(dx.get(r, c))
        for r in range(fn.rows):
            for c in range(fn.cols):
                ent[(dx.rows + r) * cols + c] = fn.get(r, c)
        for r in range(dy.rows):
            for c in range(dy.cols):
                ent[(dx.rows + r) * cols + (dx.cols + c)] = dy.get(r, c)
        m = ExactMatrix(fld, rows, cols, ent)
        if not m.is_zero():
            diffs[n] = m
    return BddComplex(x.algebra, terms, diffs, verify=False)


def is_acyclic(c: BddComplex) -> bool:
    degs = c.degrees()
    if not degs:
        return True
    return all(cohomology_dim(c, n) == 0 for n in range(degs[0], degs[-1] + 1))


def is_quasi_iso(f: ChainMap) -> bool:
    return is_acyclic(cone(f))


def h_induced_matrix(f: ChainMap, n: int):
    """The induced map H^n(source) -> H^n(target) in cohomology bases."""
    fld = f.source.algebra.field
    hs, reps_s, _ = cohomology_data(f.source, n)
    ht, reps_t, im_t = cohomology_data(f.target, n)
    amb = list(im_t) + list(reps_t)
    cols = []
    for v in reps_s:
        w = f.comp(n).apply(v)
        coords = coords_in_span(fld, amb, w, f.target.term(n).dim)
        if coords is None:
            raise HomalgError("chain map image is not a cocycle")
        cols.append(coords[len(im_t):])
    return ExactMatrix.from_cols(fld, cols, nrows=ht.dim), hs, ht


def h_bijective_everywhere(f: ChainMap) -> bool:
    lo = min([*f.source.degrees(), *f.target.degrees()], default=0)
    hi = max([*f.source.degrees(), *f.target.degrees()], default=0)
    for n in range(lo, hi + 1):
        m, hs, ht = h_induced_matrix(f, n)
        if hs.dim != ht.dim or m.rank() != hs.dim:
            return False
    return True


# ---------------------------------------------------------------------------
# bimodule complexes
# ---------------------------------------------------------------------------


class BimoduleComplex:
    """Bounded complex of (A, B)-bimodules with bi-equivariant differentials."""

    __slots__ = ("algebra_left", "algebra_right", "terms", "diffs")

    def __init__(self, algebra_left: Algebra, algebra_right: Algebra,
                 terms: dict, diffs: dict, verify: bool = True):
        self.algebra_left = algebra_left
        self.algebra_right = algebra_right
        self.terms = {n: m for n, m in terms.items() if m.dim > 0}
        self.diffs = {n: d for n, d in diffs.items() if not d.is_zero()}
        if verify:
            self.res_left()
            self.res_right()

    def term(self, n: int) -> Bimodule | None:
        return self.terms.get(n)

    def term_dim(self, n: int) -> int:
        t = self.terms.get(n)
        return t.dim if t else 0

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def lo(self) -> int:
        degs = self.degrees()
        return degs[0] if degs else 0

    def hi(self) -> int:
        degs = self.degrees()
        return degs[-1] if degs else 0

    def diff(self, n: int) -> ExactMatrix:
        d = self.diffs.get(n)
        if d is not None:
            return d
        f = self.algebra_left.field
        return ExactMatrix.zeros(f, self.term_dim(n + 1), self.term_dim(n))

    def res_left(self) -> BddComplex:
        """Forget the right structure: a complex of left modules."""
        terms = {n: m.as_left_module() for n, m in self.terms.items()}
        return BddComplex(self.algebra_left, terms, dict(self.diffs))

    def res_right(self) -> BddComplex:
        """Forget the left structure: a complex of left modules over the opposite."""
        terms = {n: m.as_right_module() for n, m in self.terms.items()}
        return BddComplex(self.algebra_right.opposite(), terms, dict(self.diffs))

    def shift(self, j: int) -> "BimoduleComplex":
        terms = {n - j: m for n, m in self.terms.items()}
        sign = self.algebra_left.field.coerce(-1 if j % 2 else 1)
        diffs = {n - j: d.scale(sign) for n, d in self.diffs.items()}
        return BimoduleComplex(self.algebra_left, self.algebra_right, terms, diffs,
                               verify=False)

    def __repr__(self):
        shape = ", ".join(f"{n}:{m.dim}" for n, m in sorted(self.terms.items()))
        return f"BimoduleComplex[{shape}]"


def single_bimodule_complex(m: Bimodule, degree: int) -> BimoduleComplex:
    return BimoduleComplex(m.algebra_left, m.algebra_right, {degree: m}, {},
                           verify=False)


# ---------------------------------------------------------------------------
# tensor and Hom complexes
# ---------------------------------------------------------------------------


class _TensorSquare:
    """X^p (x)_A Y^q as a quotient of the plain tensor product.

    Realized as the cokernel of x.a (x) y - x (x) a.y, computed by elimination.
    Keeps the projection (full -> reduced coords) and the representative
    inclusion so maps on either side descend.
    """

    def __init__(self, field: Field, xdim: int, ydim: int,
                 right_action_x: list[ExactMatrix], left_action_y: list[ExactMatrix]):
        self.field = field
        self.xdim = xdim
        self.ydim = ydim
        full = xdim * ydim
        rels = []
        for ra, la in zip(right_action_x, left_action_y):
            for u in range(xdim):
                for v in range(ydim):
                    vec = [field.zero()] * full
                    for w in range(xdim):
                        c = ra.get(w, u)
                        if c:
                            vec[w * ydim + v] = field.add(vec[w * ydim + v], c)
                    for w in range(ydim):
                        c = la.get(w, v)
                        if c:
                            vec[u * ydim + w] = field.sub(vec[u * ydim + w], c)
                    if any(vec):
                        rels.append(tuple(vec))
        sub = span_basis(field, rels, full)
        reps = quotient_reps(field, sub,
                             [unit_vec(field, full, i) for i in range(full)], full)
        self.dim = len(reps)
        self.include = (ExactMatrix.from_cols(field, reps, nrows=full)
                        if reps else ExactMatrix.zeros(field, full, 0))
        amb = list(sub) + list(reps)
        if full:
            m = (ExactMatrix.from_cols(field, amb, nrows=full)
                 if amb else ExactMatrix.zeros(field, full, 0))
            sol = m.solve(ExactMatrix.identity(field, full))
            if sol is None:
                raise HomalgError("tensor reduction failed")
            rows = [sol.row(len(sub) + i) for i in range(self.dim)]
            self.project = (ExactMatrix.from_rows(field, rows)
                            if rows else ExactMatrix.zeros(field, 0, full))
        else:
            self.project = ExactMatrix.zeros(field, 0, 0)

    def descend(self, other: "_TensorSquare", full_map: ExactMatrix) -> ExactMatrix:
        """Quotient-level matrix of a full-tensor-level map into `other`."""
        return other.project.mul(full_map).mul(self.include)


def _kron(field: Field, a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product matching the (u * ydim + v) tensor index convention."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    ent = [field.zero()] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            c = a.get(i, j)
            if c:
                for k in range(b.rows):
                    for l in range(b.cols):
                        d = b.get(k, l)
                        if d:
                            ent[(i * b.rows + k) * cols + (j * b.cols + l)] = field.mul(c, d)
    return ExactMatrix(field, rows, cols, ent)


def tensor_complexes(s, t: BddComplex) -> BddComplex:
    """(S (x)_A T) with d(x (x) y) = dx (x) y + (-1)^p x (x) dy.

    `s` is a BimoduleComplex whose right algebra is t.algebra (the result keeps
    its left structure), or a BddComplex over t.algebra.opposite() (a complex
    of right modules; the result is a complex of vector spaces over the
    one-dimensional trivial algebra).
    """
    f = t.algebra.field
    if isinstance(s, BimoduleComplex):
        if s.algebra_right != t.algebra:
            raise FieldMismatch("tensor: right structure does not match t's algebra")
        out_alg = s.algebra_left
        def right_act(p):
            return list(s.terms[p].right_action)
        def left_out_action(p):
            return list(s.terms[p].left_action)
        sdeg = s.degrees()
        sdim = s.term_dim
        sdiff = s.diff
    else:
        if s.algebra != t.algebra.opposite():
            raise FieldMismatch("tensor: s must be right modules over t's algebra")
        out_alg = trivial_algebra(f)
        def right_act(p):
            return list(s.term(p).action)
        def left_out_action(p):
            return None
        sdeg = s.degrees()
        sdim = lambda p: s.term(p).dim
        sdiff = s.diff

    tdeg = t.degrees()
    if not sdeg or not tdeg:
        return BddComplex(out_alg, {}, {}, verify=False)
    squares = {}
    for p in sdeg:
        for q in tdeg:
            squares[(p, q)] = _TensorSquare(f, sdim(p), t.term(q).dim,
                                            right_act(p), list(t.term(q).action))
    # assemble total terms
    total: dict[int, list[tuple[int, int]]] = {}
    for p in sdeg:
        for q in tdeg:
            total.setdefault(p + q, []).append((p, q))
    for n in total:
        total[n].sort()
    terms = {}
    offsets = {}
    for n, pqs in sorted(total.items()):
        off = {}
        pos = 0
        for pq in pqs:
            off[pq] = pos
            pos += squares[pq].dim
        offsets[n] = off
        dim = pos
        if dim == 0:
            continue
        if out_alg.dim == 1 and left_out_action(pqs[0][0]) is None:
            terms[n] = module_over_trivial(f, dim)
        else:
            action = []
            for i in range(out_alg.dim):
                ent = [f.zero()] * (dim * dim)
                for pq in pqs:
                    sq = squares[pq]
                    la = left_out_action(pq[0])[i]
                    full = _kron(f, la, ExactMatrix.identity(f, t.term(pq[1]).dim))
                    m = sq.descend(sq, full)
                    o = off[pq]
                    for r in range(m.rows):
                        for c in range(m.cols):
                            ent[(o + r) * dim + (o + c)] = m.get(r, c)
                action.append(ExactMatrix(f, dim, dim, ent))
            terms[n] = LeftModule(out_alg, dim, action, verify=False)
    diffs = {}
    degrees = sorted(terms)
    for n in degrees:
        if (n + 1) not in offsets and n + 1 not in terms:
            tgt_dim = 0
        src_dim = terms[n].dim if n in terms else 0
        tgt_dim = terms[n + 1].dim if (n + 1) in terms else 0
        if src_dim == 0 or tgt_dim == 0:
            continue
        ent = [f.zero()] * (tgt_dim * src_dim)
        for pq in total.get(n, []):
            p, q = pq
            sq = squares[pq]
            o_src = offsets[n][pq]
            # dx (x) y : lands in (p+1, q)
            if (p + 1, q) in squares:
                sq2 = squares[(p + 1, q)]
                full = _kron(f, sdiff(p), ExactMatrix.identity(f, t.term(q).dim))
                m = sq.descend(sq2, full)
                o_tgt = offsets[n + 1][(p + 1, q)]
                for r in range(m.rows):
                    for c in range(m.cols):
                        x = m.get(r, c)
                        if x:
                            ent[(o_tgt + r) * src_dim + (o_src + c)] = f.add(
                                ent[(o_tgt + r) * src_dim + (o_src + c)], x)
            # (-1)^p x (x) dy : lands in (p, q+1)
            if (p, q + 1) in squares:
                sq2 = squares[(p, q + 1)]
                sign = f.coerce(-1 if p % 2 else 1)
                full = _kron(f, ExactMatrix.identity(f, sdim(p)),
                             t.diff(q)).scale(sign)
                m = sq.descend(sq2, full)
                o_tgt = offsets[n + 1][(p, q + 1)]
                for r in range(m.rows):
                    for c in range(m.cols):
                        x = m.get(r, c)
                        if x:
                            ent[(o_tgt + r) * src_dim + (o_src + c)] = f.add(
                                ent[(o_tgt + r) * src_dim + (o_src + c)], x)
        d = ExactMatrix(f, tgt_dim, src_dim, ent)
        if not d.is_zero():
            diffs[n] = d
    return BddComplex(out_alg, terms, diffs)


def hom_complexes(s, t: BddComplex) -> BddComplex:
    """Hom_A(S, T)^n = (+)_p Hom_A(S^p, T^{p+n}), (d phi) = d phi - (-1)^n phi d.

    If `s` is a BimoduleComplex the result carries the left structure induced
    from the right structure of s: (a . phi)(x) = phi(x . a). Otherwise the
    result is a complex of vector spaces over the trivial algebra.
    """
    f = t.algebra.field
    if isinstance(s, BimoduleComplex):
        if s.algebra_left != t.algebra:
            raise FieldMismatch("hom: left structure of s must match t's algebra")
        out_alg = s.algebra_right.opposite()   # (a.phi)(x) = phi(x.a): left over A_r^op
        s_left = s.res_left()
        def right_act(p, i):
            return s.terms[p].right_action[i]
        bimod = True
    else:
        if s.algebra != t.algebra:
            raise FieldMismatch("hom between complexes over different algebras")
        out_alg = trivial_algebra(f)
        s_left = s
        bimod = False

    sdeg = s_left.degrees()
    tdeg = t.degrees()
    if not sdeg or not tdeg:
        return BddComplex(out_alg, {}, {}, verify=False)
    # per (p, n): basis of Hom_A(S^p, T^{p+n})
    hom_bases = {}
    for p in sdeg:
        for q in tdeg:
            n = q - p
            hom_bases[(p, n)] = hom_basis(s_left.term(p), t.term(q))
    total: dict[int, list[int]] = {}
    for (p, n), basis in hom_bases.items():
        if basis:
            total.setdefault(n, []).append(p)
    for n in total:
        total[n].sort()
    terms = {}
    offsets = {}
    for n, ps in sorted(total.items()):
        off = {}
        pos = 0
        for p in ps:
            off[p] = pos
            pos += len(hom_bases[(p, n)])
        offsets[n] = off
        dim = pos
        if bimod:
            action = []
            for i in range(out_alg.dim):
                ent = [f.zero()] * (dim * dim)
                for p in ps:
                    basis = hom_bases[(p, n)]
                    ra = right_act(p, i)
                    o = off[p]
                    for c_idx, phi in enumerate(basis):
                        img = phi.mul(ra)
                        coords = _matrix_coords(f, basis, img)
                        for r_idx, cx in enumerate(coords):
                            if cx:
                                ent[(o + r_idx) * dim + (o + c_idx)] = cx
                action.append(ExactMatrix(f, dim, dim, ent))
            terms[n] = LeftModule(out_alg, dim, action, verify=False)
        else:
            terms[n] = module_over_trivial(f, dim)
    diffs = {}
    for n in sorted(terms):
        src_dim = terms[n].dim
        tgt_dim = terms[n + 1].dim if (n + 1) in terms else 0
        if src_dim == 0 or tgt_dim == 0:
            continue
        sign = f.coerce(-1 if n % 2 else 1)
        ent = [f.zero()] * (tgt_dim * src_dim)
        for p in total.get(n, []):
            basis = hom_bases[(p, n)]
            o_src = offsets[n][p]
            for c_idx, phi in enumerate(basis):
                # d_T \circ phi : component at p
                img1 = t.diff(p + n).mul(phi)
                if (p, n + 1) in hom_bases and hom_bases[(p, n + 1)] and not img1.is_zero():
                    coords = _matrix_coords(f, hom_bases[(p, n + 1)], img1)
                    o_tgt = offsets[n + 1][p]
                    for r_idx, cx in enumerate(coords):
                        if cx:
                            ent[(o_tgt + r_idx) * src_dim + (o_src + c_idx)] = f.add(
                                ent[(o_tgt + r_idx) * src_dim + (o_src + c_idx)], cx)
                # -(-1)^n phi \circ d_S : component at p-1
                img2 = phi.mul(s_left.diff(p - 1)).scale(f.neg(sign))
                if (p - 1, n + 1) in hom_bases and hom_bases[(p - 1, n + 1)] and not img2.is_zero():
                    coords = _matrix_coords(f, hom_bases[(p - 1, n + 1)], img2)
                    o_tgt = offsets[n + 1][p - 1]
                    for r_idx, cx in enumerate(coords):
                        if cx:
                            ent[(o_tgt + r_idx) * src_dim + (o_src + c_idx)] = f.add(
                                ent[(o_tgt + r_idx) * src_dim + (o_src + c_idx)], cx)
        d = ExactMatrix(f, tgt_dim, src_dim, ent)
        if not d.is_zero():
            diffs[n] = d
    return BddComplex(out_alg, terms, diffs)


def _matrix_coords(f: Field, basis: list[ExactMatrix], m: ExactMatrix) -> list:
    vecs = [b.entries for b in basis]
    coords = coords_in_span(f, vecs, m.entries, len(m.entries))
    if coords is None:
        raise HomalgError("matrix outside the span of the Hom basis")
    return coords


def dual_complex(c: BddComplex) -> BddComplex:
    """D(C) over the opposite algebra: D(C)^n = D(C^{-n}),
    d^n = (-1)^{n+1} (d_C^{-n-1})^T (the Hom(-, k) convention)."""
    op = c.algebra.opposite()
    f = c.algebra.field
    terms = {-n: m.dual() for n, m in c.terms.items()}
    diffs = {}
    for n in terms:
        d = c.diff(-n - 1)
        if d.rows and d.cols and not d.is_zero():
            diffs[n] = d.transpose().scale(f.coerce(-1 if (n + 1) % 2 else 1))
    return BddComplex(op, terms, diffs, verify=False)
