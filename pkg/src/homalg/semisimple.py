"""Jacobson radical, simple modules and primitive idempotents.

The radical comes either from a certificate attached at construction (quiver
algebras: the span of the positive-length paths, verified nilpotent with
semisimple quotient) or from the trace bilinear form of the regular
representation. The trace criterion is valid over Q always and over F_p only
for p > dim(A) (Dickson); below that the operation refuses rather than guess.

Simples are computed in the split case only: the semisimple quotient is cut
into blocks along the primitive idempotents of its center, each block must be
a full matrix algebra over the base field, and anything else is rejected as
NonSplitSemisimple.
"""
from __future__ import annotations

from .algebra import Algebra, LeftModule, SimpleData
from .errors import HomalgError, NonSplitSemisimple, UnsupportedCharacteristic
from .field import Field
from .matrix import (ExactMatrix, coords_in_span, quotient_reps, span_basis,
                     unit_vec, vec_add, vec_is_zero, vec_scale, zero_vec)

# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def _poly_trim(f: Field, p):
    while p and p[-1] == f.zero():
        p.pop()
    return p


def _poly_mul(f: Field, a, b):
    if not a or not b:
        return []
    out = [f.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
    return _poly_trim(f, out)


def _poly_divmod(f: Field, a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = f.inv(lb)
    q = [f.zero()] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = f.mul(a[-1], inv)
        d = len(a) - 1 - db
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = f.sub(a[d + i], f.mul(c, y))
        _poly_trim(f, a)
        if not a:
            break
    return _poly_trim(f, q), a


def _poly_gcd(f: Field, a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(f, a, b)
        a, b = b, r
    if a:
        inv = f.inv(a[-1])
        a = [f.mul(inv, c) for c in a]
    return a


def _poly_eval(f: Field, p, x):
    acc = f.zero()
    for c in reversed(p):
        acc = f.add(f.mul(acc, x), c)
    return acc


def _poly_pow_mod(f: Field, base, e: int, mod):
    result = [f.one()]
    base = _poly_divmod(f, base, mod)[1]
    while e:
        if e & 1:
            result = _poly_divmod(f, _poly_mul(f, result, base), mod)[1]
        base = _poly_divmod(f, _poly_mul(f, base, base), mod)[1]
        e >>= 1
    return result


def minimal_polynomial(f: Field, T: ExactMatrix):
    """Minimal polynomial of a square matrix, via per-vector annihilators."""
    n = T.rows
    if n == 0:
        return [f.one()]
    mp = [f.one()]
    for s in range(n):
        v = unit_vec(f, n, s)
        krylov = [v]
        while True:
            w = T.apply(krylov[-1])
            coords = coords_in_span(f, krylov, w, n)
            if coords is not None:
                ann = [f.neg(c) for c in coords] + [f.one()]
                break
            krylov.append(w)
        g = _poly_gcd(f, mp, ann)
        q, _ = _poly_divmod(f, ann, g)
        mp = _poly_mul(f, mp, q)  # lcm
    return mp


def _int_divisors(n: int):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _roots_q(f: Field, poly):
    """Rational roots with multiplicity. Returns (roots, fully_split)."""
    from fractions import Fraction
    p = list(poly)
    roots = []
    while len(p) > 1 and p[0] == 0:
        roots.append(Fraction(0))
        p = p[1:]
    # clear denominators
    while len(p) > 1:
        den = 1
        for c in p:
            den = den * c.denominator // _gcd_int(den, c.denominator)
        ip = [int(c * den) for c in p]
        g = 0
        for c in ip:
            g = _gcd_int(g, c)
        if g > 1:
            ip = [c // g for c in ip]
        found = None
        for qd in _int_divisors(ip[-1]):
            for pd in _int_divisors(ip[0]):
                for sign in (1, -1):
                    cand = Fraction(sign * pd, qd)
                    if _poly_eval(f, p, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        p, r = _poly_divmod(f, p, [-found, Fraction(1)])
        assert not r
    return roots, len(p) <= 1


def _gcd_int(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b)


def _poly_sub(f: Field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else f.zero()
        y = b[i] if i < len(b) else f.zero()
        out.append(f.sub(x, y))
    return _poly_trim(f, out)


def _roots_p(f: Field, poly, rng_seed: int = 20359):
    """Roots in F_p with multiplicity: gcd with t^p - t, then split."""
    import random
    p = f.p
    mp = [f.mul(f.inv(poly[-1]), c) for c in poly]
    if len(mp) <= 1:
        return [], True
    tp = _poly_pow_mod(f, [f.zero(), f.one()], p, mp)  # t^p mod poly
    tp_minus_t = _poly_sub(f, tp, [f.zero(), f.one()])
    g = _poly_gcd(f, mp, tp_minus_t)
    distinct = _find_roots_of_split_poly(f, g, random.Random(rng_seed))
    roots = []
    work = list(mp)
    for r in sorted(distinct):
        while True:
            q, rem = _poly_divmod(f, work, [f.neg(r), f.one()])
            if rem:
                break
            roots.append(r)
            work = q
    return roots, len(work) <= 1


def _find_roots_of_split_poly(f: Field, g, rng):
    """All roots of a squarefree product of linear factors over F_p."""
    p = f.p
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [f.mul(f.neg(g[0]), f.inv(g[1]))]
    if p <= 4096:
        return [x for x in range(p) if _poly_eval(f, g, x) == 0]
    # Cantor-Zassenhaus degree-one splitting, deterministic seed
    for _ in range(200):
        c = rng.randrange(p)
        h = _poly_pow_mod(f, [c, 1], (p - 1) // 2, g)
        h = _poly_sub(f, h, [f.one()])
        d = _poly_gcd(f, g, h)
        if 0 < len(d) - 1 < len(g) - 1:
            q, _ = _poly_divmod(f, g, d)
            return _find_roots_of_split_poly(f, d, rng) + _find_roots_of_split_poly(f, q, rng)
    raise HomalgError("root splitting failed to converge")


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------


def _ideal_is_nilpotent(a: Algebra, basis: list[tuple]) -> bool:
    f = a.field
    power = list(basis)
    for _ in range(a.dim + 1):
        if not power:
            return True
        nxt = []
        for x in power:
            for y in basis:
                nxt.append(a.mult(x, y))
        power = span_basis(f, nxt, a.dim)
    return False


def _is_two_sided_ideal(a: Algebra, basis: list[tuple]) -> bool:
    f = a.field
    for x in basis:
        for i in range(a.dim):
            e = unit_vec(f, a.dim, i)
            for prod in (a.mult(e, x), a.mult(x, e)):
                if coords_in_span(f, basis, prod, a.dim) is None:
                    return False
    return True


def compute_radical(a: Algebra) -> list[tuple]:
    if a._radical_cert is not None:
        basis = [tuple(a.field.coerce(c) for c in v) for v in a._radical_cert]
        return basis
    f = a.field
    if f.p is not None and f.p <= a.dim:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs p > dim; got p={f.p}, dim={a.dim}; "
            "construct the algebra from a quiver presentation to attach a certified radical")
    n = a.dim
    # tvec[k] = trace of left multiplication by e_k
    tvec = []
    for k in range(n):
        s = f.zero()
        for j in range(n):
            s = f.add(s, a.sc[k][j][j])
        tvec.append(s)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            s = f.zero()
            for k, c in enumerate(a.sc[i][j]):
                if c:
                    s = f.add(s, f.mul(c, tvec[k]))
            row.append(s)
        gram.append(row)
    ker = ExactMatrix.from_rows(f, gram).kernel_basis()
    basis = [tuple(col) for col in ker.columns()]
    if not _is_two_sided_ideal(a, basis) or not _ideal_is_nilpotent(a, basis):
        raise HomalgError("trace-form kernel failed the ideal/nilpotency verification")
    return basis


# ---------------------------------------------------------------------------
# semisimple quotient, split detection, simples, idempotent lifting
# ---------------------------------------------------------------------------


class _QuotientAlgebra:
    """S = A/J with a chosen linear section; not registered as a full Algebra
    until structure constants are assembled."""

    def __init__(self, a: Algebra):
        f = a.field
        self.parent = a
        self.radical = a.radical_basis()
        full = [unit_vec(f, a.dim, i) for i in range(a.dim)]
        self.reps = quotient_reps(f, self.radical, full, a.dim)
        self.dim = len(self.reps)
        self.amb = list(self.radical) + list(self.reps)
        sc = []
        for x in self.reps:
            plane = []
            for y in self.reps:
                prod = a.mult(x, y)
                coords = coords_in_span(f, self.amb, prod, a.dim)
                plane.append(tuple(coords[len(self.radical):]))
            sc.append(tuple(plane))
        unit = self.project(a.unit)
        self.algebra = Algebra(f, sc, unit, verify=False)

    def project(self, x) -> tuple:
        coords = coords_in_span(self.parent.field, self.amb, x, self.parent.dim)
        return tuple(coords[len(self.radical):])

    def lift(self, xbar) -> tuple:
        f = self.parent.field
        out = zero_vec(f, self.parent.dim)
        for c, rep in zip(xbar, self.reps):
            if c:
                out = vec_add(f, out, vec_scale(f, c, rep))
        return out


def _center_basis(s: Algebra) -> list[tuple]:
    f = s.field
    n = s.dim
    if n == 0:
        return []
    rows = []
    for i in range(n):
        e = unit_vec(f, n, i)
        li = s.left_mult_matrix(e)
        ri = s.right_mult_matrix(e)
        diff = li.sub(ri)
        for r in range(n):
            rows.append(list(diff.row(r)))
    ker = ExactMatrix.from_rows(f, rows).kernel_basis()
    return [tuple(c) for c in ker.columns()]


def _split_center_idempotents(s: Algebra) -> list[tuple]:
    """Primitive idempotents of the center of a split semisimple algebra."""
    f = s.field
    center = _center_basis(s)
    m = len(center)
    # components: bases (lists of vectors in S-coords) of a common-eigenspace
    # refinement of the center acting on itself
    comps = [list(center)]
    for z in center:
        lz = s.left_mult_matrix(z)
        new_comps = []
        for comp in comps:
            if len(comp) == 1:
                new_comps.append(comp)
                continue
            # restrict L_z to span(comp)
            cols = []
            for v in comp:
                coords = coords_in_span(f, comp, lz.apply(v), s.dim)
                if coords is None:
                    raise HomalgError("center not closed under center action")
                cols.append(coords)
            T = ExactMatrix.from_cols(f, cols, nrows=len(comp))
            mp = minimal_polynomial(f, T)
            if f.p is None:
                roots, split = _roots_q(f, mp)
            else:
                roots, split = _roots_p(f, mp)
            if not split:
                raise NonSplitSemisimple(
                    "center has a non-linear irreducible factor over the base field")
            for lam in sorted(set(roots)):
                shifted = T.sub(ExactMatrix.identity(f, len(comp)).scale(lam))
                ker = shifted.kernel_basis()
                if ker.cols == 0:
                    continue
                sub = []
                for kc in ker.columns():
                    w = zero_vec(f, s.dim)
                    for c, v in zip(kc, comp):
                        if c:
                            w = vec_add(f, w, vec_scale(f, c, v))
                    sub.append(w)
                new_comps.append(span_basis(f, sub, s.dim))
        comps = new_comps
    idems = []
    for comp in comps:
        if len(comp) != 1:
            raise NonSplitSemisimple("center refinement left a component of dim > 1")
        v = comp[0]
        v2 = s.mult(v, v)
        lam_coords = coords_in_span(f, [v], v2, s.dim)
        if lam_coords is None or lam_coords[0] == f.zero():
            raise HomalgError("degenerate central component")
        idems.append(vec_scale(f, f.inv(lam_coords[0]), v))
    for e in idems:
        assert s.mult(e, e) == e
    return idems


def _isqrt(n: int) -> int:
    import math
    r = math.isqrt(n)
    return r


def _block_simple_and_idempotent(s: Algebra, fcent: tuple):
    """For the block f*S: (basis of block, simple module basis, idempotent in S)."""
    f = s.field
    lf = s.left_mult_matrix(fcent)
    block = span_basis(f, [lf.apply(unit_vec(f, s.dim, i)) for i in range(s.dim)], s.dim)
    d = len(block)
    n = _isqrt(d)
    if n * n != d:
        raise NonSplitSemisimple(f"block dimension {d} is not a perfect square")
    if n == 1:
        return block, [fcent], fcent
    # hunt for a rank-one element: dim(S x) == n
    candidates = list(block)
    for i in range(len(block)):
        for j in range(i + 1, len(block)):
            candidates.append(vec_add(f, block[i], block[j]))
            candidates.append(vec_add(f, block[i], vec_scale(f, f.neg(f.one()), block[j])))
    best = None
    for x in candidates:
        if vec_is_zero(f, x):
            continue
        img = span_basis(f, [s.mult(b, x) for b in block], s.dim)
        if len(img) == n:
            best = (x, img)
            break
    if best is None:
        raise NonSplitSemisimple("no rank-one element found in a matrix block")
    x, left_ideal = best
    # solve x y x = x for y in the block
    cols = []
    for b in block:
        cols.append(s.mult(s.mult(x, b), x))
    M = ExactMatrix.from_cols(f, cols, nrows=s.dim)
    sol = M.solve(ExactMatrix.from_cols(f, [x], nrows=s.dim))
    if sol is None:
        raise NonSplitSemisimple("rank-one normalization unsolvable")
    y = zero_vec(f, s.dim)
    for t, b in enumerate(block):
        c = sol.get(t, 0)
        if c:
            y = vec_add(f, y, vec_scale(f, c, b))
    e = s.mult(y, x)
    assert s.mult(e, e) == e
    return block, left_ideal, e


def _lift_idempotent(a: Algebra, x: tuple) -> tuple:
    """Newton lift along the nilpotent radical: e <- 3e^2 - 2e^3."""
    f = a.field
    e = x
    for _ in range(a.dim + 4):
        e2 = a.mult(e, e)
        if e2 == e:
            return e
        e3 = a.mult(e2, e)
        e = vec_add(f, vec_scale(f, f.coerce(3), e2), vec_scale(f, f.coerce(-2), e3))
    raise HomalgError("idempotent lifting did not converge")


def compute_simples(a: Algebra) -> list[SimpleData]:
    f = a.field
    if a._idem_cert is not None:
        idems = [tuple(f.coerce(c) for c in v) for v in a._idem_cert]
        return _simples_from_idempotents(a, idems)
    q = _QuotientAlgebra(a)
    s = q.algebra
    cents = _split_center_idempotents(s)
    records = []
    sq_sum = 0
    lifted: list[tuple] = []
    for fcent in cents:
        block, left_ideal, ebar = _block_simple_and_idempotent(s, fcent)
        nblk = _isqrt(len(block))
        sq_sum += nblk * nblk
        # lift ebar through the section, orthogonal to everything lifted so far
        cand = q.lift(ebar)
        for eprev in lifted:
            # corner trick keeps orthogonality automatic
            one_minus = vec_add(f, a.unit, vec_scale(f, f.neg(f.one()), eprev))
            cand = a.mult(a.mult(one_minus, cand), one_minus)
        e = _lift_idempotent(a, cand)
        lifted.append(e)
        records.append((e, left_ideal, nblk))
    if sq_sum != s.dim:
        raise NonSplitSemisimple(
            f"sum of squared block sizes {sq_sum} != dim of semisimple quotient {s.dim}")
    out = []
    for idx, (e, left_ideal, nblk) in enumerate(records):
        mod = _simple_module_from_ideal(a, q, left_ideal)
        out.append(SimpleData(mod, e, nblk, idx))
    return out


def _simple_module_from_ideal(a: Algebra, q: _QuotientAlgebra, ideal_basis) -> LeftModule:
    f = a.field
    s = q.algebra
    action = []
    for i in range(a.dim):
        abar = q.project(unit_vec(f, a.dim, i))
        cols = []
        for v in ideal_basis:
            w = s.mult(abar, v)
            coords = coords_in_span(f, ideal_basis, w, s.dim)
            if coords is None:
                raise HomalgError("minimal left ideal not action-invariant")
            cols.append(coords)
        action.append(ExactMatrix.from_cols(f, cols, nrows=len(ideal_basis)))
    return LeftModule(a, len(ideal_basis), action, verify=False)


def _simples_from_idempotents(a: Algebra, idems: list[tuple]) -> list[SimpleData]:
    """Certified path: idems are orthogonal primitive idempotents, one per simple,
    and A/J is split with 1-dimensional blocks (quiver algebras)."""
    f = a.field
    rad = a.radical_basis()
    out = []
    for idx, e in enumerate(idems):
        assert a.mult(e, e) == e
        # S_e = top of A*e: (A e)/(J intersect A e); for a 1-dim block this is 1-dim
        re = a.right_mult_matrix(e)
        pbasis = [tuple(c) for c in re.image_basis().columns()]
        radp = span_basis(f, [v for v in
                              (a.mult(r, x) for r in rad for x in pbasis)], a.dim)
        reps = quotient_reps(f, radp, pbasis, a.dim)
        if len(reps) != 1:
            raise NonSplitSemisimple("certified idempotent has a non-simple top")
        amb = list(radp) + reps
        action = []
        for i in range(a.dim):
            w = a.mult(unit_vec(f, a.dim, i), reps[0])
            coords = coords_in_span(f, amb, w, a.dim)
            if coords is None:
                # action leaves A*e: project through the full module structure
                raise HomalgError("top representative escaped its projective")
            action.append(ExactMatrix(f, 1, 1, [coords[len(radp)]]))
        mod = LeftModule(a, 1, action, verify=False)
        out.append(SimpleData(mod, e, 1, idx))
    return out


def radical(a: Algebra) -> list[tuple]:
    return a.radical_basis()


def simple_modules(a: Algebra) -> list[LeftModule]:
    return a.simple_modules()
