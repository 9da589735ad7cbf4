"""Minimal projective resolutions over a finite-dimensional algebra, by
iterated projective covers, and the Ext/Tor/injective machinery built on them.

Each step P_i is an explicit direct sum of indecomposable projectives A*e(s),
with the generator of every summand tracked as an element of A, so that
Hom(P_i, N) and W (x) P_i collapse to (+)_j e_j N and (+)_j W e_j without ever
solving an equivariance system.

Minimality (the differential lands in rad * P) makes dimension reads exact:
the resolution terminates by the cutoff if and only if the projective
dimension is its length.
"""
from __future__ import annotations

from .algebra import (Algebra, LeftModule, action_of_element, submodule_as_module,
                      quotient_module, zero_module)
from .complexes import BddComplex, ChainMap, single_module_complex
from .errors import HomalgError, WindowTooSmall
from .field import Field
from .matrix import (ExactMatrix, coords_in_span, span_basis, unit_vec,
                     vec_add, vec_is_zero, vec_scale, zero_vec)


class Step:
    """One stage P_i = (+)_j A e(slot_simple[j]), by explicit construction.

    basis_elems[j][t] is the element of A carrying basis vector (j, t), i.e.
    the vector equals basis_elems[j][t] * g_j where g_j is the j-th generator.
    """

    __slots__ = ("module", "slots", "basis_elems", "offsets", "gen_vectors")

    def __init__(self, algebra: Algebra, slots: list[int]):
        self.slots = list(slots)
        mods = [algebra.projective_module(s) for s in slots]
        self.basis_elems = [list(p.basis_in_algebra) for p in mods]
        cur = zero_module(algebra)
        for p in mods:
            cur = cur.direct_sum(p.module)
        self.module = cur
        self.offsets = []
        pos = 0
        for p in mods:
            self.offsets.append(pos)
            pos += p.module.dim
        f = algebra.field
        self.gen_vectors = []
        for j, p in enumerate(mods):
            v = [f.zero()] * self.module.dim
            for t, c in enumerate(p.generator):
                v[self.offsets[j] + t] = c
            self.gen_vectors.append(tuple(v))


class ProjResolution:
    """... -> P_1 -> P_0 --aug--> M, minimal unless padded."""

    __slots__ = ("algebra", "module", "steps", "diffs", "aug", "terminated", "depth")

    def __init__(self, algebra, module, steps, diffs, aug, terminated):
        self.algebra = algebra
        self.module = module
        self.steps = steps          # list[Step]
        self.diffs = diffs          # diffs[i]: P_i -> P_{i-1}, i >= 1
        self.aug = aug              # P_0 -> M
        self.terminated = terminated
        self.depth = len(steps) - 1

    def length(self) -> int:
        """Projective dimension when terminated (trailing zero steps dropped)."""
        if not self.terminated:
            raise HomalgError("resolution did not terminate; no finite length")
        d = self.depth
        while d >= 0 and self.steps[d].module.dim == 0:
            d -= 1
        return max(d, 0)

    def betti(self) -> list[int]:
        return [len(s.slots) for s in self.steps]

    def to_complex(self) -> tuple[BddComplex, ChainMap]:
        """The resolution as a complex in degrees [-depth, 0] with its map to M."""
        a = self.algebra
        terms = {}
        diffs = {}
        for i, s in enumerate(self.steps):
            if s.module.dim:
                terms[-i] = s.module
        for i in range(1, len(self.steps)):
            d = self.diffs[i]
            if not d.is_zero():
                diffs[-i] = d
        p = BddComplex(a, terms, diffs)
        tgt = single_module_complex(self.module, 0)
        f = ChainMap(p, tgt, {0: self.aug})
        return p, f


def _cover_data(m: LeftModule):
    """(slots, generator vectors in M) of the projective cover of M."""
    a = m.algebra
    f = a.field
    if m.dim == 0:
        return [], []
    rad = m.radical_subspace()
    top, reps = quotient_module(m, rad)
    slots = []
    gens = []
    for s in a.simples():
        e_mat = action_of_element(top, s.idempotent)
        img = e_mat.image_basis()
        for t in range(img.cols):
            coords = img.col(t)
            v = zero_vec(f, m.dim)
            for c, rep in zip(coords, reps):
                if c:
                    v = vec_add(f, v, vec_scale(f, c, rep))
            gens.append(m.act(s.idempotent, v))
            slots.append(s.index)
    return slots, gens


def _cover_matrix(step: Step, m: LeftModule, gens: list[tuple]) -> ExactMatrix:
    """Matrix of the map step.module -> M sending generator j to gens[j]."""
    f = m.algebra.field
    cols = []
    for j, elems in enumerate(step.basis_elems):
        for x in elems:
            cols.append(m.act(x, gens[j]) if m.dim else zero_vec(f, 0))
    if not cols:
        return ExactMatrix.zeros(f, m.dim, 0)
    return ExactMatrix.from_cols(f, cols, nrows=m.dim)


def minimal_projective_resolution(m: LeftModule, cutoff: int) -> ProjResolution:
    a = m.algebra
    f = a.field
    slots, gens = _cover_data(m)
    step0 = Step(a, slots)
    aug = _cover_matrix(step0, m, gens)
    if m.dim and aug.rank() != m.dim:
        raise HomalgError("projective cover is not surjective")
    steps = [step0]
    diffs = {}
    cur_step = step0
    cur_ker = [tuple(v) for v in aug.kernel_basis().columns()]
    terminated = not cur_ker
    depth = 0
    while not terminated and depth < cutoff:
        depth += 1
        syz = submodule_as_module(cur_step.module, cur_ker)
        s_slots, s_gens = _cover_data(syz)
        nstep = Step(a, s_slots)
        cov = _cover_matrix(nstep, syz, s_gens)
        if syz.dim and cov.rank() != syz.dim:
            raise HomalgError("syzygy cover is not surjective")
        # compose with the inclusion syzygy -> P_{depth-1}
        inc = (ExactMatrix.from_cols(f, cur_ker, nrows=cur_step.module.dim)
               if cur_ker else ExactMatrix.zeros(f, cur_step.module.dim, 0))
        d = inc.mul(cov)
        diffs[depth] = d
        steps.append(nstep)
        cur_step = nstep
        cur_ker = [tuple(v) for v in cov.kernel_basis().columns()]
        terminated = not cur_ker
    return ProjResolution(a, m, steps, diffs, aug, terminated)


def pad_contractible(res: ProjResolution, at_step: int = 0, slot: int = 0) -> ProjResolution:
    """A deliberately non-minimal resolution: splice cone(id_{Ae}) into steps
    at_step and at_step+1. Ext/Tor values must not change."""
    a = res.algebra
    f = a.field
    steps = list(res.steps)
    diffs = dict(res.diffs)
    while len(steps) <= at_step + 1:
        steps.append(Step(a, []))
        diffs.setdefault(len(steps) - 1, ExactMatrix.zeros(
            f, steps[-2].module.dim, 0))
    pdim = a.projective_module(slot).module.dim
    old_i = steps[at_step]
    old_i1 = steps[at_step + 1]
    new_i = Step(a, old_i.slots + [slot])
    new_i1 = Step(a, old_i1.slots + [slot])
    # maps: d'_{i+1} = [[d, 0], [0, id]], d'_i gets a zero block on the new summand
    def _block(dold, rpad, cpad, ident):
        rows = dold.rows + rpad
        cols = dold.cols + cpad
        ent = [f.zero()] * (rows * cols)
        for r in range(dold.rows):
            for c in range(dold.cols):
                ent[r * cols + c] = dold.get(r, c)
        if ident:
            for t in range(rpad):
                ent[(dold.rows + t) * cols + (dold.cols + t)] = f.one()
        return ExactMatrix(f, rows, cols, ent)

    d_i1 = diffs.get(at_step + 1, ExactMatrix.zeros(f, old_i.module.dim,
                                                    old_i1.module.dim))
    diffs[at_step + 1] = _block(d_i1, pdim, pdim, ident=True)
    if at_step >= 1:
        diffs[at_step] = _block(diffs[at_step], 0, pdim, ident=False)
    aug = res.aug
    if at_step == 0:
        aug = _block(res.aug, 0, pdim, ident=False)
    if at_step + 2 < len(steps):
        diffs[at_step + 2] = _block(diffs[at_step + 2], pdim, 0, ident=False)
    steps[at_step] = new_i
    steps[at_step + 1] = new_i1
    return ProjResolution(a, res.module, steps, diffs, aug, res.terminated)


# ---------------------------------------------------------------------------
# Hom(P_i, N) and W (x) P_i in collapsed coordinates
# ---------------------------------------------------------------------------


def _hom_space_bases(a: Algebra, step: Step, n: LeftModule):
    """Per-slot bases of e_j * N; Hom(P_i, N) = direct sum over slots."""
    out = []
    for j, s in enumerate(step.slots):
        e = a.simples()[s].idempotent
        img = action_of_element(n, e).image_basis()
        out.append([tuple(img.col(t)) for t in range(img.cols)])
    return out


def _hom_dim(bases) -> int:
    return sum(len(b) for b in bases)


def _hom_differential(a: Algebra, src_step: Step, tgt_step: Step,
                      d: ExactMatrix, n: LeftModule,
                      src_bases, tgt_bases) -> ExactMatrix:
    """Matrix of phi -> phi . d : Hom(P_{i-1}, N) -> Hom(P_i, N).

    src = Hom(P_{i-1}, N) coordinates, tgt = Hom(P_i, N) coordinates;
    d : P_i -> P_{i-1}.
    """
    f = a.field
    src_dim = _hom_dim(src_bases)
    tgt_dim = _hom_dim(tgt_bases)
    if src_dim == 0 or tgt_dim == 0:
        return ExactMatrix.zeros(f, tgt_dim, src_dim)
    cols = []
    for j_src, basis in enumerate(src_bases):
        for v in basis:
            # phi with phi(g_{j_src}) = v, zero on other generators
            col = []
            for j_tgt in range(len(tgt_step.slots)):
                w = d.apply(tgt_step.gen_vectors[j_tgt])  # d(g_j) in P_{i-1}
                # evaluate phi at w
                val = zero_vec(f, n.dim)
                for j2, elems in enumerate(src_step.basis_elems):
                    off = src_step.offsets[j2]
                    if j2 != j_src:
                        continue
                    for t, x in enumerate(elems):
                        c = w[off + t]
                        if c:
                            val = vec_add(f, val, vec_scale(f, c, n.act(x, v)))
                coords = coords_in_span(f, tgt_bases[j_tgt], val, n.dim)
                if coords is None:
                    raise HomalgError("Hom evaluation left the e_j N subspace")
                col.extend(coords)
            cols.append(col)
    return ExactMatrix.from_cols(f, cols, nrows=tgt_dim)


def ext_dims(m: LeftModule, n: LeftModule, imax: int, cutoff: int,
             res: ProjResolution | None = None) -> list[int]:
    """[dim Ext^0, ..., dim Ext^imax]. Certified: the resolution either
    terminates by the cutoff, or imax + 2 <= cutoff must hold."""
    if res is None:
        res = minimal_projective_resolution(m, cutoff)
    if not res.terminated and imax > cutoff - 2:
        raise WindowTooSmall(f"Ext^{imax} needs cutoff >= {imax + 2}")
    a = m.algebra
    bases = []
    for i in range(min(imax + 1, len(res.steps)) + 1):
        if i < len(res.steps):
            bases.append(_hom_space_bases(a, res.steps[i], n))
        else:
            bases.append([])
    dmats = []
    for i in range(1, len(bases)):
        if i < len(res.steps):
            dmats.append(_hom_differential(a, res.steps[i - 1], res.steps[i],
                                           res.diffs[i], n, bases[i - 1], bases[i]))
        else:
            dmats.append(ExactMatrix.zeros(a.field, 0, _hom_dim(bases[i - 1])))
    out = []
    for i in range(imax + 1):
        if i >= len(res.steps):
            out.append(0)
            continue
        dim_i = _hom_dim(bases[i])
        rank_out = dmats[i].rank() if i < len(dmats) else 0
        rank_in = dmats[i - 1].rank() if i >= 1 else 0
        out.append(dim_i - rank_out - rank_in)
    return out


def ext_module(m: LeftModule, n: LeftModule, i: int, cutoff: int) -> int:
    if i < 0:
        return 0
    return ext_dims(m, n, i, cutoff)[i]


def _tensor_space_bases(a: Algebra, step: Step, w: LeftModule):
    """Per-slot bases of W e_j, W a right module (left module over A^op)."""
    if w.algebra != a.opposite():
        raise HomalgError("tensor side must be a module over the opposite algebra")
    out = []
    for s in step.slots:
        e = a.simples()[s].idempotent
        img = action_of_element(w, e).image_basis()
        out.append([tuple(img.col(t)) for t in range(img.cols)])
    return out


def _tensor_differential(a: Algebra, src_step: Step, tgt_step: Step,
                         d: ExactMatrix, w: LeftModule,
                         src_bases, tgt_bases) -> ExactMatrix:
    """W (x) P_i -> W (x) P_{i-1} induced by d; src = slot coords of W (x) P_i."""
    f = a.field
    src_dim = _hom_dim(src_bases)
    tgt_dim = _hom_dim(tgt_bases)
    if src_dim == 0 or tgt_dim == 0:
        return ExactMatrix.zeros(f, tgt_dim, src_dim)
    cols = []
    for j_src, basis in enumerate(src_bases):
        for v in basis:
            # v (x) g_{j_src} |-> v (x) d(g_{j_src}) = sum v.x (x) g_{j'}
            img = d.apply(src_step.gen_vectors[j_src])
            acc = [zero_vec(f, w.dim) for _ in tgt_step.slots]
            for j2, elems in enumerate(tgt_step.basis_elems):
                off = tgt_step.offsets[j2]
                for t, x in enumerate(elems):
                    c = img[off + t]
                    if c:
                        acc[j2] = vec_add(f, acc[j2], vec_scale(f, c, w.act(x, v)))
            col = []
            for j2 in range(len(tgt_step.slots)):
                coords = coords_in_span(f, tgt_bases[j2], acc[j2], w.dim)
                if coords is None:
                    raise HomalgError("tensor evaluation left the W e_j subspace")
                col.extend(coords)
            cols.append(col)
    return ExactMatrix.from_cols(f, cols, nrows=tgt_dim)


def tor_dims(w: LeftModule, n: LeftModule, imax: int, cutoff: int,
             res: ProjResolution | None = None) -> list[int]:
    """[dim Tor_0, ..., dim Tor_imax]; w is a right module given over A^op."""
    if res is None:
        res = minimal_projective_resolution(n, cutoff)
    if not res.terminated and imax > cutoff - 2:
        raise WindowTooSmall(f"Tor_{imax} needs cutoff >= {imax + 2}")
    a = n.algebra
    bases = []
    for i in range(min(imax + 1, len(res.steps)) + 1):
        if i < len(res.steps):
            bases.append(_tensor_space_bases(a, res.steps[i], w))
        else:
            bases.append([])
    dmats = []  # dmats[i]: W(x)P_{i+1} -> W(x)P_i
    for i in range(len(bases) - 1):
        if i + 1 < len(res.steps):
            dmats.append(_tensor_differential(a, res.steps[i + 1], res.steps[i],
                                              res.diffs[i + 1], w,
                                              bases[i + 1], bases[i]))
        else:
            dmats.append(ExactMatrix.zeros(a.field, _hom_dim(bases[i]), 0))
    out = []
    for i in range(imax + 1):
        if i >= len(res.steps):
            out.append(0)
            continue
        dim_i = _hom_dim(bases[i])
        rank_in = dmats[i].rank() if i < len(dmats) else 0
        rank_out = dmats[i - 1].rank() if i >= 1 else 0
        out.append(dim_i - rank_in - rank_out)
    return out


def tor_module(w: LeftModule, n: LeftModule, i: int, cutoff: int) -> int:
    if i < 0:
        return 0
    return tor_dims(w, n, i, cutoff)[i]


# ---------------------------------------------------------------------------
# injective side, through the duality D = Hom_K(-, K)
# ---------------------------------------------------------------------------


def injective_resolution_of_module(m: LeftModule, cutoff: int):
    """(complex I in degrees [0, depth], chain map M -> I, op-side resolution).

    I = D(minimal projective resolution of D(M) over A^op); terms are the
    indecomposable injectives D(e A)."""
    a = m.algebra
    dm = m.dual()
    res = minimal_projective_resolution(dm, cutoff)
    f = a.field
    terms = {}
    diffs = {}
    for i, s in enumerate(res.steps):
        if s.module.dim:
            # D of a module over A^op is a module over (A^op)^op == A
            terms[i] = LeftModule(a, s.module.dim,
                                  [mm.transpose() for mm in s.module.action],
                                  verify=False)
    for i in range(1, len(res.steps)):
        d = res.diffs[i]
        if not d.is_zero():
            diffs[i - 1] = d.transpose()
    icx = BddComplex(a, terms, diffs)
    aug = ChainMap(single_module_complex(m, 0), icx, {0: res.aug.transpose()})
    return icx, aug, res


def projective_resolution(m: LeftModule, cutoff: int, minimal: bool = True):
    """Public surface: (BddComplex in degrees [-depth, 0], ChainMap into m)."""
    res = minimal_projective_resolution(m, cutoff)
    if not minimal:
        res = pad_contractible(res)
    return res.to_complex()


def injective_resolution(m: LeftModule, cutoff: int):
    icx, aug, _ = injective_resolution_of_module(m, cutoff)
    return icx, aug
