"""Semiprojective resolutions over a non-positive DG-ring B, presented by
cells, and the derived functors (dg Ext/Tor) and module lifting built on them.

A resolution is a list of cells (degree d_j, idempotent e_j), each standing
for a shifted direct summand B e_j of the free module, a triangular cell
differential delta(g_j) = sum_k b_jk g_k with b_jk in e_j B e_k, and a
comparison map g_j -> v_j into the target. Cells are attached stage by stage
to kill the top cohomology of the mapping cone; with generators chosen
minimally (a basis of the top of the cone cohomology over H^0(B)) the
differential lands in the radical, Hom into a simple has zero differential,
and the cell degrees read off projective dimensions exactly.

The ring must satisfy im(d^{-1}) = 0 (true for every trivial extension with
sup(M) < 0 and for degree-0 rings), so that B^0 = H^0(B) on the nose and the
primitive idempotents of H^0(B) are already idempotents of B.
"""
from __future__ import annotations

from .algebra import (Algebra, LeftModule, action_of_element, zero_module)
from .complexes import BddComplex, ChainMap, cohomology_data, cohomology_dim
from .dg import DGModule, DGModuleMap, DGRing, h0, module_in_degree_zero
from .errors import (CutoffTooSmall, HomalgError, NotFiniteProjDim,
                     WindowTooSmall)
from .matrix import (ExactMatrix, coords_in_span, unit_vec, vec_add,
                     vec_is_zero, vec_scale, zero_vec)
from .resolve import _cover_data, minimal_projective_resolution


class CellContext:
    """Per-ring data: H^0(B) with its simples, and bases of B^p e per
    (idempotent, degree)."""

    def __init__(self, b: DGRing):
        self.b = b
        if b.dim(-1) and not b.diff_mat(-1).is_zero():
            raise HomalgError(
                "cell engine needs im(d^{-1}) = 0 (trivial extensions with "
                "sup < 0 and degree-0 rings qualify)")
        if b.is_degree_zero() and "algebra" in b.meta:
            self.algebra = b.meta["algebra"]
        else:
            self.algebra = h0(b)
        if self.algebra.dim != b.dim(0):
            raise HomalgError("B^0 does not coincide with H^0(B)")
        self.simples = self.algebra.simples()
        self.idems = [s.idempotent for s in self.simples]
        self._be = {}

    def be_basis(self, idem_idx: int, p: int) -> list[tuple]:
        """Basis of B^p e (vectors in B^p coordinates)."""
        key = (idem_idx, p)
        if key not in self._be:
            b = self.b
            f = b.field
            n = b.dim(p)
            if n == 0:
                self._be[key] = []
            else:
                e = self.idems[idem_idx]
                cols = [b.mult_vec(p, unit_vec(f, n, t), 0, e) for t in range(n)]
                m = ExactMatrix.from_cols(f, cols, nrows=n)
                self._be[key] = [tuple(c) for c in m.image_basis().columns()]
        return self._be[key]

    def radical_coords(self, v: tuple):
        """Coordinates of a degree-0 vector in the radical, or None."""
        rad = self.algebra.radical_basis()
        return coords_in_span(self.b.field, rad, v, self.algebra.dim)


_ctx_cache: dict[int, CellContext] = {}


def cell_context(b: DGRing) -> CellContext:
    key = id(b)
    if key not in _ctx_cache:
        _ctx_cache[key] = CellContext(b)
    return _ctx_cache[key]


class CellComplex:
    """A semiprojective DG-module F = (+)_j B e_j [cells], with an optional
    comparison map into a target DG-module."""

    def __init__(self, ctx: CellContext, target: DGModule | None = None):
        self.ctx = ctx
        self.cells = []        # list of (degree, idem_idx)
        self.delta = []        # delta[j] = list of (k, coeff vector in B^{d_j+1-d_k})
        self.images = []       # images[j] = vector in target^{d_j} (or None)
        self.target = target
        self.terminated = False
        self.exact_above = None   # cone cohomology vanishes in degrees > this
        self.meta = {}
        self._assembled = None

    # ---- bookkeeping ----

    def add_cell(self, degree: int, idem_idx: int, delta, image) -> int:
        self.cells.append((degree, idem_idx))
        self.delta.append(list(delta))
        self.images.append(image)
        self._assembled = None
        return len(self.cells) - 1

    def cell_degrees(self) -> list[int]:
        return [d for d, _ in self.cells]

    def min_cell_degree(self) -> int:
        return min((d for d, _ in self.cells), default=0)

    def piece_layout(self, n: int):
        """[(cell j, ring degree p, basis of B^p e_j, offset)] for F^n."""
        out = []
        pos = 0
        for j, (d, s) in enumerate(self.cells):
            p = n - d
            if p > 0:
                continue
            basis = self.ctx.be_basis(s, p)
            if basis:
                out.append((j, p, basis, pos))
                pos += len(basis)
        return out

    def piece_dim(self, n: int) -> int:
        lay = self.piece_layout(n)
        if not lay:
            return 0
        j, p, basis, pos = lay[-1]
        return pos + len(basis)

    # ---- assembly as a DGModule + comparison map ----

    def assemble(self):
        """(F as DGModule, comparison DGModuleMap or None)."""
        if self._assembled is not None:
            return self._assembled
        b = self.ctx.b
        f = b.field
        degrees = set()
        for d, _ in self.cells:
            for p in b.degrees():
                degrees.add(d + p)
        dims = {n: self.piece_dim(n) for n in degrees}
        dims = {n: m for n, m in dims.items() if m}
        action = {}
        for s_deg in b.degrees():
            for n in sorted(dims):
                out_n = s_deg + n
                out_dim = self.piece_dim(out_n)
                if out_dim == 0 or dims.get(n, 0) == 0:
                    continue
                tensor = []
                lay_n = self.piece_layout(n)
                lay_out = self.piece_layout(out_n)
                for i in range(b.dim(s_deg)):
                    e_i = unit_vec(f, b.dim(s_deg), i)
                    row = []
                    for (j, p, basis, off) in lay_n:
                        for w in basis:
                            prod = b.mult_vec(s_deg, e_i, p, w)
                            vec = [f.zero()] * out_dim
                            if not vec_is_zero(f, prod):
                                placed = False
                                for (j2, p2, basis2, off2) in lay_out:
                                    if j2 == j and p2 == s_deg + p:
                                        coords = coords_in_span(
                                            f, basis2, prod, b.dim(p2))
                                        if coords is None:
                                            raise HomalgError(
                                                "product left B^p e")
                                        for t, c in enumerate(coords):
                                            vec[off2 + t] = c
                                        placed = True
                                        break
                                if not placed:
                                    raise HomalgError("action block missing")
                            row.append(tuple(vec))
                    tensor.append(tuple(row))
                action[(s_deg, n)] = tensor
        diff = {}
        for n in sorted(dims):
            src = self.piece_layout(n)
            tgt = self.piece_layout(n + 1)
            tgt_dim = self.piece_dim(n + 1)
            if not src or tgt_dim == 0:
                continue
            cols = []
            for (j, p, basis, off) in src:
                for w in basis:
                    col = [f.zero()] * tgt_dim
                    # d_B(w) . g_j
                    dw = b.diff_mat(p).apply(w) if b.dim(p + 1) else None
                    if dw is not None and not vec_is_zero(f, dw):
                        for (j2, p2, basis2, off2) in tgt:
                            if j2 == j and p2 == p + 1:
                                coords = coords_in_span(f, basis2, dw, b.dim(p2))
                                if coords is None:
                                    raise HomalgError("d_B(w) left B^p e")
                                for t, c in enumerate(coords):
                                    col[off2 + t] = f.add(col[off2 + t], c)
                    # (-1)^p w . delta(g_j)
                    sgn = f.coerce(-1 if p % 2 else 1)
                    for (k, coeff) in self.delta[j]:
                        dk, sk = self.cells[k]
                        q = p + (self.cells[j][0] + 1 - dk)  # ring degree of w*coeff
                        prod = b.mult_vec(p, w, self.cells[j][0] + 1 - dk, coeff)
                        if vec_is_zero(f, prod):
                            continue
                        prod = vec_scale(f, sgn, prod)
                        for (j2, p2, basis2, off2) in tgt:
                            if j2 == k and p2 == q:
                                coords = coords_in_span(f, basis2, prod, b.dim(p2))
                                if coords is None:
                                    raise HomalgError("w delta left B^p e")
                                for t, c in enumerate(coords):
                                    col[off2 + t] = f.add(col[off2 + t], c)
                    cols.append(col)
            m = ExactMatrix.from_cols(f, cols, nrows=tgt_dim)
            if not m.is_zero():
                diff[n] = m
        fmod = DGModule(b, dims, action, diff, verify=False)
        fmap = None
        if self.target is not None:
            comps = {}
            for n in sorted(dims):
                lay = self.piece_layout(n)
                tdim = self.target.dim(n)
                cols = []
                for (j, p, basis, off) in lay:
                    dj = self.cells[j][0]
                    vj = self.images[j]
                    for w in basis:
                        if vj is None or vec_is_zero(f, vj):
                            cols.append(zero_vec(f, tdim))
                        else:
                            cols.append(self.target.act_vec(p, w, dj, vj))
                if cols:
                    m = ExactMatrix.from_cols(f, cols, nrows=tdim)
                    comps[n] = m
            fmap = DGModuleMap(fmod, self.target, comps, verify=False)
        self._assembled = (fmod, fmap)
        return self._assembled

    # ---- the restriction of everything to complexes over H^0(B) ----

    def cone_complex(self) -> BddComplex:
        """cone(F -> target) as a complex of H^0(B)-modules."""
        a = self.ctx.algebra
        b = self.ctx.b
        f = b.field
        fmod, fmap = self.assemble()
        tgt = self.target
        degrees = sorted(set(d - 1 for d in fmod.degrees()) | set(tgt.degrees()))
        terms = {}
        diffs = {}
        for n in degrees:
            fdim = fmod.dim(n + 1)
            tdim = tgt.dim(n)
            dim = fdim + tdim
            if dim == 0:
                continue
            action = []
            for i in range(a.dim):
                ei = unit_vec(f, a.dim, i)
                ent = [f.zero()] * (dim * dim)
                fm = _deg0_action_matrix(fmod, ei, n + 1)
                tm = _deg0_action_matrix(tgt, ei, n)
                for r in range(fdim):
                    for c in range(fdim):
                        ent[r * dim + c] = fm.get(r, c)
                for r in range(tdim):
                    for c in range(tdim):
                        ent[(fdim + r) * dim + (fdim + c)] = tm.get(r, c)
                action.append(ExactMatrix(f, dim, dim, ent))
            terms[n] = LeftModule(a, dim, action, verify=False)
        for n in degrees:
            src_f, src_t = fmod.dim(n + 1), tgt.dim(n)
            tgt_f, tgt_t = fmod.dim(n + 2), tgt.dim(n + 1)
            rows = tgt_f + tgt_t
            cols = src_f + src_t
            if rows == 0 or cols == 0:
                continue
            ent = [f.zero()] * (rows * cols)
            df = fmod.diff_mat(n + 1)
            for r in range(tgt_f):
                for c in range(src_f):
                    ent[r * cols + c] = f.neg(df.get(r, c))
            fc = fmap.comp(n + 1) if fmap else ExactMatrix.zeros(f, tgt_t, src_f)
            for r in range(fc.rows):
                for c in range(fc.cols):
                    ent[(tgt_f + r) * cols + c] = fc.get(r, c)
            dt = tgt.diff_mat(n)
            for r in range(dt.rows):
                for c in range(dt.cols):
                    ent[(tgt_f + r) * cols + (src_f + c)] = dt.get(r, c)
            m = ExactMatrix(f, rows, cols, ent)
            if not m.is_zero():
                diffs[n] = m
        return BddComplex(a, terms, diffs, verify=False)

    def is_minimal(self) -> bool:
        """Degree-0 cell coefficients must land in the radical of H^0(B)."""
        for j, (dj, _) in enumerate(self.cells):
            for (k, coeff) in self.delta[j]:
                dk, _ = self.cells[k]
                if dj + 1 - dk == 0 and not vec_is_zero(self.ctx.b.field, coeff):
                    if self.ctx.radical_coords(coeff) is None:
                        return False
        return True


def _deg0_action_matrix(m: DGModule, avec, n: int) -> ExactMatrix:
    f = m.dgring.field
    nd = m.dim(n)
    cols = [m.act_vec(0, avec, n, unit_vec(f, nd, j)) for j in range(nd)]
    if not cols:
        return ExactMatrix.zeros(f, nd, nd)
    return ExactMatrix.from_cols(f, cols, nrows=nd)


def semiproj_resolution(m: DGModule, cutoff: int, minimal: bool = True) -> CellComplex:
    """Resolve a DG-module by cells, killing cone cohomology top-down.

    Stops when the cone is exact (terminated: a full resolution, projective
    dimension data exact) or when the next stage would need cells below
    -cutoff (partial: exact in degrees > exact_above)."""
    if cutoff < 1:
        raise CutoffTooSmall("cutoff must be >= 1")
    ctx = cell_context(m.dgring)
    b = ctx.b
    f = b.field
    F = CellComplex(ctx, target=m)
    guard = None
    while True:
        cone = F.cone_complex()
        degs = cone.degrees()
        t = None
        if degs:
            for n in range(degs[-1], degs[0] - 1, -1):
                if cohomology_dim(cone, n) > 0:
                    t = n
                    break
        if t is None:
            F.terminated = True
            F.exact_above = None
            break
        if guard is not None and t >= guard:
            raise HomalgError("cone top failed to strictly decrease")
        guard = t
        if t < -cutoff:
            F.exact_above = t
            break
        h, reps, im = cohomology_data(cone, t)
        if minimal:
            slots, gens = _cover_data(h)
        else:
            slots, gens = _full_generators(h)
        fdim_next = F.piece_dim(t + 1)
        new_cells = []
        for s_idx, g in zip(slots, gens):
            # h-coords -> cone coords, then purify at chain level with e_s
            z = zero_vec(f, cone.term(t).dim)
            for c, rep in zip(g, reps):
                if c:
                    z = vec_add(f, z, vec_scale(f, c, rep))
            e = ctx.idems[s_idx]
            z = cone.term(t).act(e, z)
            phi = z[:fdim_next]
            mv = z[fdim_next:]
            delta = _decompose_in_cells(F, t + 1, phi)
            image = tuple(f.neg(c) for c in mv)
            new_cells.append((t, s_idx, delta, image))
        if not new_cells:
            raise HomalgError("no generators found for nonzero cohomology")
        for (deg, s_idx, delta, image) in new_cells:
            F.add_cell(deg, s_idx, delta, image)
    return F


def _full_generators(h: LeftModule):
    """Non-minimal generator choice: a full basis of H, purified per simple."""
    a = h.algebra
    f = a.field
    slots = []
    gens = []
    for s in a.simples():
        img = action_of_element(h, s.idempotent).image_basis()
        for tcol in range(img.cols):
            slots.append(s.index)
            gens.append(tuple(img.col(tcol)))
    if not slots and h.dim:
        raise HomalgError("idempotents see none of the cohomology")
    return slots, gens


def _decompose_in_cells(F: CellComplex, n: int, vec) -> list:
    """An F^n vector as cell coefficients [(k, element of B^{n - d_k})]."""
    b = F.ctx.b
    f = b.field
    out = []
    for (j, p, basis, off) in F.piece_layout(n):
        block = vec[off:off + len(basis)]
        if vec_is_zero(f, block):
            continue
        elem = zero_vec(f, b.dim(p))
        for c, w in zip(block, basis):
            if c:
                elem = vec_add(f, elem, vec_scale(f, c, w))
        out.append((j, elem))
    return out


# ---------------------------------------------------------------------------
# Hom and tensor against a cell complex, collapsed per cell
# ---------------------------------------------------------------------------


def _en_basis(ctx: CellContext, n: DGModule, idem_idx: int, q: int) -> list[tuple]:
    """Basis of e * N^q."""
    f = ctx.b.field
    nd = n.dim(q)
    if nd == 0:
        return []
    mat = _deg0_action_matrix(n, ctx.idems[idem_idx], q)
    return [tuple(c) for c in mat.image_basis().columns()]


def hom_complex_dims(F: CellComplex, n: DGModule, tmin: int, tmax: int):
    """Hom_B(F, N) in degrees [tmin, tmax]: (dims, differentials).

    Hom^t coordinates: (+)_j e_j N^{t + d_j}; (d phi)(g_j) =
    d_N(phi g_j) - (-1)^t sum_k (-1)^{t |b_jk|} b_jk . phi(g_k)."""
    ctx = F.ctx
    b = ctx.b
    f = b.field
    layouts = {}
    for t in range(tmin, tmax + 2):
        lay = []
        pos = 0
        for j, (dj, sj) in enumerate(F.cells):
            basis = _en_basis(ctx, n, sj, t + dj)
            if basis:
                lay.append((j, basis, pos))
                pos += len(basis)
        layouts[t] = (lay, pos)
    dmats = {}
    for t in range(tmin, tmax + 1):
        lay_s, dim_s = layouts[t]
        lay_t, dim_t = layouts[t + 1]
        if dim_s == 0 or dim_t == 0:
            dmats[t] = ExactMatrix.zeros(f, dim_t, dim_s)
            continue
        sign_t = -1 if t % 2 else 1
        cols = []
        for (j, basis, off) in lay_s:
            dj = F.cells[j][0]
            for v in basis:
                # phi: g_j -> v, zero on the others
                out = [f.zero()] * dim_t
                # d_N(phi(g_j)) : lands in coordinate j
                dv = n.diff_mat(t + dj).apply(v) if n.dim(t + dj + 1) else None
                if dv is not None and not vec_is_zero(f, dv):
                    _add_into(f, out, lay_t, n, ctx, j, t + 1 + dj, dv)
                # -(-1)^t (-1)^{t |b_kj|} b_kj . v : lands in coordinates k
                # with delta(g_k) containing b_kj g_j
                for k, (dk, sk) in enumerate(F.cells):
                    for (jj, coeff) in F.delta[k]:
                        if jj != j:
                            continue
                        bdeg = dk + 1 - dj
                        w = n.act_vec(bdeg, coeff, t + dj, v)
                        if vec_is_zero(f, w):
                            continue
                        s = sign_t * (-1 if (t * bdeg) % 2 else 1)
                        w = vec_scale(f, f.coerce(-s), w)
                        _add_into(f, out, lay_t, n, ctx, k, t + 1 + dk, w)
                cols.append(out)
        dmats[t] = ExactMatrix.from_cols(f, cols, nrows=dim_t)
    dims = {t: layouts[t][1] for t in range(tmin, tmax + 2)}
    return dims, dmats, layouts


def _add_into(f, out, lay, n, ctx, cell_j, qdeg, w):
    for (j2, basis2, off2) in lay:
        if j2 == cell_j:
            coords = coords_in_span(f, basis2, w, n.dim(qdeg))
            if coords is None:
                raise HomalgError("Hom evaluation left e N")
            for t, c in enumerate(coords):
                out[off2 + t] = f.add(out[off2 + t], c)
            return
    if not vec_is_zero(f, w):
        raise HomalgError("Hom evaluation hit a missing block")


def dg_ext(m: DGModule, n: DGModule, i: int, cutoff: int,
           resolution: CellComplex | None = None) -> int:
    """dim Ext^i_B(M, N), certified inside the window (see README)."""
    F = resolution if resolution is not None else semiproj_resolution(m, cutoff)
    lo_n = n.lo()
    if not F.terminated and i + 2 > cutoff + lo_n:
        raise WindowTooSmall(
            f"Ext^{i} against a target with lowest degree {lo_n} needs cutoff >= {i + 2 - lo_n}")
    dims, dmats, _ = hom_complex_dims(F, n, i - 1, i + 1)
    rank_in = dmats[i - 1].rank()
    rank_out = dmats[i].rank()
    return dims[i] - rank_in - rank_out


def tensor_h0_complex(F: CellComplex, w: LeftModule) -> BddComplex:
    """W (x)_B F for W a degree-0 right module over H^0(B) (given as a left
    module over the opposite algebra): (+)_j W e_j placed in degree d_j."""
    ctx = F.ctx
    a = ctx.algebra
    b = ctx.b
    f = b.field
    if w.algebra != a.opposite() and w.algebra.sc != a.opposite().sc:
        raise HomalgError("tensor side must be a right module over H^0(B)")
    lay = {}
    for j, (dj, sj) in enumerate(F.cells):
        img = action_of_element(w, ctx.idems[sj]).image_basis()
        basis = [tuple(img.col(t)) for t in range(img.cols)]
        lay.setdefault(dj, []).append((j, basis))
    terms = {}
    offsets = {}
    from .complexes import module_over_trivial
    for dj, items in sorted(lay.items()):
        off = {}
        pos = 0
        for (j, basis) in items:
            off[j] = pos
            pos += len(basis)
        offsets[dj] = off
        if pos:
            terms[dj] = module_over_trivial(f, pos)
    diffs = {}
    for dj in sorted(terms):
        if (dj + 1) not in terms:
            continue
        dim_s = terms[dj].dim
        dim_t = terms[dj + 1].dim
        ent = [f.zero()] * (dim_t * dim_s)
        for (j, basis) in lay.get(dj, []):
            o_src = offsets[dj][j]
            for cidx, v in enumerate(basis):
                # w (x) g_j -> sum_k w . pi(b_jk) (x) g_k  (degree-0 coefficients)
                for (k, coeff) in F.delta[j]:
                    dk, sk = F.cells[k]
                    if dk != dj + 1:
                        continue  # only degree-0 coefficients act on W
                    wv = w.act(coeff, v)   # right action through the opposite
                    if vec_is_zero(f, wv):
                        continue
                    tgt_items = dict(lay.get(dk, []))
                    basis_k = tgt_items.get(k)
                    if basis_k is None:
                        if not vec_is_zero(f, wv):
                            raise HomalgError("tensor hit a missing block")
                        continue
                    coords = coords_in_span(f, basis_k, wv, w.dim)
                    if coords is None:
                        raise HomalgError("tensor evaluation left W e")
                    o_tgt = offsets[dk][k]
                    for t, c in enumerate(coords):
                        ent[(o_tgt + t) * dim_s + (o_src + cidx)] = f.add(
                            ent[(o_tgt + t) * dim_s + (o_src + cidx)], c)
        m = ExactMatrix(f, dim_t, dim_s, ent)
        if not m.is_zero():
            diffs[dj] = m
    from .complexes import trivial_algebra
    return BddComplex(trivial_algebra(f), terms, diffs)


def dg_tor(w: LeftModule, m: DGModule, i: int, cutoff: int,
           resolution: CellComplex | None = None) -> int:
    """dim Tor_i^B(W, M) = dim H^{-i}(W (x)_B F) for a degree-0 right module W."""
    F = resolution if resolution is not None else semiproj_resolution(m, cutoff)
    if not F.terminated and i + 2 > cutoff:
        raise WindowTooSmall(f"Tor_{i} needs cutoff >= {i + 2}")
    c = tensor_h0_complex(F, w)
    return cohomology_dim(c, -i)


# ---------------------------------------------------------------------------
# lifting of H^0(B)-modules
# ---------------------------------------------------------------------------


def lift_module(b: DGRing, mbar: LeftModule, cutoff: int) -> CellComplex:
    """The canonical lift B (x)^L_{H^0(B)} Mbar: apply B (x)_{H^0} - to a
    finite minimal projective resolution of Mbar. Needs certified finite
    projective dimension."""
    ctx = cell_context(b)
    a = ctx.algebra
    if mbar.algebra != a and mbar.algebra.sc != a.sc:
        raise HomalgError("module to lift must live over H^0(B)")
    res = minimal_projective_resolution(mbar, cutoff)
    if not res.terminated:
        raise NotFiniteProjDim(
            f"minimal resolution did not terminate within cutoff {cutoff}")
    F = CellComplex(ctx, target=None)
    index_of = {}
    for i, step in enumerate(res.steps):
        for jslot, s in enumerate(step.slots):
            index_of[(i, jslot)] = F.add_cell(-i, s, [], None)
    f = b.field
    for i in range(1, len(res.steps)):
        d = res.diffs[i]
        src_step = res.steps[i]
        tgt_step = res.steps[i - 1]
        for jslot in range(len(src_step.slots)):
            img = d.apply(src_step.gen_vectors[jslot])
            delta = []
            for kslot, elems in enumerate(tgt_step.basis_elems):
                off = tgt_step.offsets[kslot]
                coeff = zero_vec(f, a.dim)
                for t, x in enumerate(elems):
                    c = img[off + t]
                    if c:
                        coeff = vec_add(f, coeff, vec_scale(f, c, x))
                if not vec_is_zero(f, coeff):
                    delta.append((index_of[(i - 1, kslot)], coeff))
            F.delta[index_of[(i, jslot)]] = delta
    F.terminated = True
    F.meta = {"lift_of": mbar, "proj_dim": res.length()}
    return F


def check_lifting_identity(b: DGRing, mbar: LeftModule, cutoff: int,
                           lift: CellComplex | None = None) -> bool:
    """H^0(B) (x)^L_B lift is quasi-isomorphic to Mbar in degree 0.

    Recomputed from the cell data of the lift; a corrupted lift (broken d^2,
    shifted coefficient) fails either the complex axioms or the comparison."""
    from .algebra import modules_isomorphic
    ctx = cell_context(b)
    a = ctx.algebra
    if lift is None:
        lift = lift_module(b, mbar, cutoff)
    w = right_regular_over(a)
    try:
        c = tensor_h0_complex(lift, w)   # complex over the trivial algebra: d^2 checked
    except HomalgError:
        return False
    degs = c.degrees()
    if degs:
        for n in range(degs[0], degs[-1] + 1):
            if n != 0 and cohomology_dim(c, n) != 0:
                return False
    if cohomology_dim(c, 0) != mbar.dim:
        return False
    # rebuild the degree-0 cohomology as an A-module and compare with Mbar
    h0mod = _tensor_h0_as_module(lift, c)
    return modules_isomorphic(h0mod, mbar)


def right_regular_over(a: Algebra) -> LeftModule:
    """A as a right module over itself (a left module over the opposite)."""
    return a.opposite().regular_module()


def _tensor_h0_as_module(F: CellComplex, tensor_cx: BddComplex) -> LeftModule:
    """H^0 of H^0(B) (x)_B F with its left H^0(B)-module structure.

    The degree-0 piece of the tensor complex is (+)_{d_j = 0} A e_j; the left
    action is left multiplication, which descends to the cohomology."""
    ctx = F.ctx
    a = ctx.algebra
    f = a.field
    w = right_regular_over(a)
    # rebuild the degree-0 layout exactly as tensor_h0_complex does
    lay = []
    pos = 0
    for j, (dj, sj) in enumerate(F.cells):
        if dj != 0:
            continue
        img = action_of_element(w, ctx.idems[sj]).image_basis()
        basis = [tuple(img.col(t)) for t in range(img.cols)]
        lay.append((j, basis, pos))
        pos += len(basis)
    dim0 = pos
    action = []
    for i in range(a.dim):
        ent = [f.zero()] * (dim0 * dim0)
        ei = unit_vec(f, a.dim, i)
        for (j, basis, off) in lay:
            for cidx, v in enumerate(basis):
                prod = a.mult(ei, v)    # left multiplication on A e_j
                coords = coords_in_span(f, basis, prod, a.dim)
                if coords is None:
                    raise HomalgError("left action left A e_j")
                for t, c in enumerate(coords):
                    ent[(off + t) * dim0 + (off + cidx)] = c
        action.append(ExactMatrix(f, dim0, dim0, ent))
    big = LeftModule(a, dim0, action, verify=False)
    # cohomology at 0: kernel of d^0 modulo image of d^{-1}
    ker = tensor_cx.diff(0).kernel_basis().columns() if dim0 else []
    im = tensor_cx.diff(-1).image_basis().columns()
    from .matrix import quotient_reps
    reps = quotient_reps(f, [tuple(c) for c in im], [tuple(c) for c in ker], dim0)
    amb = [tuple(c) for c in im] + list(reps)
    act = []
    for i in range(a.dim):
        cols = []
        for v in reps:
            wv = big.action[i].apply(v)
            coords = coords_in_span(f, amb, wv, dim0)
            if coords is None:
                raise HomalgError("action did not preserve cocycles")
            cols.append(coords[len(im):])
        act.append(ExactMatrix.from_cols(f, cols, nrows=len(reps)))
    return LeftModule(a, len(reps), act, verify=False)


def semifree_resolution(m: DGModule, cutoff: int, minimal: bool = True):
    """Public surface: (resolution as a DGModule, quasi-isomorphism into m).

    Raises CutoffTooSmall via the builder when cutoff < 1; the returned map is
    a quasi-isomorphism in degrees above -cutoff, and everywhere when the
    construction terminated."""
    F = semiproj_resolution(m, cutoff, minimal=minimal)
    fmod, fmap = F.assemble()
    return fmod, fmap, F
