"""Dualizing-complex certification, the evaluation-module construction over a
trivial extension, and the end-to-end theorem verification suites.

The Gorenstein pipeline for B = A x| R mirrors finite linear algebra all the
way down: certify R dualizing (term-wise injectivity via Ext^1 against the
simples, homothety maps quasi-isomorphisms), build N = Hom_A(B, R) with the
sign-twisted left B-action, produce the evaluation cocycle and the map
Psi(b) = b . eps, check that Psi is block-diagonal with the two comparison
maps on the diagonal and a quasi-isomorphism after restriction, and then read
the finite injective dimension of B over itself off the algebra side through
the adjunction. No semifree resolution is needed for any of it.

Verdicts are three-valued; a VIOLATION carries a replayable witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (Algebra, Bimodule, LeftModule, hom_basis,
                      regular_bimodule, semisimple_quotient_bimodule,
                      zero_module)
from .complexes import (BddComplex, BimoduleComplex, ChainMap, cohomology_dim,
                        h_bijective_everywhere, inf_sup_amp, is_quasi_iso,
                        module_over_trivial, single_bimodule_complex,
                        single_module_complex, tensor_complexes,
                        trivial_algebra)
from .dg import (DGModule, DGModuleMap, DGRing, h0, projection_and_section,
                 regular_dgmodule, restrict_along_tau, trivial_extension)
from .dgresolve import lift_module, check_lifting_identity
from .errors import HomalgError, NotTrivialExtension, WindowTooSmall
from .homdim import (INCONCLUSIVE, VERIFIED, VIOLATION, AdjunctionCertificate,
                     ExtDim, check_bass_bound, fpd_search, inj_dim,
                     module_family, proj_dim, _dg_inf)
from .matrix import (ExactMatrix, coords_in_span, unit_vec, vec_is_zero,
                     zero_vec)
from .resolve import ext_module, minimal_projective_resolution


@dataclass
class DualizingCertificate:
    algebra: str
    checks: dict
    window: int
    failing_axiom: str | None = None

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"checks": dict(self.checks), "valid": self.valid,
                "window": self.window, "failing_axiom": self.failing_axiom}


@dataclass
class TheoremReport:
    theorem: str
    instance: str
    verdict: str
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "instance": self.instance,
                "verdict": self.verdict, "witnesses": self.witnesses}


def build_DA_dualizing(a: Algebra, shift_to: int) -> BimoduleComplex:
    """The dual bimodule concentrated in degree shift_to."""
    return single_bimodule_complex(a.dual_bimodule(), shift_to)


# ---------------------------------------------------------------------------
# Hom complexes of one-sided restrictions, with explicit bases
# ---------------------------------------------------------------------------


class _HomData:
    """Hom_A(S, T) for complexes of modules over the same algebra, as a
    complex of vector spaces with the per-(p, n) Hom bases exposed."""

    def __init__(self, s: BddComplex, t: BddComplex):
        self.s = s
        self.t = t
        a = s.algebra
        f = a.field
        self.field = f
        self.bases = {}
        for p in s.degrees():
            for q in t.degrees():
                basis = hom_basis(s.term(p), t.term(q))
                if basis:
                    self.bases[(p, q - p)] = basis
        self.offsets = {}
        self.dims = {}
        ns = sorted({n for (_, n) in self.bases})
        for n in ns:
            off = {}
            pos = 0
            for p in sorted(p for (p, nn) in self.bases if nn == n):
                off[p] = pos
                pos += len(self.bases[(p, n)])
            self.offsets[n] = off
            self.dims[n] = pos

    def coords(self, n: int, blocks: dict) -> tuple:
        """Coordinates of a graded Hom element given as {p: matrix}."""
        f = self.field
        out = [f.zero()] * self.dims.get(n, 0)
        for p, mat in blocks.items():
            if mat.is_zero():
                continue
            basis = self.bases.get((p, n))
            if basis is None:
                raise HomalgError("Hom element hits a missing block")
            coords = coords_in_span(f, [b.entries for b in basis], mat.entries,
                                    len(mat.entries))
            if coords is None:
                raise HomalgError("Hom element is not A-linear")
            off = self.offsets[n][p]
            for t, c in enumerate(coords):
                out[off + t] = c
        return tuple(out)

    def complex(self) -> BddComplex:
        """The Hom complex over the trivial algebra: (d phi) = d phi - (-1)^n phi d."""
        f = self.field
        terms = {n: module_over_trivial(f, d) for n, d in self.dims.items() if d}
        diffs = {}
        for n in sorted(self.dims):
            src = self.dims.get(n, 0)
            tgt = self.dims.get(n + 1, 0)
            if src == 0 or tgt == 0:
                continue
            sign = f.coerce(-1 if n % 2 else 1)
            cols = []
            for p in sorted(pp for (pp, nn) in self.bases if nn == n):
                for phi in self.bases[(p, n)]:
                    blocks = {}
                    img1 = self.t.diff(p + n).mul(phi)
                    if (p, n + 1) in self.bases and not img1.is_zero():
                        blocks[p] = img1
                    img2 = phi.mul(self.s.diff(p - 1)).scale(f.neg(sign))
                    if (p - 1, n + 1) in self.bases and not img2.is_zero():
                        blocks[p - 1] = img2
                    cols.append(self.coords(n + 1, blocks))
            diffs[n] = ExactMatrix.from_cols(f, cols, nrows=tgt)
        return BddComplex(trivial_algebra(f), terms, diffs)


def _homothety_map(a: Algebra, r: BimoduleComplex, side: str):
    """The homothety A -> Hom(Res R, Res R). On the left-module side the map
    is x |-> (r |-> r.x), built from the right action (those are the
    left-linear endomorphisms); on the opposite side it is left
    multiplication. Returns (ChainMap over the trivial algebra, _HomData)."""
    f = a.field
    res = r.res_left() if side == "left" else r.res_right()
    hd = _HomData(res, res)
    hom_cx = hd.complex()
    src = BddComplex(trivial_algebra(f), {0: module_over_trivial(f, a.dim)}, {},
                     verify=False)
    cols = []
    for i in range(a.dim):
        e = unit_vec(f, a.dim, i)
        blocks = {}
        for p in res.degrees():
            term = r.term(p)
            mats = term.right_action if side == "left" else term.left_action
            mat = ExactMatrix.zeros(f, term.dim, term.dim)
            for t, c in enumerate(e):
                if c:
                    mat = mat.add(mats[t].scale(c))
            if not mat.is_zero():
                blocks[p] = mat
        cols.append(hd.coords(0, blocks))
    comp0 = (ExactMatrix.from_cols(f, cols, nrows=hd.dims.get(0, 0))
             if cols else ExactMatrix.zeros(f, hd.dims.get(0, 0), 0))
    cm = ChainMap(src, hom_cx, {0: comp0})
    return cm, hd


def is_dualizing(a: Algebra, r: BimoduleComplex, cutoff: int) -> DualizingCertificate:
    """The three dualizing axioms, in the strict term-wise-injective form:
    (1) every term injective on both sides, (2) finitely generated cohomology
    (automatic for module-finite complexes, recorded), (3) both homothety maps
    quasi-isomorphisms."""
    checks = {}
    failing = None
    res_l = r.res_left()
    res_r = r.res_right()
    checks["left_inj"] = _terms_injective(a, res_l, cutoff)
    checks["right_inj"] = _terms_injective(a.opposite(), res_r, cutoff)
    checks["left_fg"] = True    # module-finite over a field
    checks["right_fg"] = True
    cm, _ = _homothety_map(a, r, "left")
    checks["left_homothety_qiso"] = is_quasi_iso(cm)
    cm2, _ = _homothety_map(a.opposite(), r, "right")
    checks["right_homothety_qiso"] = is_quasi_iso(cm2)
    for key, ok in checks.items():
        if not ok:
            failing = key
            break
    return DualizingCertificate(f"dim-{a.dim} algebra", checks, cutoff, failing)


def _terms_injective(a: Algebra, res: BddComplex, cutoff: int) -> bool:
    window = max(3, min(cutoff, 4))
    for n in res.degrees():
        term = res.term(n)
        for s in a.simples():
            if ext_module(s.module, term, 1, window) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# the evaluation module N = Hom_A(B, R) and Psi
# ---------------------------------------------------------------------------


class EvaluationModule:
    """N = Hom_A(B, Res_A R) with (b.n)(c) = (-1)^{|b|(|n|+|c|)} n(c.b),
    assembled over an explicit block basis N^t = (+)_p Hom_A(B^p, R^{p+t})."""

    def __init__(self, b: DGRing):
        te = b.meta.get("trivial_extension")
        if te is None:
            raise NotTrivialExtension("evaluation module needs a trivial extension")
        self.b = b
        self.a, self.r = te
        if any(d >= 0 for d in self.r.degrees()):
            raise NotTrivialExtension("needs sup(R) < 0")
        f = b.field
        self.field = f
        self.b_restricted = restrict_along_tau(b)       # A (+) R as an A-complex
        self.r_left = self.r.res_left()
        self.hom = _HomData(self.b_restricted, self.r_left)
        self.module = self._build_dgmodule()
        self.eps = self._eps_coords()
        self.psi = self._build_psi()

    # -- internal assembly --

    def _right_mult_matrix(self, s_deg: int, xvec, u: int) -> ExactMatrix:
        """B^u -> B^{u+s}: c |-> c . x."""
        b = self.b
        f = self.field
        nu = b.dim(u)
        cols = [b.mult_vec(u, unit_vec(f, nu, t), s_deg, xvec) for t in range(nu)]
        if not cols:
            return ExactMatrix.zeros(f, b.dim(u + s_deg), 0)
        return ExactMatrix.from_cols(f, cols, nrows=b.dim(u + s_deg))

    def _act_blocks(self, s_deg: int, xvec, t_deg: int, nu_blocks: dict) -> dict:
        """Blocks of x . nu for nu given as {p: matrix B^p -> R^{p+t}}."""
        f = self.field
        out = {}
        for u in self.b.degrees():
            # (x.nu) at block u: (-1)^{s(t+u)} nu_{u+s} o (right mult by x)
            src_mat = nu_blocks.get(u + s_deg)
            if src_mat is None:
                continue
            rm = self._right_mult_matrix(s_deg, xvec, u)
            mat = src_mat.mul(rm)
            if (s_deg * (t_deg + u)) % 2:
                mat = mat.neg()
            if not mat.is_zero():
                out[u] = mat
        return out

    def _diff_blocks(self, t_deg: int, nu_blocks: dict) -> dict:
        """(d nu) = d_R o nu - (-1)^t nu o d_B, blockwise."""
        f = self.field
        sign = f.coerce(-1 if t_deg % 2 else 1)
        out = {}
        for p, mat in nu_blocks.items():
            m1 = self.r_left.diff(p + t_deg).mul(mat)
            if not m1.is_zero():
                out[p] = out.get(p, ExactMatrix.zeros(f, m1.rows, m1.cols)).add(m1) \
                    if p in out else m1
        for p, mat in nu_blocks.items():
            m2 = mat.mul(self.b_restricted.diff(p - 1)).scale(f.neg(sign))
            if m2.is_zero():
                continue
            if (p - 1) in out:
                out[p - 1] = out[p - 1].add(m2)
            else:
                out[p - 1] = m2
        return {p: m for p, m in out.items() if not m.is_zero()}

    def _basis_blocks(self, t_deg: int, idx: int) -> dict:
        """The idx-th basis vector of N^t as blocks {p: matrix}."""
        off = self.hom.offsets[t_deg]
        for p in sorted(off):
            basis = self.hom.bases[(p, t_deg)]
            if off[p] <= idx < off[p] + len(basis):
                return {p: basis[idx - off[p]]}
        raise HomalgError("basis index out of range")

    def _build_dgmodule(self) -> DGModule:
        b = self.b
        f = self.field
        dims = {n: d for n, d in self.hom.dims.items() if d}
        action = {}
        for s_deg in b.degrees():
            for t_deg in sorted(dims):
                out_deg = s_deg + t_deg
                if self.hom.dims.get(out_deg, 0) == 0:
                    continue
                tensor = []
                for i in range(b.dim(s_deg)):
                    xvec = unit_vec(f, b.dim(s_deg), i)
                    row = []
                    for j in range(dims[t_deg]):
                        blocks = self._act_blocks(s_deg, xvec, t_deg,
                                                  self._basis_blocks(t_deg, j))
                        row.append(self.hom.coords(out_deg, blocks))
                    tensor.append(tuple(row))
                action[(s_deg, t_deg)] = tensor
        diff = {}
        for t_deg in sorted(dims):
            if self.hom.dims.get(t_deg + 1, 0) == 0:
                continue
            cols = []
            for j in range(dims[t_deg]):
                blocks = self._diff_blocks(t_deg, self._basis_blocks(t_deg, j))
                cols.append(self.hom.coords(t_deg + 1, blocks))
            m = ExactMatrix.from_cols(f, cols, nrows=self.hom.dims[t_deg + 1])
            if not m.is_zero():
                diff[t_deg] = m
        # exhaustive Leibniz/associativity checks: any sign error dies here
        return DGModule(b, dims, action, diff, verify=True)

    def _eps_coords(self) -> tuple:
        """The projection B -> R as a degree-0 cocycle: identity on every
        R-block, zero on the degree-0 block."""
        f = self.field
        blocks = {}
        for p in self.r.degrees():
            dim_p = self.r.term_dim(p)
            # B^p = R^p for p < 0 under the same coordinates
            blocks[p] = ExactMatrix.identity(f, dim_p)
        eps = self.hom.coords(0, blocks)
        d_eps = self.module.diff_mat(0).apply(eps) if self.module.dim(1) else None
        if d_eps is not None and not vec_is_zero(f, d_eps):
            raise HomalgError("evaluation element is not a cocycle")
        return eps

    def _build_psi(self) -> DGModuleMap:
        b = self.b
        f = self.field
        reg = regular_dgmodule(b)
        comps = {}
        for t_deg in b.degrees():
            nb = b.dim(t_deg)
            cols = []
            for i in range(nb):
                xvec = unit_vec(f, nb, i)
                cols.append(self.module.act_vec(t_deg, xvec, 0, self.eps))
            if cols:
                comps[t_deg] = ExactMatrix.from_cols(
                    f, cols, nrows=self.module.dim(t_deg))
        return DGModuleMap(reg, self.module, comps, verify=True)

    # -- public surface --

    def evaluate(self, t_deg: int, coords, u_deg: int, cvec) -> tuple:
        """Evaluate an element of N^t (by coordinates) at c in B^u: a vector
        in R^{u+t}."""
        f = self.field
        out_dim = self.r.term_dim(u_deg + t_deg)
        out = zero_vec(f, out_dim)
        off = self.hom.offsets.get(t_deg, {})
        for p in sorted(off):
            if p != u_deg:
                continue
            basis = self.hom.bases[(p, t_deg)]
            for t, phi in enumerate(basis):
                c = coords[off[p] + t]
                if c:
                    from .matrix import vec_add, vec_scale
                    out = vec_add(f, out, vec_scale(f, c, phi.apply(cvec)))
        return out

    def psi_restricted(self) -> ChainMap:
        """Psi as a chain map of complexes of A-modules (restriction along tau)."""
        src = self.b_restricted
        tgt = restrict_along_tau(self.b, self.module)
        return ChainMap(src, tgt, dict(self.psi.comps))

    def block_structure_ok(self) -> dict:
        """Psi is diag(Phi_1, Phi_2) in the block bases: the degree-0 component
        equals the right-multiplication comparison into Hom(R, R), every
        negative component equals the evaluation comparison into Hom(A, R),
        and all off-diagonal blocks vanish."""
        f = self.field
        a = self.a
        out = {"off_diagonal_zero": True, "phi1_match": True, "phi2_match": True}
        # degree 0: A -> (+)_{p<0} Hom(R^p, R^p); Phi_2(x)(r) = r.x
        comp0 = self.psi.comp(0)
        for i in range(a.dim):
            e = unit_vec(f, a.dim, i)
            blocks = {}
            for p in self.r.degrees():
                term = self.r.term(p)
                mat = ExactMatrix.zeros(f, term.dim, term.dim)
                for t, c in enumerate(e):
                    if c:
                        mat = mat.add(term.right_action[t].scale(c))
                if not mat.is_zero():
                    blocks[p] = mat
            expected = self.hom.coords(0, blocks)
            if tuple(comp0.col(i)) != tuple(expected):
                out["phi2_match"] = False
        # negative degrees: R^t -> Hom(A, R^t) (+) (zero into Hom(R, R) blocks)
        for t_deg in self.r.degrees():
            comp = self.psi.comp(t_deg)
            term = self.r.term(t_deg)
            for i in range(term.dim):
                rvec = unit_vec(f, term.dim, i)
                # Phi_1(r): A -> R^t, e_j -> e_j . r
                cols = [term.act_left(unit_vec(f, a.dim, j), rvec)
                        for j in range(a.dim)]
                mat = ExactMatrix.from_cols(f, cols, nrows=term.dim)
                expected = self.hom.coords(t_deg, {0: mat})
                got = tuple(comp.col(i))
                if got != tuple(expected):
                    # distinguish off-diagonal leakage from a wrong diagonal
                    off = self.hom.offsets[t_deg]
                    for p in sorted(off):
                        basis_len = len(self.hom.bases[(p, t_deg)])
                        seg = got[off[p]:off[p] + basis_len]
                        want = tuple(expected)[off[p]:off[p] + basis_len]
                        if p == 0 and seg != want:
                            out["phi1_match"] = False
                        if p != 0 and any(c for c in seg):
                            out["off_diagonal_zero"] = False
        return out


def build_epsilon_psi(b: DGRing) -> tuple[DGModule, DGModuleMap, EvaluationModule]:
    ev = EvaluationModule(b)
    return ev.module, ev.psi, ev


# ---------------------------------------------------------------------------
# theorem suites
# ---------------------------------------------------------------------------


def verify_trivial_ext_gorenstein(a: Algebra, cutoff: int,
                                  max_dim: int = 6) -> TheoremReport:
    """Full pipeline: DA[-1] certified dualizing, B = A x| DA[-1] passes the
    exhaustive DG checks, H^0(B) = A on the nose, Psi is a quasi-isomorphism
    with the expected block structure, and inj dim_B(B) is certified Finite
    through the adjunction, bounded by the algebra-side inj dim of R."""
    witnesses = []
    r = build_DA_dualizing(a, -1)
    cert = is_dualizing(a, r, cutoff)
    witnesses.append({"dualizing_certificate": cert.to_json()})
    if not cert.valid:
        return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                             VIOLATION, witnesses)
    b = trivial_extension(a, r)     # exhaustive DG-ring checks run here
    h = h0(b)
    h0_ok = (h.sc == a.sc and h.unit == a.unit)
    witnesses.append({"h0_equals_base": h0_ok})
    try:
        ev = EvaluationModule(b)    # exhaustive DG-module checks run here
    except HomalgError as exc:
        witnesses.append({"evaluation_module_error": str(exc)})
        return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                             VIOLATION, witnesses)
    blocks = ev.block_structure_ok()
    witnesses.append({"psi_blocks": blocks})
    psi_r = ev.psi_restricted()
    qiso = is_quasi_iso(psi_r)
    hbij = h_bijective_everywhere(psi_r)
    witnesses.append({"psi_quasi_iso": qiso, "psi_h_bijective": hbij})
    if not (h0_ok and qiso and hbij and all(blocks.values())):
        return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                             VIOLATION, witnesses)
    certificate = AdjunctionCertificate(
        a, r.res_left(),
        "Psi quasi-isomorphism + Hom-tensor adjunction onto the algebra side "
        "(target has injective terms)")
    rep = inj_dim(b, cutoff, certificate=certificate)
    witnesses.append({"inj_dim_B": rep.to_json()})
    if not rep.value.is_finite:
        return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                             INCONCLUSIVE, witnesses)
    bound = inj_dim(r.res_left(), cutoff)
    witnesses.append({"inj_dim_A_of_R": bound.to_json()})
    if not bound.value.is_finite:
        return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                             INCONCLUSIVE, witnesses)
    margin = bound.value.value - rep.value.value
    witnesses.append({"adjunction_bound_margin": margin})
    verdict = VERIFIED if margin >= 0 else VIOLATION
    return TheoremReport("gorenstein_trivial_extension", f"dim-{a.dim}",
                         verdict, witnesses)


def gorenstein_certificate(a: Algebra, cutoff: int) -> AdjunctionCertificate | None:
    """The adjunction certificate for B = A x| DA[-1], if the pipeline verifies."""
    r = build_DA_dualizing(a, -1)
    cert = is_dualizing(a, r, cutoff)
    if not cert.valid:
        return None
    b = trivial_extension(a, r)
    ev = EvaluationModule(b)
    if not is_quasi_iso(ev.psi_restricted()):
        return None
    return AdjunctionCertificate(a, r.res_left(), "gorenstein pipeline")


def verify_lifting_suite(a: Algebra, cutoff: int, max_dim: int = 6) -> TheoremReport:
    """For every family module of certified finite projective dimension over
    A: the canonical lift exists, the lifting identity holds, the projective
    dimension is preserved exactly, and inf(lift) >= inf(B) - projdim."""
    r = build_DA_dualizing(a, -1)
    b = trivial_extension(a, r)
    inf_b = _dg_inf(regular_dgmodule(b))
    fam = module_family(a, max_dim, cutoff)
    fpd_b = fpd_search(b, max_dim, cutoff)
    witnesses = [{"inf_B": inf_b, "fpd_B_observed": fpd_b.observed}]
    verdict = VERIFIED
    any_finite = False
    for label, m in fam:
        res = minimal_projective_resolution(m, cutoff)
        if not res.terminated:
            continue
        any_finite = True
        pd_a = res.length()
        F = lift_module(b, m, cutoff)
        ok_ident = check_lifting_identity(b, m, cutoff, lift=F)
        fmod, _ = F.assemble()
        lift_inf = _dg_inf(fmod)
        lift_sup = _dg_sup(fmod)
        pd_lift = F.meta["proj_dim"]
        row = {"member": label, "proj_dim_A": pd_a, "proj_dim_B_lift": pd_lift,
               "lifting_identity": ok_ident, "inf_lift": lift_inf,
               "sup_lift": lift_sup,
               "amp_is_minus_inf": (lift_sup - lift_inf) == -lift_inf,
               "inf_bound_ok": lift_inf >= inf_b - pd_a}
        if fpd_b.observed is not None:
            # proj dim_B(M) <= FPD(B) - inf(M), recorded with its margin
            row["boundlift_margin"] = (fpd_b.observed - lift_inf) - pd_lift
        witnesses.append(row)
        if not (ok_ident and pd_lift == pd_a and row["inf_bound_ok"]
                and lift_sup == 0 and row["amp_is_minus_inf"]):
            verdict = VIOLATION
        if fpd_b.observed is not None and row["boundlift_margin"] < 0:
            verdict = VIOLATION
    if not any_finite:
        verdict = INCONCLUSIVE
    return TheoremReport("lifting_suite", f"dim-{a.dim}", verdict, witnesses)


def _dg_sup(x: DGModule) -> int:
    degs = x.degrees()
    if not degs:
        return 0
    for n in range(degs[-1], degs[0] - 1, -1):
        dim_n = x.dim(n)
        if dim_n - x.diff_mat(n).rank() - x.diff_mat(n - 1).rank() > 0:
            return n
    return 0


def tor_certificate(r: BimoduleComplex, m: LeftModule, degrees, cutoff: int) -> list:
    """The finite Tor profile [(i, dim Tor_i(R, M))] the sequence argument
    consumes; no claim about the full finitistic dimension is made."""
    a = m.algebra
    from .resolve import projective_resolution
    p, _ = projective_resolution(m, cutoff)
    res_right = r.res_right()
    lo_r = r.lo()
    out = []
    full = minimal_projective_resolution(m, cutoff)
    tens = tensor_complexes(res_right, p)
    for i in degrees:
        if not full.terminated and i > cutoff + lo_r - 2:
            raise WindowTooSmall(
                f"Tor_{i} against a complex with lowest degree {lo_r} "
                f"needs cutoff >= {i + 2 - lo_r}")
        out.append((i, cohomology_dim(tens, -i)))
    return out
