"""Finite-dimensional associative unital algebras via structure constants,
their left modules and bimodules, and module maps.

Conventions (fixed once, package-wide):
  * e_i * e_j = sum_k sc[i][j][k] e_k.
  * Module elements are column vectors; a left action is a list of dim x dim
    matrices, one per algebra basis element, and rho(a*b) = rho(a) @ rho(b).
  * A right module over A is a left module over opposite(A); the action matrix
    of e_i is then "multiply by e_i on the right".
"""
from __future__ import annotations

from .errors import (AssociativityFailure, FieldMismatch, HomalgError,
                     ShapeMismatch, UnitFailure)
from .field import Field
from .matrix import (ExactMatrix, coords_in_span, quotient_reps, span_basis,
                     unit_vec, vec_add, vec_is_zero, vec_scale, zero_vec)


class Algebra:
    __slots__ = ("field", "dim", "sc", "unit", "labels",
                 "_radical_cert", "_idem_cert", "_cache")

    def __init__(self, field: Field, sc, unit, labels=None, verify: bool = True,
                 radical_basis=None, primitive_idempotents=None):
        self.field = field
        self.sc = tuple(tuple(tuple(field.coerce(c) for c in row) for row in plane)
                        for plane in sc)
        self.dim = len(self.sc)
        for plane in self.sc:
            if len(plane) != self.dim or any(len(r) != self.dim for r in plane):
                raise ShapeMismatch("structure constant table is not dim^3")
        self.unit = tuple(field.coerce(c) for c in unit)
        if len(self.unit) != self.dim:
            raise ShapeMismatch("unit vector has wrong length")
        self.labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(self.dim))
        if len(self.labels) != self.dim:
            raise ShapeMismatch("wrong number of basis labels")
        # certificates: a verified radical basis / primitive idempotent system
        # (attached by the quiver constructor, where both are combinatorial)
        self._radical_cert = radical_basis
        self._idem_cert = primitive_idempotents
        self._cache = {}
        if verify:
            self._verify()

    # ---- multiplication ----

    def basis_product(self, i: int, j: int) -> tuple:
        return self.sc[i][j]

    def mult(self, x, y) -> tuple:
        f = self.field
        out = [f.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            sci = self.sc[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = f.mul(xi, yj)
                for k, s in enumerate(sci[j]):
                    if s:
                        out[k] = f.add(out[k], f.mul(c, s))
        return tuple(out)

    def left_mult_matrix(self, x) -> ExactMatrix:
        f = self.field
        cols = [self.mult(x, unit_vec(f, self.dim, j)) for j in range(self.dim)]
        return ExactMatrix.from_cols(f, cols, nrows=self.dim)

    def right_mult_matrix(self, x) -> ExactMatrix:
        f = self.field
        cols = [self.mult(unit_vec(f, self.dim, j), x) for j in range(self.dim)]
        return ExactMatrix.from_cols(f, cols, nrows=self.dim)

    def _verify(self):
        f = self.field
        n = self.dim
        for i in range(n):
            ei = unit_vec(f, n, i)
            if self.mult(self.unit, ei) != ei or self.mult(ei, self.unit) != ei:
                raise UnitFailure(i)
        for i in range(n):
            for j in range(n):
                eij = self.sc[i][j]
                for k in range(n):
                    ek = unit_vec(f, n, k)
                    lhs = self.mult(eij, ek)
                    rhs = self.mult(unit_vec(f, n, i), self.sc[j][k])
                    if lhs != rhs:
                        raise AssociativityFailure(i, j, k)

    # ---- derived structure (cached) ----

    def opposite(self) -> "Algebra":
        if "op" not in self._cache:
            n = self.dim
            sc_op = [[self.sc[j][i] for j in range(n)] for i in range(n)]
            op = Algebra(self.field, sc_op, self.unit,
                         labels=[f"{l}^op" for l in self.labels], verify=False,
                         radical_basis=self._radical_cert,
                         primitive_idempotents=self._idem_cert)
            op._cache["op_sc"] = self.sc  # structural involutivity
            self._cache["op"] = op
        return self._cache["op"]

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.sc[i][j] == self.sc[j][i] for i in range(n) for j in range(n))

    def regular_module(self) -> "LeftModule":
        if "regular" not in self._cache:
            f = self.field
            action = [self.left_mult_matrix(unit_vec(f, self.dim, i))
                      for i in range(self.dim)]
            self._cache["regular"] = LeftModule(self, self.dim, action, verify=False)
        return self._cache["regular"]

    def radical_basis(self) -> list[tuple]:
        if "radical" not in self._cache:
            from .semisimple import compute_radical
            self._cache["radical"] = compute_radical(self)
        return self._cache["radical"]

    def simples(self) -> list["SimpleData"]:
        """One record per isomorphism class of simple left module."""
        if "simples" not in self._cache:
            from .semisimple import compute_simples
            self._cache["simples"] = compute_simples(self)
        return self._cache["simples"]

    def simple_modules(self) -> list["LeftModule"]:
        return [s.module for s in self.simples()]

    def projective_module(self, idx: int) -> "ProjectiveData":
        """Indecomposable projective A*e for the idx-th primitive idempotent."""
        key = ("proj", idx)
        if key not in self._cache:
            e = self.simples()[idx].idempotent
            re = self.right_mult_matrix(e)
            basis = [tuple(c) for c in re.image_basis().columns()]
            mod = submodule_as_module(self.regular_module(), basis)
            gen = coords_in_span(self.field, basis, e, self.dim)
            if gen is None:
                raise HomalgError("idempotent not contained in its own projective")
            self._cache[key] = ProjectiveData(mod, basis, tuple(gen), idx)
        return self._cache[key]

    def dual_bimodule(self) -> "Bimodule":
        """DA = dual space of A: (a.f)(x) = f(x a), (f.b)(x) = f(b x)."""
        if "DA" not in self._cache:
            f = self.field
            n = self.dim
            left = []
            right = []
            for i in range(n):
                # (e_i . f_j)(e_k) = f_j(e_k e_i) = sc[k][i][j]
                lm = [[self.sc[k][i][j] for j in range(n)] for k in range(n)]
                # (f_j . e_i)(e_k) = f_j(e_i e_k) = sc[i][k][j]
                rm = [[self.sc[i][k][j] for j in range(n)] for k in range(n)]
                left.append(ExactMatrix.from_rows(f, lm))
                right.append(ExactMatrix.from_rows(f, rm))
            self._cache["DA"] = Bimodule(self, self, n, left, right)
        return self._cache["DA"]

    def element_from_coords(self, coords) -> tuple:
        return tuple(self.field.coerce(c) for c in coords)

    def random_element(self, rng) -> tuple:
        return tuple(self.field.random(rng) for _ in range(self.dim))

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "dimension": self.dim,
            "structure_constants": [[[f.show(c) for c in row] for row in plane]
                                    for plane in self.sc],
            "unit": [f.show(c) for c in self.unit],
            "basis_labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Algebra":
        field = Field.from_json(data["field"])
        return cls(field, data["structure_constants"], data["unit"],
                   labels=data.get("basis_labels"))

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.sc == other.sc and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self.sc, self.unit))

    def __repr__(self):
        return f"Algebra(dim={self.dim} over {self.field})"


class SimpleData:
    """A simple left module, a primitive idempotent covering it, and its block size."""

    __slots__ = ("module", "idempotent", "block_size", "index")

    def __init__(self, module, idempotent, block_size, index):
        self.module = module
        self.idempotent = idempotent
        self.block_size = block_size
        self.index = index


class ProjectiveData:
    """A*e as a module, its basis as elements of A, and the generator e in module coords."""

    __slots__ = ("module", "basis_in_algebra", "generator", "simple_index")

    def __init__(self, module, basis_in_algebra, generator, simple_index):
        self.module = module
        self.basis_in_algebra = basis_in_algebra
        self.generator = generator
        self.simple_index = simple_index


def algebra_from_structure_constants(field: Field, sc, unit, labels=None) -> Algebra:
    """Construct and fully verify an algebra; rejects non-associative/non-unital input."""
    return Algebra(field, sc, unit, labels=labels, verify=True)


class LeftModule:
    __slots__ = ("algebra", "dim", "action", "_cache")

    def __init__(self, algebra: Algebra, dim: int, action, verify: bool = True):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)
        self._cache = {}
        if len(self.action) != algebra.dim:
            raise ShapeMismatch("one action matrix per algebra basis element required")
        for m in self.action:
            if m.rows != dim or m.cols != dim or m.field != algebra.field:
                raise ShapeMismatch("action matrix has wrong shape or field")
        if verify:
            self._verify()

    def _verify(self):
        a = self.algebra
        f = a.field
        n = a.dim
        ident = ExactMatrix.identity(f, self.dim)
        acted = action_of_element(self, a.unit)
        if acted != ident:
            raise UnitFailure(-1)
        for i in range(n):
            for j in range(n):
                lhs = self.action[i].mul(self.action[j])
                rhs = ExactMatrix.zeros(f, self.dim, self.dim)
                for k, c in enumerate(a.sc[i][j]):
                    if c:
                        rhs = rhs.add(self.action[k].scale(c))
                if lhs != rhs:
                    raise AssociativityFailure(i, j, -1)

    def act(self, avec, mvec) -> tuple:
        f = self.algebra.field
        out = zero_vec(f, self.dim)
        for i, c in enumerate(avec):
            if c:
                out = vec_add(f, out, vec_scale(f, c, self.action[i].apply(mvec)))
        return out

    def is_zero(self) -> bool:
        return self.dim == 0

    def direct_sum(self, other: "LeftModule") -> "LeftModule":
        if other.algebra != self.algebra:
            raise FieldMismatch("direct sum over different algebras")
        f = self.algebra.field
        n = self.dim + other.dim
        action = []
        for i in range(self.algebra.dim):
            m = ExactMatrix.zeros(f, n, n)
            ent = list(m.entries)
            a, b = self.action[i], other.action[i]
            for r in range(a.rows):
                for c in range(a.cols):
                    ent[r * n + c] = a.get(r, c)
            for r in range(b.rows):
                for c in range(b.cols):
                    ent[(self.dim + r) * n + (self.dim + c)] = b.get(r, c)
            action.append(ExactMatrix(f, n, n, ent))
        return LeftModule(self.algebra, n, action, verify=False)

    def dual(self) -> "LeftModule":
        """D(M) as a left module over the opposite algebra (action transposed)."""
        op = self.algebra.opposite()
        return LeftModule(op, self.dim, [m.transpose() for m in self.action],
                          verify=False)

    def radical_subspace(self) -> list[tuple]:
        """Basis of J*M."""
        f = self.algebra.field
        vs = []
        for r in self.algebra.radical_basis():
            for j in range(self.dim):
                vs.append(self.act(r, unit_vec(f, self.dim, j)))
        return span_basis(f, vs, self.dim)

    def top_data(self):
        """(reps, proj) for M/J*M: reps are coset representative vectors in M."""
        f = self.algebra.field
        rad = self.radical_subspace()
        full = [unit_vec(f, self.dim, j) for j in range(self.dim)]
        reps = quotient_reps(f, rad, full, self.dim)
        return rad, reps

    def to_json(self) -> dict:
        return {"dimension": self.dim, "action": [m.to_json() for m in self.action]}

    @classmethod
    def from_json(cls, algebra: Algebra, data: dict) -> "LeftModule":
        dim = int(data["dimension"])
        action = [ExactMatrix.from_json(algebra.field, m) for m in data["action"]]
        return cls(algebra, dim, action)

    def __eq__(self, other):
        return (isinstance(other, LeftModule) and self.algebra == other.algebra
                and self.dim == other.dim and self.action == other.action)

    def __hash__(self):
        return hash((self.algebra, self.dim, self.action))

    def __repr__(self):
        return f"LeftModule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


def action_of_element(m: LeftModule, avec) -> ExactMatrix:
    f = m.algebra.field
    out = ExactMatrix.zeros(f, m.dim, m.dim)
    for i, c in enumerate(avec):
        if c:
            out = out.add(m.action[i].scale(c))
    return out


def zero_module(algebra: Algebra) -> LeftModule:
    return LeftModule(algebra, 0, [ExactMatrix.zeros(algebra.field, 0, 0)
                                   for _ in range(algebra.dim)], verify=False)


def submodule_closure(m: LeftModule, vectors) -> list[tuple]:
    """Span of the given vectors closed under the action, as a basis."""
    f = m.algebra.field
    basis = span_basis(f, list(vectors), m.dim)
    while True:
        new = list(basis)
        for i in range(m.algebra.dim):
            for v in basis:
                new.append(m.action[i].apply(v))
        nb = span_basis(f, new, m.dim)
        if len(nb) == len(basis):
            return basis
        basis = nb


def submodule_as_module(m: LeftModule, basis: list[tuple]) -> LeftModule:
    """The submodule spanned by `basis` (must be action-invariant) in its own coords."""
    f = m.algebra.field
    action = []
    for i in range(m.algebra.dim):
        cols = []
        for v in basis:
            w = m.action[i].apply(v)
            coords = coords_in_span(f, basis, w, m.dim)
            if coords is None:
                raise HomalgError("subspace is not action-invariant")
            cols.append(coords)
        action.append(ExactMatrix.from_cols(f, cols, nrows=len(basis)))
    return LeftModule(m.algebra, len(basis), action, verify=False)


def quotient_module(m: LeftModule, sub_basis: list[tuple]):
    """(Q, reps) where Q = M/span(sub) and reps are coset representatives in M."""
    f = m.algebra.field
    full = [unit_vec(f, m.dim, j) for j in range(m.dim)]
    reps = quotient_reps(f, sub_basis, full, m.dim)
    amb = list(sub_basis) + reps
    action = []
    for i in range(m.algebra.dim):
        cols = []
        for v in reps:
            w = m.action[i].apply(v)
            coords = coords_in_span(f, amb, w, m.dim)
            if coords is None:
                raise HomalgError("quotient by a non-invariant subspace")
            cols.append(coords[len(sub_basis):])
        action.append(ExactMatrix.from_cols(f, cols, nrows=len(reps)))
    return LeftModule(m.algebra, len(reps), action, verify=False), reps


class ModuleMap:
    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: LeftModule, target: LeftModule, matrix: ExactMatrix,
                 verify: bool = True):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ShapeMismatch("module map matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if verify and not self.is_equivariant():
            raise HomalgError("module map is not equivariant")

    def is_equivariant(self) -> bool:
        for i in range(self.source.algebra.dim):
            if self.matrix.mul(self.source.action[i]) != self.target.action[i].mul(self.matrix):
                return False
        return True

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


def hom_basis(m: LeftModule, n: LeftModule) -> list[ExactMatrix]:
    """Basis of Hom_A(M, N), via the equivariance linear system."""
    if m.algebra != n.algebra:
        raise FieldMismatch("Hom between modules over different algebras")
    f = m.algebra.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    nun = dm * dn  # unknowns T[r][c], r < dn, c < dm
    rows = []
    z = f.zero()
    for i in range(m.algebra.dim):
        am, an = m.action[i], n.action[i]
        for r in range(dn):
            for c in range(dm):
                row = [z] * nun
                for k in range(dm):
                    v = am.get(k, c)
                    if v:
                        row[r * dm + k] = f.add(row[r * dm + k], v)
                for k in range(dn):
                    v = an.get(r, k)
                    if v:
                        row[k * dm + c] = f.sub(row[k * dm + c], v)
                if any(x for x in row):
                    rows.append(row)
    if not rows:
        ker_cols = [unit_vec(f, nun, i) for i in range(nun)]
    else:
        ker = ExactMatrix.from_rows(f, rows).kernel_basis()
        ker_cols = ker.columns()
    out = []
    for v in ker_cols:
        out.append(ExactMatrix(f, dn, dm, list(v)))
    return out


def _invertible_combination(field: Field, mats: list[ExactMatrix]):
    """Search for an invertible combination; exact and deterministic.

    A nonzero det polynomial of degree n cannot vanish on a grid S^k with
    |S| > n, so exhausting the grid proves non-existence over Q. Over F_p the
    grid is all of F_p^k, which is the whole space of candidates.
    """
    if not mats:
        return None
    n = mats[0].rows
    if n == 0:
        return ExactMatrix.zeros(field, 0, 0)
    for m in mats:
        if m.rank() == n:
            return m
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            for c in (1, -1, 2, -2, 3):
                cand = mats[i].add(mats[j].scale(field.coerce(c)))
                if cand.rank() == n:
                    return cand
    k = len(mats)
    if field.p is None:
        values = list(range(n + 1))
    else:
        values = list(range(min(field.p, n + 1))) if field.p > n else list(range(field.p))
        if field.p <= n:
            # grid = all of F_p^k: exhaustive, hence still a proof
            values = list(range(field.p))
    total = len(values) ** k
    if total > 400000:
        raise HomalgError("isomorphism search space too large to certify")
    idx = [0] * k
    while True:
        cand = ExactMatrix.zeros(field, n, n)
        nonzero = False
        for t, m in enumerate(mats):
            if idx[t]:
                cand = cand.add(m.scale(field.coerce(values[idx[t]])))
                nonzero = True
        if nonzero and cand.rank() == n:
            return cand
        pos = 0
        while pos < k:
            idx[pos] += 1
            if idx[pos] < len(values):
                break
            idx[pos] = 0
            pos += 1
        if pos == k:
            return None


def module_isomorphism(m: LeftModule, n: LeftModule):
    """An invertible equivariant matrix M -> N, or None (a certified verdict)."""
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return ExactMatrix.zeros(m.algebra.field, 0, 0)
    basis = hom_basis(m, n)
    if not basis:
        return None
    return _invertible_combination(m.algebra.field, basis)


def modules_isomorphic(m: LeftModule, n: LeftModule) -> bool:
    return module_isomorphism(m, n) is not None


class Bimodule:
    """An (A_left, A_right)-bimodule: commuting left and right actions."""

    __slots__ = ("algebra_left", "algebra_right", "dim", "left_action", "right_action")

    def __init__(self, algebra_left: Algebra, algebra_right: Algebra, dim: int,
                 left_action, right_action, verify: bool = True):
        self.algebra_left = algebra_left
        self.algebra_right = algebra_right
        self.dim = dim
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        if verify:
            self.as_left_module()       # verifies left axioms
            self.as_right_module()      # verifies right axioms
            for la in self.left_action:
                for ra in self.right_action:
                    if la.mul(ra) != ra.mul(la):
                        raise HomalgError("bimodule actions do not commute")

    def as_left_module(self) -> LeftModule:
        return LeftModule(self.algebra_left, self.dim, self.left_action)

    def as_right_module(self) -> LeftModule:
        """The right structure as a left module over the opposite algebra."""
        return LeftModule(self.algebra_right.opposite(), self.dim, self.right_action)

    def act_left(self, avec, v) -> tuple:
        return self.as_left_module().act(avec, v)   # small dims; clarity over caching

    def act_right(self, v, avec) -> tuple:
        f = self.algebra_right.field
        out = zero_vec(f, self.dim)
        for i, c in enumerate(avec):
            if c:
                out = vec_add(f, out, vec_scale(f, c, self.right_action[i].apply(v)))
        return out

    def swap_sides(self) -> "Bimodule":
        """The same carrier viewed as an (A_right^op, A_left^op)-bimodule."""
        return Bimodule(self.algebra_right.opposite(), self.algebra_left.opposite(),
                        self.dim, self.right_action, self.left_action, verify=False)

    def __repr__(self):
        return f"Bimodule(dim={self.dim})"


def regular_bimodule(a: Algebra) -> Bimodule:
    """A as an (A, A)-bimodule."""
    f = a.field
    left = [a.left_mult_matrix(unit_vec(f, a.dim, i)) for i in range(a.dim)]
    right = [a.right_mult_matrix(unit_vec(f, a.dim, i)) for i in range(a.dim)]
    return Bimodule(a, a, a.dim, left, right, verify=False)


def semisimple_quotient_bimodule(a: Algebra) -> Bimodule:
    """A/J as an (A, A)-bimodule."""
    f = a.field
    rad = a.radical_basis()
    full = [unit_vec(f, a.dim, i) for i in range(a.dim)]
    reps = quotient_reps(f, rad, full, a.dim)
    amb = list(rad) + reps
    left = []
    right = []
    for i in range(a.dim):
        e = unit_vec(f, a.dim, i)
        lcols = []
        rcols = []
        for v in reps:
            lw = a.mult(e, v)
            rw = a.mult(v, e)
            lcols.append(coords_in_span(f, amb, lw, a.dim)[len(rad):])
            rcols.append(coords_in_span(f, amb, rw, a.dim)[len(rad):])
        left.append(ExactMatrix.from_cols(f, lcols, nrows=len(reps)))
        right.append(ExactMatrix.from_cols(f, rcols, nrows=len(reps)))
    return Bimodule(a, a, len(reps), left, right, verify=False)


def bimodules_isomorphic(m: Bimodule, n: Bimodule) -> bool:
    """Bimodule isomorphism: equivariance for both actions plus invertibility."""
    if m.dim != n.dim:
        return False
    f = m.algebra_left.field
    # solve both equivariance systems at once by stacking
    lm = hom_basis(m.as_left_module(), n.as_left_module())
    if not lm:
        return m.dim == 0
    # filter to right-equivariant combinations: solve in the span
    conds = []
    for t, mat in enumerate(lm):
        conds.append(mat)
    # unknown coefficients x_t with sum x_t (mat_t ra_i - ra'_i mat_t) = 0
    rows = []
    z = f.zero()
    for i in range(m.algebra_right.dim):
        ra_m, ra_n = m.right_action[i], n.right_action[i]
        for r in range(n.dim):
            for c in range(m.dim):
                row = []
                for mat in lm:
                    lhs = mat.mul(ra_m).get(r, c)
                    rhs = ra_n.mul(mat).get(r, c)
                    row.append(f.sub(lhs, rhs))
                rows.append(row)
    if rows:
        ker = ExactMatrix.from_rows(f, rows).kernel_basis()
        combos = []
        for v in ker.columns():
            acc = ExactMatrix.zeros(f, n.dim, m.dim)
            for t, c in enumerate(v):
                if c:
                    acc = acc.add(lm[t].scale(c))
            combos.append(acc)
    else:
        combos = lm
    combos = [c for c in combos if not c.is_zero()]
    return _invertible_combination(f, combos) is not None
