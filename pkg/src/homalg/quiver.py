"""Path algebras of finite quivers modulo relations.

Composition convention (fixed package-wide, see README): paths compose left to
right, p*q means "p then q", so a path is multiplied by e_source on the left
and e_target on the right, and A*e_v is spanned by the paths ending at v.

Relations are linear combinations of parallel paths, e.g. "a*b - c*d" or
"x*x". Without a truncation bound the relations must be homogeneous in path
length (the ideal is then graded and the degreewise closure is exact); with a
truncation bound N every path of length >= N is killed as well and arbitrary
relations are accepted.

Algebras built here carry certified structure: the radical is the span of the
surviving positive-length paths, the vertex idempotents are a complete system
of orthogonal primitive idempotents. Both facts are re-verified at
construction (nilpotency, semisimple quotient dimension), so downstream code
can use them over any field, including F_p with small p where the trace-form
radical criterion would refuse.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra
from .errors import HomalgError, InfiniteDimensional, ParseError
from .field import Field
from .matrix import ExactMatrix, unit_vec

DEFAULT_LENGTH_BOUND = 24


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        if len(self.vindex) != len(self.vertices):
            raise ParseError("duplicate vertex names")
        self.arrows = []
        self.aindex = {}
        for (name, src, tgt) in arrows:
            if src not in self.vindex or tgt not in self.vindex:
                raise ParseError(f"arrow {name}: unknown vertex")
            if name in self.aindex or name in self.vindex:
                raise ParseError(f"duplicate name {name!r}")
            self.aindex[name] = len(self.arrows)
            self.arrows.append((name, self.vindex[src], self.vindex[tgt]))

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        arrows = [(a["name"], a["from"], a["to"]) for a in data.get("arrows", [])]
        return cls(data["vertices"], arrows)


class _Path:
    __slots__ = ("start", "arrows", "end")

    def __init__(self, start: int, arrows: tuple, end: int):
        self.start = start
        self.arrows = arrows
        self.end = end

    def key(self):
        return (self.start, self.arrows)

    def label(self, q: Quiver) -> str:
        if not self.arrows:
            return f"e_{q.vertices[self.start]}"
        return "*".join(q.arrows[i][0] for i in self.arrows)


def _enumerate_paths(q: Quiver, max_len: int) -> list[_Path]:
    paths = [_Path(v, (), v) for v in range(len(q.vertices))]
    frontier = list(paths)
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            for ai, (_, src, tgt) in enumerate(q.arrows):
                if src == p.end:
                    nxt.append(_Path(p.start, p.arrows + (ai,), tgt))
        if not nxt:
            break
        paths.extend(nxt)
        frontier = nxt
    return paths


def _parse_relation(q: Quiver, field: Field, expr: str, path_index: dict):
    """Parse "2*a*b - c*d" into (vector over the path basis, monomial lengths)."""
    s = expr.replace(" ", "")
    if not s:
        raise ParseError("empty relation")
    terms = []
    cur = ""
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    while i < len(s):
        c = s[i]
        if c in "+-":
            terms.append((sign, cur))
            cur = ""
            sign = -1 if c == "-" else 1
        else:
            cur += c
        i += 1
    terms.append((sign, cur))
    vec = {}
    lengths = set()
    endpoints = None
    for sign, term in terms:
        if not term:
            raise ParseError(f"malformed relation {expr!r}")
        coeff = Fraction(sign)
        names = []
        for tok in term.split("*"):
            if not tok:
                raise ParseError(f"malformed relation {expr!r}")
            if tok in q.aindex:
                names.append(tok)
            else:
                try:
                    coeff *= Fraction(tok)
                except ValueError as exc:
                    raise ParseError(f"unknown arrow {tok!r} in {expr!r}") from exc
        if not names:
            raise ParseError(f"relation term without arrows in {expr!r}")
        arrows = tuple(q.aindex[n] for n in names)
        start = q.arrows[arrows[0]][1]
        end = q.arrows[arrows[0]][2]
        for ai in arrows[1:]:
            if q.arrows[ai][1] != end:
                raise ParseError(f"non-composable monomial in {expr!r}")
            end = q.arrows[ai][2]
        key = (start, arrows)
        if key not in path_index:
            raise ParseError(f"monomial in {expr!r} exceeds the length bound")
        if endpoints is None:
            endpoints = (start, end)
        elif endpoints != (start, end):
            raise ParseError(f"relation {expr!r} mixes non-parallel paths")
        lengths.add(len(arrows))
        idx = path_index[key]
        vec[idx] = field.add(vec.get(idx, field.zero()), field.coerce(coeff))
    return vec, lengths


class _IdealReducer:
    """Row-echelon reduction data for the relation ideal inside the path space."""

    def __init__(self, field: Field, dim: int, generators: list[dict]):
        self.field = field
        self.dim = dim
        self.rows = []      # list of (pivot_index, dense row)
        for g in generators:
            self.add(g)

    def add(self, sparse_vec: dict) -> bool:
        f = self.field
        v = [f.zero()] * self.dim
        for i, c in sparse_vec.items():
            v[i] = c
        v = self.reduce(v)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = f.inv(v[piv])
        v = [f.mul(inv, c) for c in v]
        for p, row in self.rows:
            if row[piv]:
                c = row[piv]
                for j in range(self.dim):
                    if v[j]:
                        row[j] = f.sub(row[j], f.mul(c, v[j]))
        self.rows.append((piv, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    def reduce(self, vec: list) -> list:
        f = self.field
        v = list(vec)
        for piv, row in self.rows:
            c = v[piv]
            if c:
                for j in range(self.dim):
                    if row[j]:
                        v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def pivots(self) -> set:
        return {p for p, _ in self.rows}


def algebra_from_quiver(field: Field, quiver: Quiver, relations=(), truncation=None,
                        length_bound: int = DEFAULT_LENGTH_BOUND) -> Algebra:
    if truncation is not None:
        if truncation < 1:
            raise ParseError("truncation must be >= 1")
        max_len = truncation
    else:
        max_len = length_bound
    paths = _enumerate_paths(quiver, max_len)
    path_index = {p.key(): i for i, p in enumerate(paths)}
    npaths = len(paths)
    f = field

    rel_vecs = []
    homogeneous = True
    min_rel_len = None
    for expr in relations:
        vec, lengths = _parse_relation(quiver, f, expr, path_index)
        rel_vecs.append(vec)
        if len(lengths) > 1:
            homogeneous = False
        ml = min(lengths)
        min_rel_len = ml if min_rel_len is None else min(min_rel_len, ml)
    if truncation is None and not homogeneous:
        raise ParseError("inhomogeneous relations require a truncation bound")
    if truncation is not None:
        for p in paths:
            if len(p.arrows) == truncation:
                rel_vecs.append({path_index[p.key()]: f.one()})

    # two-sided closure: multiply every generator by paths on both sides
    reducer = _IdealReducer(f, npaths, [])
    frontier = list(rel_vecs)
    for vec in rel_vecs:
        reducer.add(vec)
    # pre-compute composable path concatenations lazily
    def _mul_path_keys(pk, qk):
        (ps, pa) = pk
        (qs, qa) = qk
        p_end = paths[path_index[pk]].end
        if p_end != qs:
            return None
        key = (ps, pa + qa)
        return key

    changed = True
    while changed:
        changed = False
        ngens = []
        for vec in frontier:
            for p in paths:
                # left multiply by p and right multiply by p
                for side in ("L", "R"):
                    out = {}
                    ok = True
                    for idx, c in vec.items():
                        target = paths[idx]
                        if side == "L":
                            nk = _mul_path_keys(p.key(), target.key())
                        else:
                            nk = _mul_path_keys(target.key(), p.key())
                        if nk is None:
                            ok = False
                            break
                        if nk not in path_index:
                            # spills past the bound: legal to drop only when truncating
                            if truncation is not None:
                                continue
                            ok = False
                            break
                        j = path_index[nk]
                        out[j] = f.add(out.get(j, f.zero()), c)
                    if ok and out:
                        ngens.append(out)
        frontier = []
        for g in ngens:
            if reducer.add(g):
                frontier.append(g)
                changed = True

    pivots = reducer.pivots()
    surviving = [i for i in range(npaths) if i not in pivots]
    surv_paths = [paths[i] for i in surviving]
    if truncation is None:
        max_surv = max((len(paths[i].arrows) for i in surviving), default=0)
        if max_surv >= max_len or 2 * max_surv > max_len:
            raise InfiniteDimensional(
                f"path basis does not stabilize below length bound {max_len}")

    dim = len(surviving)
    pos_of = {i: t for t, i in enumerate(surviving)}

    def reduce_to_basis(sparse: dict) -> tuple:
        v = [f.zero()] * npaths
        for i, c in sparse.items():
            v[i] = c
        v = reducer.reduce(v)
        return tuple(v[i] for i in surviving)

    sc = []
    for p in surv_paths:
        plane = []
        for q_ in surv_paths:
            if p.end != q_.start:
                plane.append((f.zero(),) * dim)
                continue
            key = (p.start, p.arrows + q_.arrows)
            if key not in path_index:
                if truncation is not None:
                    plane.append((f.zero(),) * dim)
                    continue
                raise InfiniteDimensional("product of basis paths exceeds the bound")
            plane.append(reduce_to_basis({path_index[key]: f.one()}))
        sc.append(tuple(plane))

    unit = [f.zero()] * dim
    labels = []
    vertex_positions = []
    radical_positions = []
    for t, p in enumerate(surv_paths):
        labels.append(p.label(quiver))
        if not p.arrows:
            unit[t] = f.one()
            vertex_positions.append(t)
        else:
            radical_positions.append(t)

    if len(vertex_positions) != len(quiver.vertices):
        raise HomalgError("a vertex idempotent died in the quotient; ideal is not admissible")

    arrows_certified = (min_rel_len is None or min_rel_len >= 2) and \
        (truncation is None or truncation >= 2)
    radical_basis = None
    idems = None
    if arrows_certified:
        radical_basis = [unit_vec(f, dim, t) for t in radical_positions]
        idems = [unit_vec(f, dim, t) for t in vertex_positions]

    a = Algebra(f, sc, unit, labels=labels, verify=True,
                radical_basis=radical_basis, primitive_idempotents=idems)
    if radical_basis is not None:
        from .semisimple import _ideal_is_nilpotent, _is_two_sided_ideal
        if not _ideal_is_nilpotent(a, radical_basis) or not _is_two_sided_ideal(a, radical_basis):
            raise HomalgError("combinatorial radical failed verification; "
                             "pass relations of length >= 2 only")
    return a


def algebra_from_quiver_json(data: dict) -> Algebra:
    field = Field.from_json(data.get("field", {"kind": "rationals"}))
    q = Quiver.from_json(data)
    return algebra_from_quiver(field, q, data.get("relations", ()),
                               truncation=data.get("truncation"))
