"""The bundled algebra corpus: semisimple, self-injective, hereditary and
bounded-quiver cases, each over Q and over F_5.

Names: k, kxk, kx2, kx3, a2, a3, square. Fixture ids are "<name>@Q" or
"<name>@F5".
"""
from __future__ import annotations

from .algebra import Algebra
from .field import Field, QQ
from .quiver import Quiver, algebra_from_quiver

F5 = Field.prime(5)

FIXTURE_NAMES = ("k", "kxk", "kx2", "kx3", "a2", "a3", "square")
FIELD_TAGS = {"Q": QQ, "F5": F5}


def _build(name: str, field: Field) -> Algebra:
    if name == "k":
        q = Quiver(["v"], [])
        return algebra_from_quiver(field, q)
    if name == "kxk":
        q = Quiver(["u", "v"], [])
        return algebra_from_quiver(field, q)
    if name == "kx2":
        q = Quiver(["v"], [("x", "v", "v")])
        return algebra_from_quiver(field, q, relations=["x*x"])
    if name == "kx3":
        q = Quiver(["v"], [("x", "v", "v")])
        return algebra_from_quiver(field, q, relations=["x*x*x"])
    if name == "a2":
        q = Quiver(["1", "2"], [("a", "1", "2")])
        return algebra_from_quiver(field, q)
    if name == "a3":
        q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
        return algebra_from_quiver(field, q)
    if name == "square":
        # commutative square with one zero relation: a*b = c*d and a*b = 0
        q = Quiver(["1", "2", "3", "4"],
                   [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
        return algebra_from_quiver(field, q, relations=["a*b - c*d", "a*b"])
    raise KeyError(f"unknown fixture {name!r}")


_cache: dict[str, Algebra] = {}


def fixture_ids() -> list[str]:
    return [f"{n}@{t}" for n in FIXTURE_NAMES for t in ("Q", "F5")]


def get_fixture(fixture_id: str) -> Algebra:
    if fixture_id not in _cache:
        if "@" not in fixture_id:
            raise KeyError(f"fixture id must look like name@Q or name@F5: {fixture_id!r}")
        name, tag = fixture_id.split("@", 1)
        if name not in FIXTURE_NAMES or tag not in FIELD_TAGS:
            raise KeyError(f"unknown fixture {fixture_id!r}")
        _cache[fixture_id] = _build(name, FIELD_TAGS[tag])
    return _cache[fixture_id]
