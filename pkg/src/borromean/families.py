"""The two canonical families of rotation-generated finite-index subgroups.

Even-index groups G(m,n,o) are generated by four 180-degree rotations about
axes parallel to x and y only; odd-index groups H(p,q,r) by three rotations,
one per coordinate direction.  Every finite-index subgroup generated by
rotations is equivalent (conjugate in the extension by the diagonal
rotation) to exactly one member of one family; `classify` recovers it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import BadParams, FamilyMismatch, NotInUhat
from .euclid import (IDENTITY, GEN_A, GEN_B, GEN_C, IntIsometry, RotationAxis,
                     axis_of, compose, compose_all, conjugate, eval_phi,
                     in_uhat, invert, rotation_about, transform_axis,
                     word_for_element)
from .lattice import IntegerLattice
from .words import Word


@dataclass(frozen=True)
class Box:
    """Axis-aligned fundamental parallelepiped with integer corners."""

    lo: tuple[int, int, int]
    hi: tuple[int, int, int]

    def __post_init__(self):
        if not all(h > l for l, h in zip(self.lo, self.hi)):
            raise ValueError("box must have positive extent")

    @property
    def volume(self) -> int:
        return (self.hi[0] - self.lo[0]) * (self.hi[1] - self.lo[1]) * (self.hi[2] - self.lo[2])

    def to_json(self) -> dict:
        return {"lo": list(self.lo), "hi": list(self.hi)}


@dataclass(frozen=True)
class CanonicalSubgroup:
    """One of the family groups, possibly conjugated out of canonical position.

    `conjugator` maps the group this object describes into canonical
    position: conjugating a member by it lands in the canonical family group.
    Constructors produce canonical groups with identity conjugator.
    """

    family: str                    # "G" or "H"
    params: tuple[int, int, int]
    conjugator: IntIsometry = field(default_factory=IntIsometry.identity)

    def __post_init__(self):
        if self.family not in ("G", "H"):
            raise BadParams("family must be 'G' or 'H'")
        _validate_params(self.family, self.params)

    # -- structure of the canonical group ----------------------------------

    @property
    def generator_axes(self) -> tuple[RotationAxis, ...]:
        if self.family == "G":
            m, n, o = self.params
            return (RotationAxis("x", -2 * n, o),
                    RotationAxis("x", 0, o),
                    RotationAxis("y", -2 * m + 1, 0),
                    RotationAxis("y", 1, 0))
        p, q, r = self.params
        return (RotationAxis("x", 0, r),
                RotationAxis("y", p, 0),
                RotationAxis("z", 0, q))

    @property
    def generators(self) -> tuple[IntIsometry, ...]:
        """Generators of the described group (conjugated out of canonical
        position when the conjugator is not the identity)."""
        c_inv = invert(self.conjugator)
        return tuple(conjugate(rotation_about(ax), c_inv) for ax in self.generator_axes)

    def translation_lattice(self) -> IntegerLattice:
        """Translation subgroup of the canonical group."""
        if self.family == "G":
            m, n, o = self.params
            vecs = [(4 * m, 0, 0), (0, 4 * n, 0), (0, 0, 4 * o)]
        else:
            p, q, r = self.params
            vecs = [(4 * p, 0, 0), (0, 4 * q, 0), (2 * p, 2 * q, 2 * r)]
        return IntegerLattice.from_vectors(vecs)

    def coset_representatives(self) -> dict[tuple, IntIsometry]:
        """Coset representative of the translation subgroup per linear part."""
        if self.family == "G":
            a1 = rotation_about(self.generator_axes[1])
            b1 = rotation_about(self.generator_axes[3])
            reps = [IDENTITY, a1, b1, compose(a1, b1)]
        else:
            reps = [IDENTITY] + [rotation_about(ax) for ax in self.generator_axes]
        return {r.linear: r for r in reps}

    def to_json(self) -> dict:
        return {"family": self.family, "params": list(self.params),
                "conjugator": self.conjugator.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalSubgroup":
        conj = data.get("conjugator")
        return cls(data["family"], tuple(data["params"]),
                   IntIsometry.from_json(conj) if conj else IDENTITY)


def _validate_params(family: str, params) -> None:
    if len(params) != 3 or any(x < 1 for x in params):
        raise BadParams("parameters must be three positive integers")
    if family == "G":
        if params[2] % 2 == 0:
            raise BadParams("third parameter of a G group must be odd")
    else:
        p, q, r = params
        if any(x % 2 == 0 for x in params):
            raise BadParams("H parameters must all be odd")
        if not (p <= q and p <= r):
            raise BadParams("H parameters need p <= q and p <= r")
        if len({p, q, r}) < 3 and not (p <= q <= r):
            raise BadParams("repeated H parameters need p <= q <= r")


def group_G(m: int, n: int, o: int) -> CanonicalSubgroup:
    """Even-index group with x- and y-parallel rotation axes; index 2mno."""
    return CanonicalSubgroup("G", (int(m), int(n), int(o)))


def group_H(p: int, q: int, r: int) -> CanonicalSubgroup:
    """Odd-index group with axes in all three directions; index pqr."""
    return CanonicalSubgroup("H", (int(p), int(q), int(r)))


def index(h: CanonicalSubgroup) -> int:
    if h.family == "G":
        m, n, o = h.params
        return 2 * m * n * o
    p, q, r = h.params
    return p * q * r


def box(h: CanonicalSubgroup) -> Box:
    if h.family == "G":
        m, n, o = h.params
        return Box((-2 * m + 1, -2 * n, 0), (2 * m + 1, 2 * n, o))
    p, q, r = h.params
    return Box((-p, -q, -r), (p, q, r))


def triple(h: CanonicalSubgroup) -> tuple[Optional[int], Optional[int], Optional[int]]:
    """Adjacent-axis-distance invariant per direction (None when no axes)."""
    if h.family == "G":
        m, n, o = h.params
        return (2 * n, 2 * m, None)
    p, q, r = h.params
    return (2 * r, 2 * p, 2 * q)


def member(h: CanonicalSubgroup, g: IntIsometry) -> bool:
    """Exact membership of a group element in the described subgroup."""
    if not in_uhat(g):
        raise NotInUhat("membership is decided for group elements only")
    gg = conjugate(g, h.conjugator)
    rep = h.coset_representatives().get(gg.linear)
    if rep is None:
        return False
    t = compose(gg, invert(rep))
    assert t.is_translation()
    return h.translation_lattice().contains(t.translation)


def lift_generators(h: CanonicalSubgroup) -> list[Word]:
    """Words in the 90-degree group whose images are the canonical generators.

    Each word decomposes as translation words times a single letter, so its
    image is a rotation; together the images generate the canonical group.
    """
    return [word_for_element(rotation_about(ax)) for ax in h.generator_axes]


def construct_index(n: int) -> CanonicalSubgroup:
    """A rotation-generated subgroup of index exactly n, for any n >= 1."""
    if n < 1:
        raise BadParams("index must be a positive integer")
    if n % 2 == 0:
        return group_G(n // 2, 1, 1)
    return group_H(1, 1, n)


# ---------------------------------------------------------------------------
# Abelianization

@dataclass(frozen=True)
class AbelianClass:
    """Image of a word in the abelianization (Z mod 4)^3 of the 90-degree group."""

    triple: tuple[int, int, int]

    def __add__(self, other: "AbelianClass") -> "AbelianClass":
        return AbelianClass(tuple((a + b) % 4 for a, b in zip(self.triple, other.triple)))


def abelianize(w: Word) -> AbelianClass:
    """Letter-count homomorphism mod 4: a -> (1,0,0), b -> (0,1,0), c -> (0,0,1)."""
    counts = {"a": 0, "b": 0, "c": 0}
    for ch in w:
        counts[ch.lower()] += 1 if ch.islower() else -1
    return AbelianClass(tuple(counts[k] % 4 for k in "abc"))


# ---------------------------------------------------------------------------
# Witness rotations for odd-index groups

_BASE_AXES = {"a": RotationAxis("x", 0, 1),
              "b": RotationAxis("y", 1, 0),
              "c": RotationAxis("z", 0, 1)}

_LINEARS_FIXING_DIRECTION = [IDENTITY.linear, GEN_A.linear, GEN_B.linear, GEN_C.linear]


def _element_mapping_axis(src: RotationAxis, dst: RotationAxis) -> IntIsometry:
    """Some group element carrying one axis line onto a parallel one."""
    assert src.direction == dst.direction
    d = "xyz".index(src.direction)
    others = [i for i in range(3) if i != d]
    src_pt = src.point(0)
    dst_pt = dst.point(0)
    for linear in _LINEARS_FIXING_DIRECTION:
        for free in (0, 2):
            v = [0, 0, 0]
            v[d] = free
            for i in others:
                v[i] = dst_pt[i] - sum(linear[i][j] * src_pt[j] for j in range(3))
            cand = IntIsometry(linear, tuple(v))
            if in_uhat(cand) and transform_axis(cand, src) == dst:
                return cand
    raise AssertionError(f"no group element maps {src} to {dst}")


def witness_rotations(h: CanonicalSubgroup) -> list[Word]:
    """Nine conjugates u x^e u^-1 meeting all nine rotation classes.

    Odd-index groups contain a member of each of the nine conjugacy classes
    of rotations in the 90-degree group; the witnesses conjugate each
    generator power onto a rotation axis of the subgroup.
    """
    if h.family != "H":
        raise FamilyMismatch("witness rotations exist for the odd-index family")
    out = []
    for letter, target in zip("abc", h.generator_axes):
        mover = _element_mapping_axis(_BASE_AXES[letter], target)
        u = word_for_element(mover)
        for e in (1, 2, 3):
            out.append(u * Word(letter * e) * u.inverse())
    return out


# ---------------------------------------------------------------------------
# Index verification by counting cube orbits

def count_cube_orbits(h: CanonicalSubgroup) -> int:
    """Number of subgroup orbits of tessellation cubes meeting the box.

    The box is a fundamental domain, so this count equals the index; it is
    the oracle against the closed-form index formulas.
    """
    b = box(h)
    lat = h.translation_lattice()
    reps = list(h.coset_representatives().values())
    ranges = []
    for lo, hi in zip(b.lo, b.hi):
        lo_c = lo - 1 + ((lo - 1) % 2)   # smallest even >= lo-1
        ranges.append(range(lo_c, hi + 2, 2))
    orbits = set()
    for center in itertools.product(*ranges):
        key = min(lat.reduce(rep(center)) for rep in reps)
        orbits.add(key)
    return len(orbits)
