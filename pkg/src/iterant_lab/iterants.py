"""Sums of (coefficient vector) x (group element) with the twisted product.

The product rule is ``(a g)(b h) = (a . b^g)(g h)`` where ``(b^g)_i = b_{i*g}``
and ``.`` is the componentwise product.  One engine covers both the
regular-action algebras (vectors of length |G| over a group G) and the
natural-action algebras over the full symmetric group, which differ only in
the chosen action.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import Group, GroupAction, Permutation, natural_action, regular_action
from .scalars import GaussianRational, ScalarLike, scalar_from_json, scalar_to_json

Vector = tuple[GaussianRational, ...]


def _as_vector(entries, degree: int) -> Vector:
    vec = tuple(GaussianRational.of(x) for x in entries)
    if len(vec) != degree:
        raise ValueError(f"coefficient vector has length {len(vec)}, expected {degree}")
    return vec


@dataclass(frozen=True)
class IterantAlgebra:
    """The algebra of finite sums a*g for a fixed group action."""

    action: GroupAction

    @property
    def degree(self) -> int:
        return self.action.degree

    @property
    def group(self) -> Group:
        return self.action.group

    def zero(self) -> IterantElement:
        return IterantElement(self, ())

    def one(self) -> IterantElement:
        return self.scalar(1)

    def scalar(self, value: ScalarLike) -> IterantElement:
        c = GaussianRational.of(value)
        return self.vector([c] * self.degree)

    def vector(self, entries) -> IterantElement:
        """A pure coefficient vector, attached to the identity element."""
        return self.term(entries, self.group.identity)

    def term(self, entries, g: int | str) -> IterantElement:
        gid = self.group.index_of(g) if isinstance(g, str) else g
        vec = _as_vector(entries, self.degree)
        if all(c.is_zero() for c in vec):
            return self.zero()
        return IterantElement(self, ((gid, vec),))

    def element_of(self, g: int | str) -> IterantElement:
        """The group element itself (all-ones coefficient vector)."""
        return self.term([1] * self.degree, g)

    def from_terms(self, terms) -> IterantElement:
        total = self.zero()
        for entries, g in terms:
            total = total + self.term(entries, g)
        return total

    def shifted_vector(self, vec: Vector, g: int) -> Vector:
        """The action of g on a coefficient vector: (b^g)_i = b_{i*g}."""
        maps = self.action.point_maps[g]
        return tuple(vec[maps[i]] for i in range(self.degree))

    def basis(self) -> list[IterantElement]:
        """All e_i * g; a module basis of the algebra."""
        out = []
        for gid in range(self.group.order):
            for i in range(self.degree):
                entries = [1 if k == i else 0 for k in range(self.degree)]
                out.append(self.term(entries, gid))
        return out

    def dimension(self) -> int:
        return self.degree * self.group.order

    def __repr__(self) -> str:
        return f"IterantAlgebra({self.action.label}, dim={self.dimension()})"


@dataclass(frozen=True)
class IterantElement:
    """Immutable element: sorted nonzero (group id, coefficient vector) terms."""

    algebra: IterantAlgebra
    terms: tuple[tuple[int, Vector], ...]

    def _check_same(self, other: IterantElement) -> None:
        if self.algebra.action is other.algebra.action:
            return
        if self.algebra != other.algebra:
            raise ValueError(
                f"algebra mismatch: {self.algebra!r} vs {other.algebra!r}"
            )

    def coefficient(self, g: int | str) -> Vector:
        gid = self.algebra.group.index_of(g) if isinstance(g, str) else g
        for tid, vec in self.terms:
            if tid == gid:
                return vec
        return tuple(GaussianRational() for _ in range(self.algebra.degree))

    def __add__(self, other: IterantElement) -> IterantElement:
        self._check_same(other)
        acc: dict[int, list[GaussianRational]] = {}
        for gid, vec in self.terms + other.terms:
            if gid in acc:
                acc[gid] = [a + b for a, b in zip(acc[gid], vec)]
            else:
                acc[gid] = list(vec)
        return _from_accumulator(self.algebra, acc)

    def __sub__(self, other: IterantElement) -> IterantElement:
        return self + (-other)

    def __neg__(self) -> IterantElement:
        return IterantElement(
            self.algebra,
            tuple((gid, tuple(-c for c in vec)) for gid, vec in self.terms),
        )

    def __mul__(self, other):
        if isinstance(other, IterantElement):
            self._check_same(other)
            algebra = self.algebra
            group = algebra.group
            acc: dict[int, list[GaussianRational]] = {}
            for g, a in self.terms:
                for h, b in other.terms:
                    gh = group.mul(g, h)
                    shifted = algebra.shifted_vector(b, g)
                    prod = [x * y for x, y in zip(a, shifted)]
                    if gh in acc:
                        acc[gh] = [p + q for p, q in zip(acc[gh], prod)]
                    else:
                        acc[gh] = prod
            return _from_accumulator(algebra, acc)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> IterantElement:
        return self.scale(other)

    def scale(self, factor: ScalarLike) -> IterantElement:
        c = GaussianRational.of(factor)
        if c.is_zero():
            return self.algebra.zero()
        return IterantElement(
            self.algebra,
            tuple((gid, tuple(c * x for x in vec)) for gid, vec in self.terms),
        )

    def __pow__(self, k: int) -> IterantElement:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> GaussianRational | None:
        """The scalar c if self == c * 1, else None."""
        if self.is_zero():
            return GaussianRational()
        if len(self.terms) != 1:
            return None
        gid, vec = self.terms[0]
        if gid != self.algebra.group.identity:
            return None
        first = vec[0]
        return first if all(c == first for c in vec) else None

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "g": self.algebra.group.names[gid],
                    "vec": [scalar_to_json(c) for c in vec],
                }
                for gid, vec in self.terms
            ]
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for gid, vec in self.terms:
            vec_text = "[" + ",".join(str(c) for c in vec) + "]"
            name = self.algebra.group.names[gid]
            parts.append(vec_text if gid == self.algebra.group.identity else f"{vec_text}{name}")
        return " + ".join(parts)


def _from_accumulator(algebra: IterantAlgebra, acc: dict) -> IterantElement:
    terms = []
    for gid in sorted(acc):
        vec = tuple(acc[gid])
        if any(not c.is_zero() for c in vec):
            terms.append((gid, vec))
    return IterantElement(algebra, tuple(terms))


def element_from_json(algebra: IterantAlgebra, obj: dict) -> IterantElement:
    total = algebra.zero()
    for term in obj.get("terms", []):
        vec = [scalar_from_json(c) for c in term["vec"]]
        total = total + algebra.term(vec, term["g"])
    return total


# ---------------------------------------------------------------------------
# Period-two algebra: vectors [a, b] with the order-two shift, written "e".


@lru_cache(maxsize=None)
def period_two_algebra() -> IterantAlgebra:
    """Vectors [a, b] and the swap element e with e^2 = 1 and [a,b]e = e[b,a]."""
    group = Group(("1", "e"), ((0, 1), (1, 0)), validate=False, label="s2")
    action = GroupAction(group, 2, ((0, 1), (1, 0)), label="period-2")
    return IterantAlgebra(action)


def shift_element(algebra: IterantAlgebra | None = None) -> IterantElement:
    """The bare shift e (all-ones coefficient on the swap)."""
    algebra = algebra or period_two_algebra()
    return algebra.element_of("e")


def polarity_element(first: int = -1) -> IterantElement:
    """[first, -first] on the identity; squares to 1 and anticommutes with e."""
    return period_two_algebra().vector([first, -first])


def imaginary_unit(first: int = -1) -> IterantElement:
    """[first, -first]e; both sign choices square to -1."""
    return period_two_algebra().term([first, -first], "e")


def conjugate_period2(z: IterantElement) -> IterantElement:
    """A + Be  ->  reverse(A) - Be, the hypercomplex conjugate."""
    algebra = z.algebra
    if algebra.action is not period_two_algebra().action:
        raise ValueError("conjugate is defined on the period-two algebra only")
    a = z.coefficient("1")
    b = z.coefficient("e")
    return algebra.vector((a[1], a[0])) - algebra.term(b, "e")


def determinant_period2(z: IterantElement) -> GaussianRational:
    """D(Z) = Z * conjugate(Z), always a scalar; equals ab - cd for [a,b] + [c,d]e."""
    product = z * conjugate_period2(z)
    value = product.is_scalar()
    if value is None:
        raise ArithmeticError("Z * conj(Z) did not collapse to a scalar")
    return value


def format_period2(z: IterantElement) -> str:
    """Text form "[a,b] + [c,d]e" with zero parts omitted."""
    algebra = z.algebra
    a = z.coefficient("1")
    b = z.coefficient("e")
    parts = []
    if any(not c.is_zero() for c in a):
        parts.append(f"[{a[0]},{a[1]}]")
    if any(not c.is_zero() for c in b):
        parts.append(f"[{b[0]},{b[1]}]e")
    return " + ".join(parts) if parts else "0"


def parse_period2(text: str) -> IterantElement:
    """Parse "[a,b] + [c,d]e" (either part optional) into the period-two algebra."""
    from .scalars import parse_scalar

    algebra = period_two_algebra()
    total = algebra.zero()
    s = text.replace(" ", "")
    if not s or s == "0":
        return total
    pos = 0
    sign = 1
    while pos < len(s):
        if s[pos] == "+":
            sign, pos = 1, pos + 1
            continue
        if s[pos] == "-":
            sign, pos = -1, pos + 1
            continue
        if s[pos] != "[":
            raise ValueError(f"expected '[' at position {pos} in {text!r}")
        close = s.index("]", pos)
        inner = s[pos + 1 : close]
        entries = [parse_scalar(p) for p in inner.split(",")]
        if len(entries) != 2:
            raise ValueError(f"expected two components in {inner!r}")
        pos = close + 1
        g = "1"
        if pos < len(s) and s[pos] == "e":
            g = "e"
            pos += 1
        total = total + algebra.term([sign * c for c in entries], g)
    return total


# ---------------------------------------------------------------------------
# Natural symmetric-group algebras (length-n vectors, all of S_n acting).


@lru_cache(maxsize=None)
def natural_sn_algebra(n: int) -> IterantAlgebra:
    return IterantAlgebra(natural_action(n))


def regular_algebra(group: Group) -> IterantAlgebra:
    return IterantAlgebra(regular_action(group))


MAX_SYMMETRIC_DEGREE = 5


def an_basis(n: int) -> list[IterantElement]:
    """The n * n! basis elements e_i * g of the natural S_n algebra."""
    if n < 1 or n > MAX_SYMMETRIC_DEGREE:
        raise ValueError(
            f"basis enumeration supports 1 <= n <= {MAX_SYMMETRIC_DEGREE}; n! terms blow up beyond that"
        )
    return natural_sn_algebra(n).basis()


def term_by_permutation(
    algebra: IterantAlgebra, entries, perm: Permutation
) -> IterantElement:
    """Build a term keyed by the group element that acts as the given permutation."""
    for gid in range(algebra.group.order):
        if algebra.action.point_maps[gid] == perm.images:
            return algebra.term(entries, gid)
    raise ValueError(f"no element of {algebra.group.label} acts as {perm}")
