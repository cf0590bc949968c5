"""Binary words, coordinate permutations and the abstract type-Q group.

Words are length-L bit vectors over GF(2) (int bitset, bit i = coordinate
i+1).  A permutation pi acts on words by pi(v)_{pi(i)} = v_i, so
pi(e_i) = e_{pi(i)}.  The propelinear product is x * y = x + pi_x(y).

The type-Q group of order 8n is <a, b : a^{4n} = e, a^{2n} = b^2,
b^{-1} a b = a^{-1}>; elements are kept in the normal form a^i b^j with
0 <= i < 4n, j in {0, 1}.  Its canonical coordinate permutations on 4n
positions are pi_a = (1,...,2n)(2n+1,...,4n) and pi_b = (1,4n)(2,4n-1)...
(2n,2n+1); g -> pi_g is a homomorphism with kernel {e, a^{2n}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class BinaryWord:
    """Fixed-length bit vector over GF(2); positions are 1-based externally."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError("word length must be positive")
        if self.bits >> self.length:
            raise ValueError("bits exceed word length")

    @classmethod
    def zero(cls, length: int) -> "BinaryWord":
        return cls(0, length)

    @classmethod
    def all_ones(cls, length: int) -> "BinaryWord":
        return cls((1 << length) - 1, length)

    @classmethod
    def unit(cls, i: int, length: int) -> "BinaryWord":
        """The word e_i with a single one at position i (1-based)."""
        if not 1 <= i <= length:
            raise ValueError(f"position {i} out of range 1..{length}")
        return cls(1 << (i - 1), length)

    @classmethod
    def from_string(cls, s: str) -> "BinaryWord":
        """Parse a 0/1 string; leftmost character is position 1."""
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"not a 0/1 string: {s!r}")
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
        return cls(bits, len(s))

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def first_bit(self) -> int:
        """Value of position 1."""
        return self.bits & 1

    def bit(self, i: int) -> int:
        """Value of position i (1-based)."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        return (self.bits >> (i - 1)) & 1

    def support(self) -> tuple[int, ...]:
        """1-based positions of the nonzero coordinates."""
        return tuple(i + 1 for i in range(self.length) if (self.bits >> i) & 1)

    def complement(self) -> "BinaryWord":
        return BinaryWord(self.bits ^ ((1 << self.length) - 1), self.length)

    def _check_same_length(self, other: "BinaryWord") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: "BinaryWord") -> "BinaryWord":
        self._check_same_length(other)
        return BinaryWord(self.bits ^ other.bits, self.length)

    def distance(self, other: "BinaryWord") -> int:
        self._check_same_length(other)
        return (self.bits ^ other.bits).bit_count()


@dataclass(frozen=True)
class Perm:
    """Permutation of coordinate positions; images[i] = pi(i), 0-based."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images are not a bijection of 0..L-1")

    @classmethod
    def identity(cls, length: int) -> "Perm":
        return cls(tuple(range(length)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Perm":
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, length: int, cycles: Iterable[Iterable[int]]) -> "Perm":
        """Build from disjoint cycles in 1-based notation."""
        images = list(range(length))
        for cycle in cycles:
            cyc = [c - 1 for c in cycle]
            for i, c in enumerate(cyc):
                images[c] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> tuple[int, ...]:
        """1-based positions fixed by the permutation."""
        return tuple(i + 1 for i, j in enumerate(self.images) if i == j)

    def apply_bits(self, bits: int) -> int:
        out = 0
        i = 0
        while bits:
            if bits & 1:
                out |= 1 << self.images[i]
            bits >>= 1
            i += 1
        return out

    def order(self) -> int:
        n = 1
        p = self
        ident = Perm.identity(len(self.images))
        while p != ident:
            p = compose(p, self)
            n += 1
        return n


def apply_perm(p: Perm, w: BinaryWord) -> BinaryWord:
    """Place the value of position i at position pi(i)."""
    if len(p) != w.length:
        raise ValueError(f"length mismatch: perm {len(p)} vs word {w.length}")
    return BinaryWord(p.apply_bits(w.bits), w.length)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i)); apply_perm(compose(p, q), w) applies q first."""
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} != {len(q)}")
    return Perm(tuple(p.images[j] for j in q.images))


def prop_mul(x: BinaryWord, pi_x: Perm, y: BinaryWord) -> BinaryWord:
    """Propelinear product x * y = x + pi_x(y)."""
    return x ^ apply_perm(pi_x, y)


@dataclass(frozen=True)
class GroupElement:
    """Normal form a^exp_a * b^has_b of the type-Q group."""

    exp_a: int
    has_b: bool

    def __repr__(self) -> str:
        return f"a^{self.exp_a}b" if self.has_b else f"a^{self.exp_a}"


IDENTITY = GroupElement(0, False)


def element(exp_a: int, has_b: bool, n: int) -> GroupElement:
    """Normalize the exponent into [0, 4n)."""
    return GroupElement(exp_a % (4 * n), bool(has_b))


def u_element(n: int) -> GroupElement:
    """The central involution a^{2n} = b^2."""
    return GroupElement(2 * n, False)


def group_mul(g: GroupElement, h: GroupElement, n: int) -> GroupElement:
    """Product in normal form via b a^j = a^{-j} b and b^2 = a^{2n}."""
    order_a = 4 * n
    if not g.has_b:
        return GroupElement((g.exp_a + h.exp_a) % order_a, h.has_b)
    if not h.has_b:
        return GroupElement((g.exp_a - h.exp_a) % order_a, True)
    return GroupElement((g.exp_a - h.exp_a + 2 * n) % order_a, False)


def group_inv(g: GroupElement, n: int) -> GroupElement:
    order_a = 4 * n
    if not g.has_b:
        return GroupElement((-g.exp_a) % order_a, False)
    return GroupElement((g.exp_a + 2 * n) % order_a, True)


def group_pow(g: GroupElement, k: int, n: int) -> GroupElement:
    if k < 0:
        return group_pow(group_inv(g, n), -k, n)
    out = IDENTITY
    for _ in range(k):
        out = group_mul(out, g, n)
    return out


def element_order(g: GroupElement, n: int) -> int:
    k = 1
    h = g
    while h != IDENTITY:
        h = group_mul(h, g, n)
        k += 1
    return k


def all_elements(n: int) -> Iterator[GroupElement]:
    """The 8n elements: a^0..a^{4n-1}, then a^0 b..a^{4n-1} b."""
    for has_b in (False, True):
        for i in range(4 * n):
            yield GroupElement(i, has_b)


def element_index(g: GroupElement, n: int) -> int:
    """Index of g in the all_elements(n) ordering."""
    return g.exp_a + (4 * n if g.has_b else 0)


def pi_a(n: int) -> Perm:
    """Rotation by one inside each half: (1,...,2n)(2n+1,...,4n)."""
    half = 2 * n
    images = [(i + 1) % half for i in range(half)]
    images += [half + ((i + 1) % half) for i in range(half)]
    return Perm(tuple(images))


def pi_b(n: int) -> Perm:
    """Order-2 reflection (1,4n)(2,4n-1)...(2n,2n+1)."""
    length = 4 * n
    return Perm(tuple(length - 1 - i for i in range(length)))


def canonical_perm(g: GroupElement, n: int) -> Perm:
    """pi_g = pi_a^exp_a o pi_b^has_b; kernel of g -> pi_g is {e, a^{2n}}."""
    half = 2 * n
    k = g.exp_a % half
    if g.has_b:
        # pi_a^k o pi_b: i -> pi_a^k(4n-1-i)
        images = []
        for i in range(4 * n):
            j = 4 * n - 1 - i
            if j < half:
                images.append((j + k) % half)
            else:
                images.append(half + ((j - half + k) % half))
        return Perm(tuple(images))
    images = [(i + k) % half for i in range(half)]
    images += [half + ((i + k) % half) for i in range(half)]
    return Perm(tuple(images))


@dataclass(frozen=True)
class GroupTable:
    """Multiplication table of a finite group; entries are element indices."""

    mul: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self) -> None:
        m = len(self.mul)
        for row in self.mul:
            if len(row) != m:
                raise ValueError("multiplication table is not square")

    @property
    def order(self) -> int:
        return len(self.mul)

    def product(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def inv(self, i: int) -> int:
        for j in range(self.order):
            if self.mul[i][j] == self.identity:
                return j
        raise ValueError(f"element {i} has no inverse; not a group table")

    def is_central(self, i: int) -> bool:
        return all(self.mul[i][j] == self.mul[j][i] for j in range(self.order))


def type_q_table(n: int) -> GroupTable:
    """Multiplication table of the abstract type-Q group of order 8n."""
    elems = list(all_elements(n))
    mul = tuple(
        tuple(element_index(group_mul(g, h, n), n) for h in elems) for g in elems
    )
    return GroupTable(mul, identity=0)
