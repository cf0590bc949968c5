"""Rank, kernel, axiom verification and theorem-bound classification.

Rank is the GF(2) dimension of the linear span of the codeword set; the
kernel K(C) collects the translations z with C + z = C.  With the zero
word in C the kernel is a subspace of C, so only codewords need testing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .core import (
    BinaryWord,
    GroupElement,
    GroupTable,
    canonical_perm,
    compose,
    group_mul,
    u_element,
)
from .typeq import TypeQCode, codeword_ints


class NotKernelElement(ValueError):
    """Word is not a kernel element of the code."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check; witness points at the first violation."""

    ok: bool
    failure: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def two_adic_split(length: int) -> tuple[int, int]:
    """(s, n') with length = 2^s * n' and n' odd."""
    s = 0
    while length % 2 == 0:
        length //= 2
        s += 1
    return s, length


def rank_of_ints(words: Iterable[int]) -> int:
    """GF(2) rank by elimination on int rows."""
    return len(_span_basis(words))


def _span_basis(words: Iterable[int]) -> list[int]:
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
    return basis


def compute_rank(codewords: Iterable[BinaryWord]) -> int:
    """Dimension of the linear span of the codeword set."""
    words = list(codewords)
    if not words:
        raise ValueError("empty codeword set")
    length = words[0].length
    if any(w.length != length for w in words):
        raise ValueError("codewords of mixed lengths")
    return rank_of_ints(w.bits for w in words)


def kernel_ints(words: Iterable[int]) -> list[int]:
    """Kernel of a codeword set containing 0, as sorted ints."""
    word_set = frozenset(words)
    if 0 not in word_set:
        raise ValueError("zero word must belong to the code")
    kernel = [
        z for z in word_set if all((z ^ c) in word_set for c in word_set)
    ]
    kernel.sort()
    return kernel


def _kernel_basis(kernel: list[int], length: int) -> tuple[int, list[int]]:
    """(dimension, basis): the all-ones word leads, then first-bit-zero
    representatives in increasing order."""
    u = (1 << length) - 1
    basis: list[int] = []
    span: list[int] = []
    rest = sorted((z for z in kernel if z != u), key=lambda z: (z & 1, z))
    ordered = ([u] if u in kernel else []) + rest
    for z in ordered:
        residue = z
        for b in span:
            residue = min(residue, residue ^ b)
        if residue:
            basis.append(z)
            span.append(residue)
            span.sort(reverse=True)
    dim = len(basis)
    if 1 << dim != len(kernel):
        raise AssertionError("kernel is not a linear space")
    return dim, basis


def compute_kernel(codewords: Iterable[BinaryWord]) -> tuple[int, list[BinaryWord]]:
    """(dimension, basis) of K(C); the all-ones word leads the basis."""
    words = list(codewords)
    if not words:
        raise ValueError("empty codeword set")
    length = words[0].length
    if any(w.length != length for w in words):
        raise ValueError("codewords of mixed lengths")
    kernel = kernel_ints(w.bits for w in words)
    dim, basis = _kernel_basis(kernel, length)
    return dim, [BinaryWord(b, length) for b in basis]


def kernel_by_automorphism(code: TypeQCode) -> tuple[int, list[BinaryWord]]:
    """Kernel via the membership test pi_z in Aut(C), for cross-validation."""
    n = code.n
    words = codeword_ints(code)
    word_set = frozenset(words)
    kernel = []
    for idx, z in enumerate(words):
        g = GroupElement(idx % (4 * n), idx >= 4 * n)
        pi = canonical_perm(g, n)
        if all(pi.apply_bits(c) in word_set for c in word_set):
            kernel.append(z)
    kernel.sort()
    dim, basis = _kernel_basis(kernel, code.length)
    return dim, [BinaryWord(b, code.length) for b in basis]


def rank_via_generators(code: TypeQCode) -> int:
    """Rank from the span {a, xa, ..., x^(2n-1)a, kappa}; needs kernel dim 2."""
    from .bitops import rot_halves

    words = codeword_ints(code)
    kernel = kernel_ints(words)
    length = code.length
    u = (1 << length) - 1
    if len(kernel) != 4:
        raise ValueError("generator span shortcut requires kernel dimension 2")
    kappa = next(z for z in kernel if z not in (0, u))
    gens = [rot_halves(code.a_vec.bits, 2 * code.n, j) for j in range(2 * code.n)]
    gens.append(kappa)
    return rank_of_ints(gens)


def is_linear_code(words: Iterable[int]) -> bool:
    """Closure of the word set under XOR (0 assumed present)."""
    word_set = frozenset(words)
    return all((x ^ y) in word_set for x in word_set for y in word_set)


def verify_hfp(code: TypeQCode) -> Verdict:
    """Full propelinear + Hadamard verification of a type-Q candidate.

    Checks the defining relations as words, distinctness of the 8n words,
    weight 2n outside {e, u} (sufficient for the Hadamard property),
    fixed-point-freeness outside {e, u} with identity permutations on
    {e, u}, and the homomorphism law on the generator pairs.
    """
    n = code.n
    length = code.length
    half = 2 * n
    u = (1 << length) - 1
    words = codeword_ints(code)

    if words[2 * n] != u:
        return Verdict(False, "RelationViolation", "a^{2n} != u")
    b = words[4 * n]
    pi_b = canonical_perm(GroupElement(0, True), n)
    if b ^ pi_b.apply_bits(b) != u:
        return Verdict(False, "RelationViolation", "b^2 != u")
    if b ^ pi_b.apply_bits(words[1]) != words[4 * n + (4 * n - 1)]:
        return Verdict(False, "RelationViolation", "b a != a^{-1} b")

    seen: dict[int, GroupElement] = {}
    for idx, w in enumerate(words):
        g = GroupElement(idx % (4 * n), idx >= 4 * n)
        if w in seen:
            return Verdict(False, "DistinctnessViolation", (seen[w], g))
        seen[w] = g

    uu = u_element(n)
    for idx, w in enumerate(words):
        g = GroupElement(idx % (4 * n), idx >= 4 * n)
        if g == GroupElement(0, False) or g == uu:
            continue
        if w.bit_count() != half:
            return Verdict(False, "WeightViolation", (g, w.bit_count()))

    for g in (GroupElement(0, False), uu):
        if not canonical_perm(g, n).is_identity():
            return Verdict(False, "IdentityPermViolation", g)
    for idx in range(len(words)):
        g = GroupElement(idx % (4 * n), idx >= 4 * n)
        if g == GroupElement(0, False) or g == uu:
            continue
        fixed = canonical_perm(g, n).fixed_points()
        if fixed:
            return Verdict(False, "FixedPointViolation", (g, fixed[0]))

    gens = (GroupElement(1, False), GroupElement(0, True))
    for g in gens:
        for h in gens:
            lhs = compose(canonical_perm(g, n), canonical_perm(h, n))
            rhs = canonical_perm(group_mul(g, h, n), n)
            if lhs != rhs:
                return Verdict(False, "HomomorphismViolation", (g, h))
    return PASS


def verify_hadamard_group(table: GroupTable, D: Iterable[int], u: int) -> Verdict:
    """Exhaustive check of the Hadamard group conditions on (G, D, u).

    Condition (i): |aD n D| = |G|/4 for a outside <u>; condition (ii):
    |aD n {b, bu}| = 1 for all a, b.  Also checks the derived facts that
    D and uD are disjoint and cover G, and that u is a central involution.
    """
    order = table.order
    if order % 8 != 0:
        return Verdict(False, "OrderViolation", order)
    n = order // 8
    d_set = frozenset(D)
    if len(d_set) != 4 * n:
        return Verdict(False, "SubsetSizeViolation", len(d_set))
    e = table.identity
    if u == e or table.product(u, u) != e:
        return Verdict(False, "InvolutionViolation", u)
    if not table.is_central(u):
        return Verdict(False, "CentralityViolation", u)
    u_d = frozenset(table.product(u, d) for d in d_set)
    if d_set & u_d:
        return Verdict(False, "DisjointnessViolation", sorted(d_set & u_d)[0])
    if len(d_set | u_d) != order:
        return Verdict(False, "CoverViolation", None)
    a_d = {a: frozenset(table.product(a, d) for d in d_set) for a in range(order)}
    for a in range(order):
        if a == e or a == u:
            continue
        inter = len(a_d[a] & d_set)
        if inter != 2 * n:
            return Verdict(False, "IntersectionViolation", (a, inter))
    for a in range(order):
        for b in range(order):
            count = (b in a_d[a]) + (table.product(u, b) in a_d[a])
            if count != 1:
                return Verdict(False, "TransversalViolation", (a, b, count))
    return PASS


def project_onto_support(
    codewords: Iterable[BinaryWord], s: BinaryWord
) -> set[BinaryWord]:
    """Restriction of every codeword to the support of the kernel word s."""
    words = list(codewords)
    if any(w.length != s.length for w in words):
        raise ValueError("codewords of mixed lengths")
    word_set = frozenset(w.bits for w in words)
    u = (1 << s.length) - 1
    if s.bits in (0, u):
        raise ValueError("projection requires s outside {e, u}")
    if any((s.bits ^ c) not in word_set for c in word_set):
        raise NotKernelElement(s.to_string())
    positions = [i for i in range(s.length) if (s.bits >> i) & 1]
    out = set()
    for w in word_set:
        bits = 0
        for j, i in enumerate(positions):
            bits |= ((w >> i) & 1) << j
        out.add(BinaryWord(bits, len(positions)))
    return out


@dataclass(frozen=True)
class AnalysisReport:
    """Structural invariants of a code of length 4n = 2^s * n'."""

    length: int
    s: int
    n_prime: int
    rank: int
    kernel_dim: int
    kernel_basis: tuple[BinaryWord, ...]
    is_linear: bool
    is_hfp: bool
    is_type_q: bool
    bound_violations: tuple[str, ...]
    a_in_kernel: bool | None = None
    failure: str | None = None
    witness: object = None


def classify(report: AnalysisReport) -> tuple[str, ...]:
    """Violated theorem bounds (empty when consistent).

    Any violation on a verified code signals an implementation bug: the
    bounds are proved facts about type-Q codes.
    """
    r, k, s = report.rank, report.kernel_dim, report.s
    n2 = report.length // 2
    violations = []
    ceiling = (1 << (s + 1)) * report.n_prime // (1 << k) + k - 1
    if r > ceiling:
        violations.append(f"rank {r} exceeds coset bound {ceiling}")
    if report.is_linear:
        if report.length != 1 << s:
            violations.append("linear code of length not a power of two")
        if not (r == k == s + 1):
            violations.append(f"linear code with (r, k) = ({r}, {k}) != s+1")
        return tuple(violations)
    if not 1 <= k <= s - 1:
        violations.append(f"kernel dimension {k} outside [1, {s - 1}]")
    if s == 2:
        if r != report.length - 1:
            violations.append(f"s=2 rank {r} != {report.length - 1}")
        if k != 1:
            violations.append(f"s=2 kernel dimension {k} != 1")
    elif s == 3:
        if r != n2:
            violations.append(f"s=3 rank {r} != {n2}")
        if k not in (1, 2):
            violations.append(f"s=3 kernel dimension {k} not in {{1, 2}}")
    else:
        if r > n2:
            violations.append(f"s>3 rank {r} > {n2}")
        if k not in (1, 2):
            violations.append(f"s>3 kernel dimension {k} not in {{1, 2}}")
    if report.a_in_kernel:
        violations.append("nonlinear code with a in K(C)")
    return tuple(violations)


def analyze(code: TypeQCode) -> AnalysisReport:
    """Verify, then compute rank/kernel and check every applicable bound."""
    words = codeword_ints(code)
    length = code.length
    verdict = verify_hfp(code)
    rank = rank_of_ints(words)
    kernel = kernel_ints(words)
    dim, basis = _kernel_basis(kernel, length)
    s, n_prime = two_adic_split(length)
    linear = is_linear_code(words)
    report = AnalysisReport(
        length=length,
        s=s,
        n_prime=n_prime,
        rank=rank,
        kernel_dim=dim,
        kernel_basis=tuple(BinaryWord(b, length) for b in basis),
        is_linear=linear,
        is_hfp=verdict.ok,
        is_type_q=verdict.ok,
        bound_violations=(),
        a_in_kernel=code.a_vec.bits in set(kernel),
        failure=verdict.failure,
        witness=verdict.witness,
    )
    if verdict.ok:
        violations = classify(report)
        if violations:
            report = replace(report, bound_violations=violations)
    return report
