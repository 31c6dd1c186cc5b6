"""Signed-permutation Weyl groups, interlacing classes, and packet combinatorics.

Covers the desk-scale combinatorial layer: double-coset counting behind the
two-element packets, pure inner forms, relevant pairs, the encoded
admissibility table, and the predicate-disjointness explorer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import AssumptionError, InvalidParameterError
from .numerics import HalfInt

__all__ = [
    "SignedPermutation",
    "WeylGroup",
    "InterlaceClass",
    "RealForm",
    "interlace_classify",
    "weyl_order",
    "weyl_conjugate",
    "DoubleCosetResult",
    "double_cosets",
    "double_cosets_brute",
    "arthur_packet",
    "pure_inner_forms",
    "relevant_pairs",
    "admissibility_table",
    "ConjectureReport",
    "conjecture_explore",
    "default_support_predicates",
]


class SignedPermutation:
    """A signed permutation of {1..n}: e_i -> sign * e_{|images[i-1]|}."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if 0 in images:
            raise InvalidParameterError("signed permutation images must be nonzero")
        if sorted(abs(v) for v in images) != list(range(1, len(images) + 1)):
            raise InvalidParameterError("underlying index map must be a bijection")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (self * other)(e_i) = self(other(e_i))
        out = []
        for v in other.images:
            w = self.images[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return SignedPermutation(out)

    def inverse(self) -> "SignedPermutation":
        out = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(out)

    def apply_signed_index(self, index: int, sign: int) -> tuple[int, int]:
        """Image (index, sign) of the signed basis vector sign * e_index."""
        v = self.images[index - 1]
        return abs(v), sign * (1 if v > 0 else -1)

    @property
    def negative_count(self) -> int:
        return sum(1 for v in self.images if v < 0)

    @property
    def in_type_d(self) -> bool:
        return self.negative_count % 2 == 0

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"


@dataclass(frozen=True)
class WeylGroup:
    """Type B_n or D_n signed-permutation group."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("B", "D"):
            raise InvalidParameterError("family must be 'B' or 'D'")
        if self.rank < 1:
            raise InvalidParameterError("rank must be >= 1")

    def order(self) -> int:
        base = 2**self.rank
        if self.family == "D":
            base //= 2
        import math

        return base * math.factorial(self.rank)

    def elements(self):
        """Iterate all elements; intended for rank <= 6 brute-force oracles."""
        n = self.rank
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                if self.family == "D" and signs.count(-1) % 2 == 1:
                    continue
                yield SignedPermutation(s * v for s, v in zip(signs, perm))

    def generators(self) -> list[SignedPermutation]:
        n = self.rank
        gens = []
        for i in range(1, n):
            images = list(range(1, n + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            gens.append(SignedPermutation(images))
        if self.family == "B":
            images = list(range(1, n + 1))
            images[-1] = -images[-1]
            gens.append(SignedPermutation(images))
        elif n >= 2:
            # sign-swap of the last two coordinates keeps the flip count even
            images = list(range(1, n + 1))
            images[-2], images[-1] = -images[-1], -images[-2]
            gens.append(SignedPermutation(images))
        return gens


def weyl_order(w: WeylGroup) -> int:
    return w.order()


def weyl_conjugate(seq_a, seq_b, family: str) -> bool:
    """Whether two weight sequences lie in one signed-permutation orbit.

    Type B: equality of the descending absolute values.  Type D: additionally
    the sign-flip parities must match, unless some entry is zero.
    """
    a = [HalfInt(v) if not isinstance(v, HalfInt) else v for v in seq_a]
    b = [HalfInt(v) if not isinstance(v, HalfInt) else v for v in seq_b]
    if len(a) != len(b):
        return False
    key_a = sorted((abs(v).twice for v in a), reverse=True)
    key_b = sorted((abs(v).twice for v in b), reverse=True)
    if key_a != key_b:
        return False
    if family == "B":
        return True
    if 0 in key_a:
        return True
    neg_a = sum(1 for v in a if v < 0)
    neg_b = sum(1 for v in b if v < 0)
    return neg_a % 2 == neg_b % 2


class InterlaceClass(Enum):
    FINITE_TYPE = "FiniteType"
    INFINITE_TYPE_1 = "InfiniteType1"
    NO_PATTERN = "NoPattern"


def _coerce_entries(seq):
    entries = getattr(seq, "entries", seq)
    return [v if isinstance(v, HalfInt) else HalfInt(v) for v in entries]


def interlace_classify(seq_a, seq_b) -> InterlaceClass:
    """Classify the interlacing pattern of two decreasing half-integer sequences.

    Finite type:      a1 > b1 > a2 > b2 > ... through the shorter sequence.
    Infinite type 1:  b1 >= a1 > a2 > b2 > a3 > b3 > ...  (first comparison
    non-strict; the a_i > b_i > a_{i+1} alternation resumes at i = 2).
    """
    a = _coerce_entries(seq_a)
    b = _coerce_entries(seq_b)
    m, n = len(a), len(b)
    if n not in (m - 1, m):
        raise InvalidParameterError(f"length mismatch: need n in {{m-1, m}}, got m={m}, n={n}")

    def chain_finite() -> bool:
        for i in range(n):
            if not a[i] > b[i]:
                return False
            if i + 1 < m and not b[i] > a[i + 1]:
                return False
        return True

    def chain_infinite() -> bool:
        if m < 2 or n < 1:
            return False
        if not b[0] >= a[0]:
            return False
        if not a[0] > a[1]:
            return False
        for i in range(1, n):
            if not a[i] > b[i]:
                return False
            if i + 1 < m and not b[i] > a[i + 1]:
                return False
        return True

    if chain_finite():
        return InterlaceClass.FINITE_TYPE
    if chain_infinite():
        return InterlaceClass.INFINITE_TYPE_1
    return InterlaceClass.NO_PATTERN


# ---------------------------------------------------------------------------
# Double cosets behind the two-element packets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCosetResult:
    count: int
    representatives: tuple[SignedPermutation, ...]
    coset_space_size: int
    orbits: tuple[tuple[tuple[int, int], ...], ...]


def _validate_coset_setup(left, mid: WeylGroup, right: WeylGroup):
    r1, r2 = left
    if mid.family != "D":
        raise AssumptionError("middle group must be of type D")
    if right.family != "D" or right.rank != mid.rank - 1:
        raise AssumptionError("right factor must be D_{m-1} fixing the first coordinate")
    if r1.family != "D" or r2.family != "D":
        raise AssumptionError("left factors must be type D (even orthogonal Weyl groups)")
    if r1.rank + r2.rank != mid.rank:
        raise AssumptionError("left block ranks must sum to the middle rank")
    if r1.rank < 2 or r2.rank < 2:
        raise AssumptionError("left block ranks must be >= 2 (p, q >= 4)")


def _left_generators_on_blocks(r1: int, r2: int, m: int) -> list[SignedPermutation]:
    gens = []
    for offset, rank in ((0, r1), (r1, r2)):
        for i in range(1, rank):
            images = list(range(1, m + 1))
            images[offset + i - 1], images[offset + i] = images[offset + i], images[offset + i - 1]
            gens.append(SignedPermutation(images))
        images = list(range(1, m + 1))
        images[offset + rank - 2], images[offset + rank - 1] = (
            -images[offset + rank - 1],
            -images[offset + rank - 2],
        )
        gens.append(SignedPermutation(images))
    return gens


def _coset_representative(dest: tuple[int, int], m: int) -> SignedPermutation:
    """A type-D element sending e_1 to sign * e_index."""
    index, sign = dest
    images = list(range(1, m + 1))
    if index == 1 and sign == 1:
        return SignedPermutation(images)
    images[0], images[index - 1] = sign * index, sign * 1
    if index == 1:
        # e_1 -> -e_1 needs a second flip to stay in type D
        images[1] = -images[1]
    return SignedPermutation(images)


def double_cosets(left: tuple[WeylGroup, WeylGroup], mid: WeylGroup, right: WeylGroup) -> DoubleCosetResult:
    """Count left\\mid/right double cosets via the destination-of-e_1 model.

    The right factor is the stabilizer of e_1 in mid = D_m, so mid/right is
    the 2m signed basis vectors; the block-diagonal left group acts on those
    destinations and its orbits are the double cosets.
    """
    _validate_coset_setup(left, mid, right)
    m = mid.rank
    r1 = left[0].rank
    gens = _left_generators_on_blocks(r1, left[1].rank, m)
    destinations = [(i, s) for i in range(1, m + 1) for s in (1, -1)]
    seen: dict[tuple[int, int], int] = {}
    orbits: list[list[tuple[int, int]]] = []
    for dest in destinations:
        if dest in seen:
            continue
        orbit = [dest]
        seen[dest] = len(orbits)
        frontier = [dest]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = g.apply_signed_index(*cur)
                if nxt not in seen:
                    seen[nxt] = len(orbits)
                    orbit.append(nxt)
                    frontier.append(nxt)
        orbits.append(orbit)
    # identity coset first
    orbits.sort(key=lambda orb: (1, 1) not in orb)
    reps = tuple(_coset_representative(sorted(orb, key=lambda d: (d[0], -d[1]))[0], m) for orb in orbits)
    return DoubleCosetResult(
        count=len(orbits),
        representatives=reps,
        coset_space_size=len(destinations),
        orbits=tuple(tuple(sorted(orb)) for orb in orbits),
    )


def double_cosets_brute(left: tuple[WeylGroup, WeylGroup], mid: WeylGroup, right: WeylGroup) -> int:
    """Slow oracle: component count of the full group under left/right moves."""
    _validate_coset_setup(left, mid, right)
    m = mid.rank
    left_gens = _left_generators_on_blocks(left[0].rank, left[1].rank, m)
    right_gens = right_generators_fixing_first(m)
    remaining = {w.images: w for w in mid.elements()}
    count = 0
    while remaining:
        _, w = remaining.popitem()
        count += 1
        frontier = [w]
        while frontier:
            cur = frontier.pop()
            neighbors = [g * cur for g in left_gens] + [cur * g for g in right_gens]
            for nxt in neighbors:
                if nxt.images in remaining:
                    del remaining[nxt.images]
                    frontier.append(nxt)
    return count


def right_generators_fixing_first(m: int) -> list[SignedPermutation]:
    """Generators of the D_{m-1} acting on coordinates 2..m."""
    gens = []
    for i in range(2, m):
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        gens.append(SignedPermutation(images))
    images = list(range(1, m + 1))
    images[m - 2], images[m - 1] = -images[m - 1], -images[m - 2]
    gens.append(SignedPermutation(images))
    return gens


def arthur_packet(p: int, q: int, lam) -> dict:
    """The two-member packet attached to (p, q, lambda) for p, q even, 4 <= p <= q.

    Member "s" (identity coset) lives in the discrete spectrum of
    SO0(p,q)/SO0(p,q-1); member "as" (the e_1-transposition coset) in that of
    SO0(p,q)/SO0(p-1,q).
    """
    if p % 2 or q % 2:
        raise AssumptionError("arthur_packet requires p and q even")
    if not (4 <= p <= q):
        raise AssumptionError("arthur_packet requires 4 <= p <= q")
    lam = HalfInt(lam) if not isinstance(lam, HalfInt) else lam
    m = (p + q) // 2
    result = double_cosets(
        (WeylGroup("D", p // 2), WeylGroup("D", q // 2)),
        WeylGroup("D", m),
        WeylGroup("D", m - 1),
    )
    members = [
        {
            "tag": "s",
            "levi": f"SO({p},{q - 2})xSO(0,2)",
            "discrete_spectrum_of": f"SO0({p},{q})/SO0({p},{q - 1})",
            "coset": "identity",
        },
        {
            "tag": "as",
            "levi": f"SO(2,0)xSO({p - 2},{q})",
            "discrete_spectrum_of": f"SO0({p},{q})/SO0({p - 1},{q})",
            "coset": "P1",
        },
    ]
    return {
        "size": result.count,
        "lambda_x2": lam.twice,
        "members": members,
        "double_coset_reps": [list(rep.images) for rep in result.representatives],
        "coset_space_size": result.coset_space_size,
    }


@dataclass(frozen=True, order=True)
class RealForm:
    """Signature (p_sig, q_sig) of the real form SO0(p_sig, q_sig)."""

    p_sig: int
    q_sig: int

    def __post_init__(self):
        if self.p_sig < 0 or self.q_sig < 0:
            raise InvalidParameterError("signature entries must be >= 0")

    @property
    def total(self) -> int:
        return self.p_sig + self.q_sig


def pure_inner_forms(form: RealForm) -> list[RealForm]:
    """All signatures (p-2r, q+2r) and (p+2s, q-2s), sorted by first entry."""
    forms = set()
    r = 0
    while form.p_sig - 2 * r >= 0:
        forms.add(RealForm(form.p_sig - 2 * r, form.q_sig + 2 * r))
        r += 1
    s = 0
    while form.q_sig - 2 * s >= 0:
        forms.add(RealForm(form.p_sig + 2 * s, form.q_sig - 2 * s))
        s += 1
    return sorted(forms)


def relevant_pairs(g_form: RealForm, codim_direction: str) -> list[tuple[RealForm, RealForm]]:
    """Pairs (subgroup form, ambient form) across the two pure-inner families.

    The subgroup base is (p-1, q) for "drop_p" and (p, q-1) for "drop_q"; a
    pair is relevant when the subgroup signature embeds with total one less.
    """
    if codim_direction == "drop_p":
        if g_form.p_sig < 1:
            raise InvalidParameterError("drop_p needs p_sig >= 1")
        sub_base = RealForm(g_form.p_sig - 1, g_form.q_sig)
    elif codim_direction == "drop_q":
        if g_form.q_sig < 1:
            raise InvalidParameterError("drop_q needs q_sig >= 1")
        sub_base = RealForm(g_form.p_sig, g_form.q_sig - 1)
    else:
        raise InvalidParameterError("codim_direction must be 'drop_p' or 'drop_q'")
    ambients = pure_inner_forms(g_form)
    subs = pure_inner_forms(sub_base)
    pairs = []
    for sub in subs:
        for amb in ambients:
            if sub.p_sig <= amb.p_sig and sub.q_sig <= amb.q_sig and sub.total == amb.total - 1:
                pairs.append((sub, amb))
    return sorted(pairs)


_ADMISSIBILITY = {
    ("s", "g1"): True,
    ("s", "g2"): False,
    ("as", "g1"): False,
    ("as", "g2"): True,
}


def admissibility_table(member: str, subgroup: str) -> bool:
    """Encoded admissibility: each packet member is admissible for exactly one subgroup."""
    key = (member.lower(), subgroup.lower())
    if key not in _ADMISSIBILITY:
        raise InvalidParameterError("member must be 's'/'as' and subgroup 'g1'/'g2'")
    return _ADMISSIBILITY[key]


# ---------------------------------------------------------------------------
# Conjecture explorer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureReport:
    support_s: tuple[HalfInt, ...]
    support_as: tuple[HalfInt, ...]
    disjoint: bool
    model_level: bool = True


def default_support_predicates(p: int, q: int, lam: HalfInt, subgroup: str):
    """Model-level support predicates for the two packet members on a subgroup.

    The "s" member follows the proven criteria (equality on g1, inequality
    with non-negative degree on g2); the "as" member mirrors them, exchanging
    the roles of the two sphere factors.
    """
    half = HalfInt.from_twice(1)
    sub = subgroup.lower()
    if sub == "g1":
        def pred_s(t: HalfInt) -> bool:
            return t == lam + half

        def pred_as(t: HalfInt) -> bool:
            mirror_degree = t - 1 + HalfInt.from_twice(q - p + 1)
            return t + half <= lam and mirror_degree.is_integer and mirror_degree >= 0

    elif sub == "g2":
        def pred_s(t: HalfInt) -> bool:
            degree = t - 1 + HalfInt.from_twice(p - q + 1)
            return t + half <= lam and degree.is_integer and degree >= 0

        def pred_as(t: HalfInt) -> bool:
            return t == lam + half

    else:
        raise InvalidParameterError("subgroup must be 'g1' or 'g2'")
    return pred_s, pred_as


def conjecture_explore(
    p: int,
    q: int,
    lam,
    subgroup: str,
    target_grid,
    predicate_s=None,
    predicate_as=None,
) -> ConjectureReport:
    """Evaluate both member supports over a grid and report disjointness."""
    lam = HalfInt(lam) if not isinstance(lam, HalfInt) else lam
    if predicate_s is None or predicate_as is None:
        d_s, d_as = default_support_predicates(p, q, lam, subgroup)
        predicate_s = predicate_s or d_s
        predicate_as = predicate_as or d_as
    grid = [HalfInt(t) if not isinstance(t, HalfInt) else t for t in target_grid]
    support_s = tuple(t for t in grid if predicate_s(t))
    support_as = tuple(t for t in grid if predicate_as(t))
    s_set = {t.twice for t in support_s}
    disjoint = all(t.twice not in s_set for t in support_as)
    return ConjectureReport(support_s, support_as, disjoint)
