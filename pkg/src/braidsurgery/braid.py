"""Braid words and their closure combinatorics.

A braid word on ``m`` strands is a sequence of Artin generators
``s1 .. s(m-1)`` with signs.  This module provides:

* parsing / formatting of the ``B<m> s<g>^<e> ...`` text form,
* the permutation of a word and the component structure of its closure,
* crossing statistics per closure component (self crossings, negative
  inter-component crossings, linking numbers, axis winding),
* the word problem via handle reduction, with the derived sigma-order
  tests and the floor probe used to certify hyperbolicity hypotheses,
* the half-twist generator and the small braid families the rest of
  the pipeline feeds on.

Strand-tracking convention: letters act left to right on *positions*;
the letter ``(g, sign)`` crosses the strands currently occupying
positions ``g`` and ``g+1``.  Closure components are the cycles of the
resulting position permutation and are numbered by their smallest
position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class BraidError(ValueError):
    """Malformed braid text or out-of-range braid data."""


class ReductionBudgetExceeded(RuntimeError):
    """Handle reduction hit its step cap before reaching a reduced word."""


# Default step budget for handle reduction.  Termination is guaranteed,
# but the known worst-case bound is exponential in word length; the cap
# exists so a pathological input fails loudly instead of spinning.
DEFAULT_STEP_BUDGET = 2_000_000


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands.

    ``letters`` holds signed generator indices: ``+g`` for ``s<g>``,
    ``-g`` for its inverse, ``1 <= g <= strands - 1``.  The empty word
    is the identity braid.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 1 <= abs(x) <= self.strands - 1:
                raise BraidError(
                    f"generator index {abs(x)} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    @property
    def c_plus(self) -> int:
        return sum(1 for x in self.letters if x > 0)

    @property
    def c_minus(self) -> int:
        return sum(1 for x in self.letters if x < 0)


@dataclass(frozen=True)
class ComponentPartition:
    """Cycle structure of the closure of a braid word.

    ``permutation[i]`` is the final position of the strand starting at
    position ``i`` (positions are 1-based).  ``component_of[i]`` is the
    1-based index of the closure component through position ``i``;
    components are numbered by smallest member position.
    """

    permutation: tuple[int, ...]
    component_of: tuple[int, ...]
    cycle_type: tuple[int, ...]

    @property
    def num_components(self) -> int:
        return len(self.cycle_type)

    @property
    def is_knot(self) -> bool:
        return self.num_components == 1


@dataclass(frozen=True)
class CrossingStats:
    """Crossing bookkeeping for a braid closure.

    ``per_component[i]`` is ``(c_plus, c_minus)`` counting self
    crossings of component ``i+1``.  ``inter_negative[i][j]`` counts
    negative crossings between components ``i+1`` and ``j+1``.
    ``linking[i][j]`` is half the signed inter-component crossing sum,
    asserted integral.  ``axis_linking[i]`` is the number of strands of
    component ``i+1``, i.e. its winding about the braid axis.
    """

    c_plus: int
    c_minus: int
    per_component: tuple[tuple[int, int], ...]
    inter_negative: tuple[tuple[int, ...], ...]
    d_minus: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]
    axis_linking: tuple[int, ...]


@dataclass(frozen=True)
class HypothesisReport:
    """Checkable surgery-hypothesis flags for a braid word.

    ``hyperbolicity`` is never computed here: it records whether the
    caller asserted it ("asserted") or left it open ("unknown").
    """

    is_knot: bool
    cond_tb: bool
    cond_parity: bool
    per_component_cond: tuple[bool, ...]
    hyperbolicity: str = "unknown"

    @property
    def all_checkable(self) -> bool:
        return self.is_knot and self.cond_tb and self.cond_parity


_TOKEN = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``B<m> s<g>^<e> ...`` into a :class:`BraidWord`.

    Exponents expand into repeated letters carrying the exponent's
    sign; ``s<g>`` alone means exponent 1.
    """
    tokens = text.split()
    if not tokens or not re.fullmatch(r"B(\d+)", tokens[0]):
        raise BraidError("missing strand header 'B<m>'")
    strands = int(tokens[0][1:])
    if strands < 2:
        raise BraidError(f"strand count must be >= 2, got {strands}")
    letters: list[int] = []
    for pos, tok in enumerate(tokens[1:], start=1):
        match = _TOKEN.match(tok)
        if match is None:
            raise BraidError(f"malformed token {tok!r} at position {pos}")
        gen = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if not 1 <= gen <= strands - 1:
            raise BraidError(
                f"generator index {gen} out of range for {strands} strands"
                f" (token {pos})"
            )
        if exp == 0:
            raise BraidError(f"zero exponent in token {tok!r} at position {pos}")
        letters.extend([gen if exp > 0 else -gen] * abs(exp))
    return BraidWord(strands, tuple(letters))


def format_braid(word: BraidWord) -> str:
    """Canonical text form; ``parse_braid(format_braid(w)) == w``.

    Consecutive runs of the same signed generator merge into one
    ``s<g>^<e>`` token; a bare ``s<g>`` is used for exponent 1.
    """
    parts = [f"B{word.strands}"]
    i = 0
    letters = word.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        gen = abs(letters[i])
        exp = run if letters[i] > 0 else -run
        parts.append(f"s{gen}" if exp == 1 else f"s{gen}^{exp}")
        i = j
    return " ".join(parts)


def permutation(word: BraidWord) -> ComponentPartition:
    """Closure components of a braid word.

    Tracks which strand occupies each position while the letters act
    left to right, then reads off the position permutation and its
    cycles.
    """
    m = word.strands
    pos_to_strand = list(range(m + 1))  # index 0 unused
    for x in word.letters:
        g = abs(x)
        pos_to_strand[g], pos_to_strand[g + 1] = pos_to_strand[g + 1], pos_to_strand[g]
    perm = [0] * (m + 1)
    for pos in range(1, m + 1):
        perm[pos_to_strand[pos]] = pos
    component_of = [0] * (m + 1)
    cycle_type: list[int] = []
    comp = 0
    for start in range(1, m + 1):
        if component_of[start]:
            continue
        comp += 1
        size = 0
        cur = start
        while not component_of[cur]:
            component_of[cur] = comp
            size += 1
            cur = perm[cur]
        cycle_type.append(size)
    return ComponentPartition(
        permutation=tuple(perm[1:]),
        component_of=tuple(component_of[1:]),
        cycle_type=tuple(cycle_type),
    )


def crossing_stats(word: BraidWord) -> CrossingStats:
    """Attribute every crossing of a braid word to closure components.

    A letter acting at positions ``(g, g+1)`` crosses the two strands
    currently there; the crossing is a self crossing of component ``i``
    if both strands belong to ``i``, otherwise an inter-component
    crossing of ``{i, j}``.  Linking numbers are half the signed
    inter-component sums and are checked to be integers.
    """
    m = word.strands
    parts = permutation(word)
    ncomp = parts.num_components
    comp_of = (0,) + parts.component_of  # 1-based strand -> component
    per_plus = [0] * (ncomp + 1)
    per_minus = [0] * (ncomp + 1)
    inter_minus = [[0] * (ncomp + 1) for _ in range(ncomp + 1)]
    signed_inter = [[0] * (ncomp + 1) for _ in range(ncomp + 1)]
    pos_to_strand = list(range(m + 1))
    for x in word.letters:
        g = abs(x)
        sign = 1 if x > 0 else -1
        a = pos_to_strand[g]
        b = pos_to_strand[g + 1]
        ca, cb = comp_of[a], comp_of[b]
        if ca == cb:
            if sign > 0:
                per_plus[ca] += 1
            else:
                per_minus[ca] += 1
        else:
            signed_inter[ca][cb] += sign
            signed_inter[cb][ca] += sign
            if sign < 0:
                inter_minus[ca][cb] += 1
                inter_minus[cb][ca] += 1
        pos_to_strand[g], pos_to_strand[g + 1] = b, a
    linking = [[0] * ncomp for _ in range(ncomp)]
    for i in range(1, ncomp + 1):
        for j in range(1, ncomp + 1):
            if i == j:
                continue
            lk = Fraction(signed_inter[i][j], 2)
            if lk.denominator != 1:
                raise BraidError(
                    f"non-integral linking number between components {i}, {j}"
                )
            linking[i - 1][j - 1] = int(lk)
    return CrossingStats(
        c_plus=word.c_plus,
        c_minus=word.c_minus,
        per_component=tuple(
            (per_plus[i], per_minus[i]) for i in range(1, ncomp + 1)
        ),
        inter_negative=tuple(
            tuple(inter_minus[i][1:]) for i in range(1, ncomp + 1)
        ),
        d_minus=tuple(sum(inter_minus[i][1:]) for i in range(1, ncomp + 1)),
        linking=tuple(tuple(row) for row in linking),
        axis_linking=parts.cycle_type,
    )


def garside(m: int) -> BraidWord:
    """The positive half twist on ``m`` strands, length ``m(m-1)/2``."""
    if m < 2:
        raise BraidError(f"half twist needs at least 2 strands, got {m}")
    letters: list[int] = []
    for k in range(m - 1, 0, -1):
        letters.extend(range(1, k + 1))
    return BraidWord(m, tuple(letters))


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise BraidError(
            f"strand count mismatch: {w1.strands} vs {w2.strands}"
        )
    return BraidWord(w1.strands, w1.letters + w2.letters)


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(-x for x in reversed(word.letters)))


def power(word: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(inverse(word), -k)
    return BraidWord(word.strands, word.letters * k)


def delta_squared_times(word: BraidWord, ell: int) -> BraidWord:
    """``Delta^(2*ell) * word``; full twists only add positive letters."""
    return compose(power(garside(word.strands), 2 * ell), word)


def handle_reduce(word: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> BraidWord:
    """Handle-free word representing the same braid element.

    Repeatedly reduces the first handle (the earliest-closing subword
    ``s_i^e ... s_i^-e`` whose interior only uses higher-index
    generators).  The first handle never contains another handle, which
    is the strategy with guaranteed termination; ``max_steps`` bounds
    the number of reductions and overflow raises
    :class:`ReductionBudgetExceeded` rather than returning a wrong
    answer.
    """
    w = list(word.letters)
    steps = 0
    while True:
        found = _first_handle(w)
        if found is None:
            return BraidWord(word.strands, tuple(w))
        steps += 1
        if steps > max_steps:
            raise ReductionBudgetExceeded(
                f"no reduced form within {max_steps} handle reductions"
            )
        s, t = found
        i = abs(w[s])
        e = 1 if w[s] > 0 else -1
        replacement: list[int] = []
        for x in w[s + 1 : t]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                replacement.extend([-e * (i + 1), d * i, e * (i + 1)])
            else:
                replacement.append(x)
        w[s : t + 1] = replacement


def _first_handle(w: list[int]) -> tuple[int, int] | None:
    """Position pair of the earliest-closing handle, or None.

    ``last[g]`` tracks the most recent letter with generator index
    ``g``; a letter closes a handle when it cancels the last letter of
    its own index and no lower index occurred in between.
    """
    last: dict[int, int] = {}
    for t, x in enumerate(w):
        i = abs(x)
        s = last.get(i)
        if s is not None and (w[s] > 0) != (x > 0):
            if all(last.get(j, -1) < s for j in range(1, i)):
                return s, t
        last[i] = t
    return None


def is_trivial(word: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> bool:
    """Word problem: does the word represent the identity braid?"""
    return len(handle_reduce(word, max_steps)) == 0


def _main_generator_signs(word: BraidWord) -> tuple[int, set[int]]:
    gens = {abs(x) for x in word.letters}
    i = min(gens)
    return i, {1 if x > 0 else -1 for x in word.letters if abs(x) == i}


def is_sigma_positive(word: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> bool:
    """Does the reduced word use its lowest generator only positively?"""
    reduced = handle_reduce(word, max_steps)
    if len(reduced) == 0:
        return False
    _, signs = _main_generator_signs(reduced)
    return signs == {1}


def is_sigma_negative(word: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> bool:
    reduced = handle_reduce(word, max_steps)
    if len(reduced) == 0:
        return False
    _, signs = _main_generator_signs(reduced)
    return signs == {-1}


def dehornoy_floor_at_least(
    word: BraidWord, d: int, max_steps: int = DEFAULT_STEP_BUDGET
) -> bool:
    """Sound check that the Dehornoy floor of the word is at least ``d``.

    The floor is the largest ``d >= 0`` with ``Delta^(2d)`` below the
    braid or below its inverse in the left order, so the probe passes
    when ``w * Delta^(-2d)`` or ``w^-1 * Delta^(-2d)`` fails to be
    sigma-negative.  ``d = 0`` always holds.
    """
    if d < 0:
        raise BraidError(f"floor probe needs d >= 0, got {d}")
    if d == 0:
        return True
    shift = inverse(power(garside(word.strands), 2 * d))
    if not is_sigma_negative(compose(word, shift), max_steps):
        return True
    return not is_sigma_negative(compose(inverse(word), shift), max_steps)


def check_hypothesis(word: BraidWord, hyperbolic_asserted: bool = False) -> HypothesisReport:
    """Evaluate the checkable surgery-hypothesis conditions.

    ``cond_tb`` is ``c+ - 2c- - m >= 1``, ``cond_parity`` is
    ``c+ + c- == m + 1 (mod 2)``, and the per-component condition is
    ``c_{i,+} - 2c_{i,-} - d_{i,-} - m_i >= 1``.  Hyperbolicity is
    recorded from the caller, never derived.
    """
    stats = crossing_stats(word)
    parts = permutation(word)
    m = word.strands
    per_cond = tuple(
        cp - 2 * cm - dm - mi >= 1
        for (cp, cm), dm, mi in zip(
            stats.per_component, stats.d_minus, stats.axis_linking
        )
    )
    return HypothesisReport(
        is_knot=parts.is_knot,
        cond_tb=stats.c_plus - 2 * stats.c_minus - m >= 1,
        cond_parity=(stats.c_plus + stats.c_minus) % 2 == (m + 1) % 2,
        per_component_cond=per_cond,
        hyperbolicity="asserted" if hyperbolic_asserted else "unknown",
    )


def square_knot_recipe(word: BraidWord) -> bool:
    """True when ``strands`` is odd and the square of the word closes to a knot."""
    if word.strands % 2 == 0:
        return False
    return permutation(power(word, 2)).is_knot


def example_braid(k: int) -> BraidWord:
    """The two-bridge family ``s1^(2k+1) s2^-1`` on three strands."""
    if k < 0:
        raise BraidError(f"family parameter must be >= 0, got {k}")
    return BraidWord(3, tuple([1] * (2 * k + 1) + [-2]))
