"""Legendrian bookkeeping for surgery presentations.

Front-diagram arithmetic for braid closures (tb, rot, cusp counts),
stabilizations, the rotation-number menus of Legendrian unknots, and
the enumeration of decorated integral diagrams whose framings satisfy
``framing = tb - 1`` on every component.  The enumeration's rotation
tuples feed the distinguishing invariants: the Chern pairing vector,
the exact ``c1^2``, and the plane-field invariant
``theta = c1^2 - 2*chi - 3*sigma``.

Sign convention, fixed once: a positive stabilization drops tb by 1
and raises rot by 1; a negative stabilization drops tb by 1 and drops
rot by 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import braid as braid_mod
from . import linalg, surgery
from .braid import BraidWord
from .cfrac import SlopeVector
from .surgery import BRAID, SurgeryDiagram


class LegendrianError(ValueError):
    """Unrealizable stabilization target or invalid Legendrian data."""


class HypothesisError(ValueError):
    """The braid fails a checkable hypothesis required by an operation."""


@dataclass(frozen=True)
class LegendrianComponent:
    """tb/rot state of one Legendrian component plus its stabilization history."""

    tb: int
    rot: int
    cusps: int
    stab_pos: int = 0
    stab_neg: int = 0

    def __post_init__(self):
        if self.cusps < 0 or self.cusps % 2:
            raise LegendrianError(f"cusp count must be even and >= 0, got {self.cusps}")
        if self.stab_pos < 0 or self.stab_neg < 0:
            raise LegendrianError("stabilization counts must be >= 0")


def front_stats(word: BraidWord) -> LegendrianComponent:
    """Pre-stabilization tb/rot of the closure's standard front (knot case).

    ``tb = c+ - 2c- - m``; ``rot`` is 0 or 1 by the parity of ``c-``;
    closure arcs and negative crossings contribute ``2(m + c-)`` cusps.
    """
    parts = braid_mod.permutation(word)
    if not parts.is_knot:
        raise LegendrianError(
            f"closure has {parts.num_components} components; use link_front_stats"
        )
    m = word.strands
    return LegendrianComponent(
        tb=word.c_plus - 2 * word.c_minus - m,
        rot=word.c_minus % 2,
        cusps=2 * (m + word.c_minus),
    )


def link_front_stats(word: BraidWord) -> tuple[LegendrianComponent, ...]:
    """Per-component front data for a braid-closure link.

    Each component's tb realizes the charged lower bound
    ``c_{i,+} - 2c_{i,-} - d_{i,-} - m_i``.  Cusp pairs from an
    inter-component negative crossing land on the lower-indexed
    component, which also fixes the rot parity deterministically.
    """
    stats = braid_mod.crossing_stats(word)
    ncomp = len(stats.axis_linking)
    out = []
    for i in range(ncomp):
        cp, cm = stats.per_component[i]
        charged = sum(stats.inter_negative[i][j] for j in range(i + 1, ncomp))
        out.append(
            LegendrianComponent(
                tb=cp - 2 * cm - stats.d_minus[i] - stats.axis_linking[i],
                rot=(cm + charged) % 2,
                cusps=2 * (stats.axis_linking[i] + cm + charged),
            )
        )
    return tuple(out)


def stabilize_to(
    c: LegendrianComponent, target_tb: int, target_rot: int
) -> LegendrianComponent:
    """Stabilize until ``(tb, rot) == (target_tb, target_rot)`` exactly.

    Needs ``target_tb <= tb``, the rot shift within range, and matching
    parity; each stabilization adds one cusp pair.
    """
    drop = c.tb - target_tb
    shift = target_rot - c.rot
    if drop < 0:
        raise LegendrianError(f"cannot raise tb from {c.tb} to {target_tb}")
    if abs(shift) > drop or (drop - shift) % 2:
        raise LegendrianError(
            f"no stabilization pattern reaches (tb={target_tb}, rot={target_rot})"
            f" from (tb={c.tb}, rot={c.rot})"
        )
    pos = (drop + shift) // 2
    neg = (drop - shift) // 2
    return LegendrianComponent(
        tb=target_tb,
        rot=target_rot,
        cusps=c.cusps + 2 * drop,
        stab_pos=c.stab_pos + pos,
        stab_neg=c.stab_neg + neg,
    )


def legendrian_unknot() -> LegendrianComponent:
    """The maximal unknot: tb -1, rot 0, two cusps."""
    return LegendrianComponent(tb=-1, rot=0, cusps=2)


def unknot_menu(framing: int) -> list[LegendrianComponent]:
    """All Legendrian unknots with ``tb = framing + 1``.

    For ``framing = f <= -2`` the rotation numbers run over
    ``{f+2, f+4, ..., -f-2}``: exactly ``|f + 1|`` choices, symmetric
    about 0, realized by stabilizing the maximal unknot.
    """
    f = int(framing)
    if f > -2:
        raise LegendrianError(
            f"no Legendrian unknot has tb = {f + 1}; framing must be <= -2"
        )
    return [
        stabilize_to(legendrian_unknot(), f + 1, rot)
        for rot in range(f + 2, -f - 1, 2)
    ]


@dataclass(frozen=True)
class WeinsteinDiagram:
    """Integral diagram whose components carry Legendrian representatives.

    Valid when every framing equals ``tb - 1``; ``rotation_tuple``
    lists the rot values of the unknot components in diagram order.
    """

    base: SurgeryDiagram
    legendrian: tuple[LegendrianComponent, ...]
    rotation_tuple: tuple[int, ...]

    def __post_init__(self):
        if len(self.legendrian) != len(self.base.components):
            raise LegendrianError("one Legendrian component per diagram component")


def validate_weinstein(w: WeinsteinDiagram) -> bool:
    """Check ``framing = tb - 1`` on every component."""
    return all(
        c.is_integral and c.framing == l.tb - 1
        for c, l in zip(w.base.components, w.legendrian)
    )


def _braid_legendrians(word: BraidWord) -> tuple[LegendrianComponent, ...]:
    """Closure components stabilized to tb 1 with a pinned rotation number.

    rot is pinned to 0 whenever parity allows (always, for knots
    satisfying the parity condition) and to the minimal nonnegative
    parity-feasible value otherwise.
    """
    out = []
    for c in link_front_stats(word):
        if c.tb < 1:
            raise HypothesisError(
                f"component tb {c.tb} < 1; the charged crossing condition fails"
            )
        target_rot = (c.rot + c.tb - 1) % 2
        out.append(stabilize_to(c, 1, target_rot))
    return tuple(out)


class WeinsteinEnumeration:
    """Lazy product of unknot menus over an expanded surgery diagram.

    Iterating yields every decorated diagram, sorted by rotation tuple;
    ``count`` is the exact cardinality without materializing anything.
    """

    def __init__(self, word: BraidWord, v: SlopeVector):
        report = braid_mod.check_hypothesis(word)
        if not all(report.per_component_cond):
            failing = [
                i + 1 for i, ok in enumerate(report.per_component_cond) if not ok
            ]
            raise HypothesisError(
                f"components {failing} fail the charged crossing condition"
            )
        self.word = word
        self.slopes = v
        self.base = surgery.slam_dunk_expand(surgery.rational_surgery(word, v))
        self._braid_leg = _braid_legendrians(word)
        self.menus = [
            unknot_menu(int(c.framing))
            for c in self.base.components
            if c.kind != BRAID
        ]

    @property
    def count(self) -> int:
        return math.prod(len(menu) for menu in self.menus)

    def _assemble(self, picks) -> WeinsteinDiagram:
        queue = list(picks)
        legendrian = []
        rotation = []
        for c in self.base.components:
            if c.kind == BRAID:
                legendrian.append(self._braid_leg[c.component - 1])
            else:
                leg = queue.pop(0)
                legendrian.append(leg)
                rotation.append(leg.rot)
        return WeinsteinDiagram(
            base=self.base,
            legendrian=tuple(legendrian),
            rotation_tuple=tuple(rotation),
        )

    def diagram_for(self, ks) -> WeinsteinDiagram:
        """The diagram indexed by 1-based menu picks, one per unknot."""
        ks = tuple(ks)
        if len(ks) != len(self.menus):
            raise LegendrianError(
                f"tuple length {len(ks)} does not match {len(self.menus)} unknots"
            )
        picks = []
        for k, menu in zip(ks, self.menus):
            if not 1 <= k <= len(menu):
                raise LegendrianError(
                    f"tuple entry {k} outside menu of size {len(menu)}"
                )
            picks.append(menu[k - 1])
        return self._assemble(picks)

    def __iter__(self):
        for choice in itertools.product(*self.menus):
            yield self._assemble(choice)


def enumerate_weinstein(word: BraidWord, v: SlopeVector) -> WeinsteinEnumeration:
    return WeinsteinEnumeration(word, v)


def c1_pairing(w: WeinsteinDiagram) -> list[int]:
    """Rotation numbers in component order: the Chern class evaluated
    on the handle generators."""
    return [l.rot for l in w.legendrian]


@dataclass(frozen=True)
class ThetaReport:
    """The plane-field invariant and its ingredients, all exact."""

    c1_squared: Fraction
    chi: int
    sigma: int
    theta: Fraction
    h1_order: int
    complete_invariant: bool


def theta(w: WeinsteinDiagram) -> ThetaReport:
    """``c1^2 - 2 chi - 3 sigma`` of the presented filling.

    ``c1^2`` is ``r^T Q^{-1} r`` over exact rationals for the rotation
    vector ``r``; the linking matrix ``Q`` must be nonsingular.  The
    value is a complete homotopy invariant only over integer homology
    spheres, reported by ``complete_invariant``.
    """
    q = surgery.linking_matrix(w.base)
    d = linalg.det(q)
    if d == 0:
        raise surgery.SingularityError("theta needs a nonsingular linking matrix")
    r = c1_pairing(w)
    x = linalg.solve_exact(q, r)
    c1sq = sum(Fraction(ri) * xi for ri, xi in zip(r, x))
    report = surgery.homology(w.base)
    value = c1sq - 2 * report.euler_char - 3 * report.signature
    return ThetaReport(
        c1_squared=c1sq,
        chi=report.euler_char,
        sigma=report.signature,
        theta=value,
        h1_order=report.h1_order,
        complete_invariant=report.h1_order == 1,
    )


def isotopy_class_count(ws) -> int:
    """Number of distinct rotation tuples among the given diagrams."""
    return len({w.rotation_tuple for w in ws})


def contactomorphism_lower_bound(count: int, c: int) -> int:
    """``ceil(count / c)`` for a symmetry group of order ``c >= 1``."""
    if c < 1:
        raise LegendrianError(f"symmetry order must be >= 1, got {c}")
    return -(-count // c)


def weinstein_to_dict(w: WeinsteinDiagram) -> dict:
    """JSON-ready form: the surgery dict plus parallel Legendrian arrays."""
    data = surgery.diagram_to_dict(w.base)
    data["tb"] = [l.tb for l in w.legendrian]
    data["rot"] = [l.rot for l in w.legendrian]
    data["stab_pos"] = [l.stab_pos for l in w.legendrian]
    data["stab_neg"] = [l.stab_neg for l in w.legendrian]
    data["rotation_tuple"] = list(w.rotation_tuple)
    return data
