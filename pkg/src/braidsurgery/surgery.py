"""Surgery diagrams on braid closures and their homological invariants.

Diagrams are combinatorial: the geometric input is the braid's pairwise
linking matrix and axis winding numbers, and meridian/chain components
link their parent exactly once.  Everything downstream (linking matrix,
|H1|, signature) consumes only that data.

Framings are exact rationals; the empty filling is the explicit
:data:`INF` marker so Rolfsen twists can delete components cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from . import braid as braid_mod
from . import linalg
from .braid import BraidWord
from .cfrac import SlopeVector, neg_cfrac

# Words are immutable and diagrams query pairwise linking repeatedly.
_stats = lru_cache(maxsize=512)(braid_mod.crossing_stats)


class SurgeryError(ValueError):
    """Ill-formed diagram or inapplicable Kirby move."""


class SingularityError(SurgeryError):
    """A computation required an invertible linking matrix."""


class _Infinity:
    """Framing of the empty (trivial) filling."""

    def __repr__(self):
        return "INF"


INF = _Infinity()

BRAID = "braid"
MERIDIAN = "meridian"
CHAIN = "chain"
AXIS = "axis"
_UNKNOT_KINDS = (MERIDIAN, CHAIN, AXIS)


@dataclass(frozen=True)
class SurgeryComponent:
    """One framed component of a surgery diagram.

    ``kind`` is one of ``braid`` (closure component ``component``),
    ``meridian`` / ``chain`` (unknot linking its ``parent`` once;
    ``depth`` orders chain unknots), or ``axis`` (the braid axis,
    linking closure component ``i`` exactly ``m_i`` times).  ``parent``
    indexes into the diagram's component list; ``None`` means the
    unknot links nothing.
    """

    kind: str
    framing: Fraction | _Infinity
    component: int | None = None
    parent: int | None = None
    depth: int | None = None

    def __post_init__(self):
        if self.kind not in (BRAID, MERIDIAN, CHAIN, AXIS):
            raise SurgeryError(f"unknown component kind {self.kind!r}")
        if not isinstance(self.framing, _Infinity):
            object.__setattr__(self, "framing", Fraction(self.framing))

    @property
    def is_integral(self) -> bool:
        return (
            not isinstance(self.framing, _Infinity)
            and self.framing.denominator == 1
        )


@dataclass(frozen=True)
class SurgeryDiagram:
    """Framed link built from a braid closure and auxiliary unknots."""

    braid: BraidWord
    components: tuple[SurgeryComponent, ...]

    def __post_init__(self):
        stats = _stats(self.braid)
        ncomp = len(stats.axis_linking)
        for c in self.components:
            if c.kind == BRAID and not 1 <= (c.component or 0) <= ncomp:
                raise SurgeryError(
                    f"braid component index {c.component} out of range"
                )
            if c.parent is not None and not 0 <= c.parent < len(self.components):
                raise SurgeryError(f"parent index {c.parent} out of range")

    @property
    def is_integral(self) -> bool:
        return all(c.is_integral for c in self.components)

    def linking(self, i: int, j: int) -> int:
        """Linking number between components ``i`` and ``j`` of the diagram."""
        if i == j:
            raise SurgeryError("self-linking is the framing, not a linking number")
        a, b = self.components[i], self.components[j]
        if a.kind == BRAID and b.kind == BRAID:
            stats = _stats(self.braid)
            return stats.linking[a.component - 1][b.component - 1]
        for x, y in ((a, b), (b, a)):
            if x.kind == AXIS and y.kind == BRAID:
                stats = _stats(self.braid)
                return stats.axis_linking[y.component - 1]
        if (a.parent == j) or (b.parent == i):
            return 1
        return 0


def rational_surgery(word: BraidWord, v: SlopeVector) -> SurgeryDiagram:
    """One framed braid-closure component per slope."""
    parts = braid_mod.permutation(word)
    if len(v) != parts.num_components:
        raise SurgeryError(
            f"slope vector has {len(v)} entries for "
            f"{parts.num_components} closure components"
        )
    comps = tuple(
        SurgeryComponent(kind=BRAID, framing=s, component=i + 1)
        for i, s in enumerate(v)
    )
    return SurgeryDiagram(word, comps)


def _expand_component(
    idx: int, framing: Fraction, next_index: int, single_meridian_form: bool
) -> list[SurgeryComponent]:
    """Unknot components replacing a positive rational framing on component ``idx``.

    Writes ``r = n + p/q`` with ``n >= 0`` and ``p/q in [0, 1)``: the
    integer part becomes ``2n`` meridians framed -2, the fractional
    part a chain framed by the expansion of ``-q/p``.  With
    ``single_meridian_form`` a slope ``1/n`` becomes one meridian
    framed ``-n`` instead of a chain.
    """
    if framing <= 0:
        raise SurgeryError(f"slope must be positive, got {framing}")
    if single_meridian_form and framing.numerator == 1 and framing < 1:
        return [
            SurgeryComponent(
                kind=MERIDIAN,
                framing=Fraction(-framing.denominator),
                parent=idx,
            )
        ]
    n = framing.numerator // framing.denominator
    frac = framing - n
    out: list[SurgeryComponent] = []
    for _ in range(2 * n):
        out.append(SurgeryComponent(kind=MERIDIAN, framing=Fraction(-2), parent=idx))
    if frac != 0:
        chain = neg_cfrac(Fraction(-frac.denominator, frac.numerator)).coeffs
        parent = idx
        for depth, a in enumerate(chain):
            out.append(
                SurgeryComponent(
                    kind=CHAIN, framing=Fraction(a), parent=parent, depth=depth
                )
            )
            parent = next_index + len(out) - 1
    return out


def _expand(diagram: SurgeryDiagram, single_meridian_form: bool) -> SurgeryDiagram:
    comps: list[SurgeryComponent] = []
    for c in diagram.components:
        if c.kind != BRAID:
            raise SurgeryError("expansion expects a braid-components-only diagram")
        comps.append(replace(c, framing=Fraction(0)))
    for idx, c in enumerate(diagram.components):
        if isinstance(c.framing, _Infinity):
            raise SurgeryError("cannot expand the empty filling")
        comps.extend(
            _expand_component(idx, c.framing, len(comps), single_meridian_form)
        )
    return SurgeryDiagram(diagram.braid, tuple(comps))


def slam_dunk_expand(diagram: SurgeryDiagram) -> SurgeryDiagram:
    """Integral diagram: braid components reframed to 0, slopes moved
    onto meridian/chain unknots.

    A slope ``1/n`` becomes the single meridian framed ``-n``; other
    slopes split into the meridian stack and chain of
    :func:`_expand_component`.
    """
    return _expand(diagram, single_meridian_form=True)


def expand_general(diagram: SurgeryDiagram) -> SurgeryDiagram:
    """Like :func:`slam_dunk_expand` but with every fractional part as a
    chain, including ``1/n``; the two forms present the same manifold.
    """
    return _expand(diagram, single_meridian_form=False)


def linking_matrix(diagram: SurgeryDiagram) -> list[list[int]]:
    """Symmetric integer matrix: framings on the diagonal, linking
    numbers off it.  Requires an integral diagram."""
    if not diagram.is_integral:
        raise SurgeryError("linking matrix needs an integral diagram")
    n = len(diagram.components)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = int(diagram.components[i].framing)
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = diagram.linking(i, j)
    return m


@dataclass(frozen=True)
class HomologyReport:
    """First-homology and intersection-form data of a surgery presentation.

    ``h1_order`` is 0 when H1 is infinite; ``elementary_divisors``
    lists the invariant factors > 1; ``euler_char`` counts one 0-handle
    plus one 2-handle per component.
    """

    det: int
    h1_order: int
    elementary_divisors: tuple[int, ...]
    free_rank: int
    signature: int
    euler_char: int


def homology(diagram: SurgeryDiagram) -> HomologyReport:
    if not diagram.is_integral:
        raise SurgeryError("homology report needs an integral diagram")
    m = linking_matrix(diagram)
    d = linalg.det(m)
    snf = linalg.smith_normal_form(m)
    return HomologyReport(
        det=d,
        h1_order=abs(d),
        elementary_divisors=tuple(x for x in snf if x > 1),
        free_rank=sum(1 for x in snf if x == 0),
        signature=linalg.signature(m),
        euler_char=1 + len(diagram.components),
    )


def h1_presentation_matrix(diagram: SurgeryDiagram) -> list[list[int]]:
    """Integer presentation matrix of H1 for a rational-framed diagram.

    Row ``i`` encodes the filling relation ``p_i mu_i + q_i lambda_i``;
    for an integral diagram this is the linking matrix.
    """
    n = len(diagram.components)
    m = [[0] * n for _ in range(n)]
    for i, c in enumerate(diagram.components):
        if isinstance(c.framing, _Infinity):
            raise SurgeryError("empty filling has no relation; delete it first")
        m[i][i] = c.framing.numerator
        for j in range(n):
            if j != i:
                m[i][j] = c.framing.denominator * diagram.linking(i, j)
    return m


def h1_order(diagram: SurgeryDiagram) -> int:
    """|H1| of the presented manifold (0 for infinite), any framings."""
    return abs(linalg.det(h1_presentation_matrix(diagram)))


def h1_invariants(diagram: SurgeryDiagram) -> tuple[int, tuple[int, ...], int]:
    """(order, elementary divisors > 1, free rank) from the presentation."""
    m = h1_presentation_matrix(diagram)
    snf = linalg.smith_normal_form(m)
    order = 0 if any(x == 0 for x in snf) else abs(linalg.det(m))
    return (
        order,
        tuple(x for x in snf if x > 1),
        sum(1 for x in snf if x == 0),
    )


def _reindex_parent(parent: int | None, removed: int) -> int | None:
    if parent is None or parent == removed:
        return None
    return parent - 1 if parent > removed else parent


def rolfsen_twist(diagram: SurgeryDiagram, u: int, t: int) -> SurgeryDiagram:
    """Twist ``t`` times about the unknot component ``u``.

    The unknot's framing maps by ``r -> r / (1 + t r)`` (``1/r -> 1/r + t``)
    and every other framing gains ``t * lk(c, u)^2``.  When the new
    framing is the empty filling the unknot is deleted; components that
    pointed at it become free unknots.
    """
    target = diagram.components[u]
    if target.kind not in _UNKNOT_KINDS:
        raise SurgeryError("Rolfsen twist needs an unknot-type component")
    if isinstance(target.framing, _Infinity):
        raise SurgeryError("cannot twist about the empty filling")
    comps: list[SurgeryComponent] = []
    for i, c in enumerate(diagram.components):
        if i == u:
            comps.append(c)
            continue
        lk = diagram.linking(i, u)
        framing = c.framing
        if not isinstance(framing, _Infinity) and lk:
            framing = framing + t * lk * lk
        comps.append(replace(c, framing=framing))
    denom = 1 + t * target.framing
    if denom == 0:
        comps = [
            replace(c, parent=_reindex_parent(c.parent, u))
            for i, c in enumerate(comps)
            if i != u
        ]
    else:
        comps[u] = replace(target, framing=target.framing / denom)
    return SurgeryDiagram(diagram.braid, tuple(comps))


def slam_dunk_meridian(diagram: SurgeryDiagram, leaf: int) -> SurgeryDiagram:
    """Remove a meridian-type leaf, folding its slope into the parent.

    Requires the parent's framing to be an integer ``c``; the parent is
    reframed to ``c - 1/x`` where ``x`` is the leaf's framing.  The
    leaf must link nothing besides its parent.
    """
    c = diagram.components[leaf]
    if c.kind not in (MERIDIAN, CHAIN) or c.parent is None:
        raise SurgeryError("slam-dunk needs a meridian-type leaf with a parent")
    if isinstance(c.framing, _Infinity):
        raise SurgeryError("delete the empty filling instead of dunking it")
    if c.framing == 0:
        raise SurgeryError("cannot dunk a 0-framed meridian")
    if any(other.parent == leaf for other in diagram.components):
        raise SurgeryError("leaf still has children")
    parent = diagram.components[c.parent]
    if not parent.is_integral:
        raise SurgeryError("slam-dunk needs an integer framing on the parent")
    comps = []
    for i, other in enumerate(diagram.components):
        if i == leaf:
            continue
        if i == c.parent:
            other = replace(other, framing=parent.framing - 1 / c.framing)
        comps.append(replace(other, parent=_reindex_parent(other.parent, leaf)))
    return SurgeryDiagram(diagram.braid, tuple(comps))


def axis_surgery(
    word: BraidWord, braid_framings, axis_framing=Fraction(0)
) -> SurgeryDiagram:
    """Closure components plus the braid axis, axis listed first."""
    parts = braid_mod.permutation(word)
    framings = [Fraction(f) for f in braid_framings]
    if len(framings) != parts.num_components:
        raise SurgeryError("one braid framing per closure component required")
    comps = [SurgeryComponent(kind=AXIS, framing=axis_framing)]
    comps.extend(
        SurgeryComponent(kind=BRAID, framing=f, component=i + 1)
        for i, f in enumerate(framings)
    )
    return SurgeryDiagram(word, tuple(comps))


def lspace_family_diagram(
    word: BraidWord, k: int, ell: int
) -> tuple[SurgeryDiagram, HomologyReport, bool]:
    """The twist-family diagram: meridian of the axis, axis, closure.

    Framings are ``(ell, 0, k)``.  The additivity check compares the
    computed |H1| of the axis diagram, this diagram, and the diagram at
    ``ell + 1``: the three orders must satisfy
    ``m^2 + (k + ell m^2) = k + (ell + 1) m^2``.
    """
    parts = braid_mod.permutation(word)
    if not parts.is_knot:
        raise SurgeryError("the twist family needs a knot closure")
    if k < 1 or ell < 1:
        raise SurgeryError("twist family needs k >= 1 and ell >= 1")

    def build(l: int) -> SurgeryDiagram:
        comps = (
            SurgeryComponent(kind=MERIDIAN, framing=Fraction(l), parent=1),
            SurgeryComponent(kind=AXIS, framing=Fraction(0)),
            SurgeryComponent(kind=BRAID, framing=Fraction(k), component=1),
        )
        return SurgeryDiagram(word, comps)

    diagram = build(ell)
    report = homology(diagram)
    base = homology(axis_surgery(word, [Fraction(k)]))
    bumped = homology(build(ell + 1))
    additivity = base.h1_order + report.h1_order == bumped.h1_order
    return diagram, report, additivity


def framing_str(framing) -> str:
    if isinstance(framing, _Infinity):
        return "inf"
    return f"{framing.numerator}/{framing.denominator}"


def parse_framing(text: str):
    if text == "inf":
        return INF
    return Fraction(text)


def diagram_to_dict(diagram: SurgeryDiagram) -> dict:
    """JSON-ready form: component list plus the source braid."""
    return {
        "braid": braid_mod.format_braid(diagram.braid),
        "components": [
            {
                "kind": c.kind,
                "framing": framing_str(c.framing),
                "component": c.component,
                "parent": c.parent,
                "depth": c.depth,
            }
            for c in diagram.components
        ],
    }
