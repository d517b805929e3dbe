"""Tangential structures as homotopy-group data.

Nothing here models spaces.  A structure ``xi: X -> BO(d)`` is recorded per
component of ``X`` by three numbers: the order of ``pi_1 F`` (``F`` the
homotopy fiber of ``xi``, ``None`` for infinite), a generator ``g`` with
``im(pi_2 X -> pi_2 BO(2) = Z) = gZ`` in the 2-dimensional case, and the
order of the image of ``pi_2 BO(d)`` in ``pi_1 F`` for ``d >= 3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class UnsupportedStructure(ValueError):
    """Raised for data the counting formulas cannot handle (infinite pi_1 F)."""


class StructureParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass(frozen=True)
class ComponentData:
    name: str
    pi1_F_order: int | None = 1
    pi2_generator: int = 1
    pi2_BOd_image_order: int = 1

    def __post_init__(self):
        if self.pi2_generator < 0:
            raise ValueError(f"{self.name}: pi2 generator must be >= 0")
        if self.pi2_BOd_image_order not in (1, 2):
            raise ValueError(f"{self.name}: image of pi2 BO(d) has order 1 or 2")
        if self.pi1_F_order is not None:
            if self.pi1_F_order < 1:
                raise ValueError(f"{self.name}: pi1 F order must be positive")
            if self.pi1_F_order % self.pi2_BOd_image_order:
                raise ValueError(f"{self.name}: image order must divide |pi1 F|")


@dataclass(frozen=True)
class TangentialStructureData:
    d: int
    components: tuple[ComponentData, ...] = field(default_factory=tuple)
    name: str = "X"

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "components", tuple(self.components))


def structure(d: int, *components: ComponentData, name: str = "X") -> TangentialStructureData:
    return TangentialStructureData(d, tuple(components), name)


# Standard 2-dimensional structures.  The generator is the image of
# pi_2 X in pi_2 BO(2) = Z, i.e. the Euler numbers of rank-2 bundles over S^2
# that admit the structure.
ORIENTATIONS = structure(2, ComponentData("BSO(2)", 1, 1), name="orientations")
SPIN = structure(2, ComponentData("BSpin(2)", 2, 2), name="spin")
# pi_2 BO(2) -> pi_2 BO = Z/2 is reduction mod 2 (w_2), so stable framings see 2Z
STABLE_FRAMINGS = structure(2, ComponentData("O/O(2)", 2, 2), name="stable framings")
THREE_FRAMINGS = structure(2, ComponentData("O(3)/O(2)", 2, 2), name="3-framings")
TWO_FRAMINGS = structure(2, ComponentData("EO(2)", None, 0), name="tangential 2-framings")

STANDARD_2D = {s.name: s for s in (ORIENTATIONS, SPIN, STABLE_FRAMINGS, THREE_FRAMINGS, TWO_FRAMINGS)}


# -- spherophilia ------------------------------------------------------------


def component_spherophilic(c: ComponentData) -> bool:
    # gZ contains 2Z iff g divides 2 and g != 0
    return c.pi2_generator in (1, 2)


def spherophilic(t: TangentialStructureData) -> dict[str, bool]:
    """Per-component verdict; the structure is spherophilic iff every value is true."""
    if t.d != 2:
        raise ValueError("spherophilia is a property of 2-dimensional structures")
    return {c.name: component_spherophilic(c) for c in t.components}


def is_spherophilic(t: TangentialStructureData) -> bool:
    return all(spherophilic(t).values())


def restrict_to_dim2(t: TangentialStructureData, pi2X_onto_Z2: Sequence[bool]) -> TangentialStructureData:
    """Pull ``t`` back along ``BO(2) -> BO(d)``.

    For ``d >= 3``, ``pi_2 BO(d) = Z/2`` and ``Z = pi_2 BO(2) -> Z/2`` is onto,
    so the image of ``pi_2 X_2`` is all of Z when ``pi_2 X -> Z/2`` is onto and
    the kernel 2Z otherwise.
    """
    if t.d < 3:
        raise ValueError("restriction needs d >= 3")
    if len(pi2X_onto_Z2) != len(t.components):
        raise ValueError("one surjectivity flag per component")
    comps = tuple(
        ComponentData(c.name, c.pi1_F_order, 1 if onto else 2, 1) for c, onto in zip(t.components, pi2X_onto_Z2)
    )
    return TangentialStructureData(2, comps, f"{t.name}|2")


# -- 2-framed circles ----------------------------------------------------------


@dataclass(frozen=True)
class FramedCircle:
    k: int

    @property
    def is_lie(self) -> bool:
        return self.k == 0

    @property
    def bounds_disk(self) -> bool:
        return self.k in (1, -1)


LIE_FRAMING = FramedCircle(0)


def boundary_framing(generator: str) -> FramedCircle:
    """The 2-framing induced on the boundary circle of the cup or cap."""
    if generator == "cup":
        return FramedCircle(1)
    if generator == "cap":
        return FramedCircle(-1)
    raise ValueError(f"boundary framing defined for cup or cap, not {generator!r}")


@dataclass(frozen=True)
class FramedTorus:
    framings: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.framings)

    @classmethod
    def bounding_times_lie(cls, d: int) -> "FramedTorus":
        """``theta_{+1}`` on the first circle factor, Lie framing on the other ``d-2``."""
        if d < 2:
            raise ValueError("the (d-1)-torus needs d >= 2")
        return cls((1,) + (0,) * (d - 2))


# -- dimensional reduction along S^1 ---------------------------------------------


def pi0_total_reduction_S1(t: TangentialStructureData) -> dict[str, int]:
    """Components of ``X_{S^1}`` over each component of ``X``: ``|pi_1 F|`` each."""
    out = {}
    for c in t.components:
        if c.pi1_F_order is None:
            raise UnsupportedStructure(f"{c.name}: pi1 F is infinite")
        out[c.name] = c.pi1_F_order
    return out


def pi0_nullholonomic_reduction_S1(t: TangentialStructureData) -> dict[str, int]:
    """Components of the null-holonomic reduction: the image of ``pi_2 BO(d)`` in ``pi_1 F``."""
    if t.d < 3:
        raise ValueError("null-holonomic reduction needs d >= 3")
    return {c.name: c.pi2_BOd_image_order for c in t.components}


@dataclass(frozen=True)
class HolonomyClass:
    elements: frozenset
    moduli: tuple[int, ...]

    @property
    def null(self) -> bool:
        return self.elements == frozenset({(0,) * len(self.moduli)})

    def __str__(self):
        return "{" + ", ".join(str(e) for e in sorted(self.elements)) + "}"


def _normalise(g: Sequence[int], moduli: Sequence[int]) -> tuple[int, ...]:
    return tuple(x % m if m else x for x, m in zip(g, moduli))


def holonomy(g: Sequence[int], moduli: Sequence[int] | None = None) -> HolonomyClass:
    """The unordered pair ``{g, g^-1}`` in ``Z^r x prod Z/n_i``.

    ``moduli`` gives one entry per coordinate, ``0`` meaning a free Z factor.
    Only abelian presentations are accepted.
    """
    if isinstance(g, int):
        g = (g,)
    if moduli is None:
        moduli = (0,) * len(g)
    if len(moduli) != len(g):
        raise ValueError("element and presentation have different lengths")
    if any(m < 0 for m in moduli):
        raise ValueError("moduli must be >= 0")
    pos = _normalise(g, moduli)
    neg = _normalise([-x for x in g], moduli)
    return HolonomyClass(frozenset({pos, neg}), tuple(moduli))


def chi_even_spherophilia(chi: int) -> bool:
    """Reduction along a closed ``(d-2)``-manifold is spherophilic for every structure when chi is even."""
    return chi % 2 == 0


# -- text format ------------------------------------------------------------------


def parse_structure(text: str, name: str = "X") -> TangentialStructureData:
    """``d <int>`` then ``component <name> pi1F=<int|inf> pi2gen=<int> pi2BOdimg=<1|2>`` lines."""
    d = None
    comps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "d":
            if len(rest) != 1:
                raise StructureParseError("expected 'd <int>'", lineno)
            try:
                d = int(rest[0])
            except ValueError:
                raise StructureParseError(f"bad dimension {rest[0]!r}", lineno) from None
        elif head == "component":
            if not rest:
                raise StructureParseError("component needs a name", lineno)
            cname, *kvs = rest
            vals = {"pi1F": "1", "pi2gen": "1", "pi2BOdimg": "1"}
            for kv in kvs:
                if "=" not in kv:
                    raise StructureParseError(f"expected key=value, got {kv!r}", lineno)
                k, v = kv.split("=", 1)
                if k not in vals:
                    raise StructureParseError(f"unknown key {k!r}", lineno)
                vals[k] = v
            try:
                order = None if vals["pi1F"] in ("inf", "oo") else int(vals["pi1F"])
                comps.append(ComponentData(cname, order, int(vals["pi2gen"]), int(vals["pi2BOdimg"])))
            except ValueError as exc:
                raise StructureParseError(str(exc), lineno) from None
        else:
            raise StructureParseError(f"unknown directive {head!r}", lineno)
    if d is None:
        raise StructureParseError("missing 'd <int>' line")
    try:
        return TangentialStructureData(d, tuple(comps), name)
    except ValueError as exc:
        raise StructureParseError(str(exc)) from None


def format_structure(t: TangentialStructureData) -> str:
    lines = [f"d {t.d}"]
    for c in t.components:
        order = "inf" if c.pi1_F_order is None else c.pi1_F_order
        lines.append(f"component {c.name} pi1F={order} pi2gen={c.pi2_generator} pi2BOdimg={c.pi2_BOd_image_order}")
    return "\n".join(lines) + "\n"


def total_count(counts: dict[str, int]) -> int:
    return sum(counts.values())
