"""Oriented 2-dimensional bordisms between closed 1-manifolds, up to diffeomorphism.

A bordism ``m -> n`` (m incoming circles, n outgoing circles) is determined
by its connected components: each open component records its genus and
which source and target circles it touches, and closed components are just
genera.  Gluing is union-find on components plus Euler characteristic
bookkeeping.

The second half of the module is the surgery engine on closed surfaces
and the corner-level generator words evaluated by :mod:`tqftbench.azu`.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class BordismError(ValueError):
    pass


class ArityMismatch(BordismError):
    pass


class InvalidMove(BordismError):
    pass


class SurgeryPathNotFound(BordismError):
    pass


@dataclass(frozen=True, order=True)
class Component:
    ins: tuple[int, ...]
    outs: tuple[int, ...]
    genus: int = 0

    @property
    def boundary(self) -> int:
        return len(self.ins) + len(self.outs)

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - self.boundary


@dataclass(frozen=True)
class Bordism:
    """Canonical form of a compact oriented surface ``source -> target``.

    Construct through :func:`make_bordism` (or the named constructors), which
    sorts components and checks that every boundary circle is used once.
    """

    source: int
    target: int
    components: tuple[Component, ...]
    closed: tuple[int, ...] = ()

    @property
    def chi(self) -> int:
        return sum(c.chi for c in self.components) + sum(2 - 2 * g for g in self.closed)

    @property
    def genus_total(self) -> int:
        return sum(c.genus for c in self.components) + sum(self.closed)

    def component_of_in(self, i: int) -> Component:
        return next(c for c in self.components if i in c.ins)

    def component_of_out(self, j: int) -> Component:
        return next(c for c in self.components if j in c.outs)

    def to_text(self) -> str:
        return format_bordism(self)

    def __str__(self):
        return format_bordism(self)


def make_bordism(source: int, target: int, components: Iterable, closed: Iterable[int] = ()) -> Bordism:
    comps = []
    for c in components:
        if not isinstance(c, Component):
            genus, ins, outs = c
            c = Component(tuple(sorted(ins)), tuple(sorted(outs)), genus)
        else:
            c = Component(tuple(sorted(c.ins)), tuple(sorted(c.outs)), c.genus)
        if c.genus < 0:
            raise BordismError("negative genus")
        if not c.ins and not c.outs:
            closed = list(closed) + [c.genus]
            continue
        comps.append(c)
    seen_in = sorted(i for c in comps for i in c.ins)
    seen_out = sorted(j for c in comps for j in c.outs)
    if seen_in != list(range(source)):
        raise BordismError(f"incoming circles {seen_in} do not match source {source}")
    if seen_out != list(range(target)):
        raise BordismError(f"outgoing circles {seen_out} do not match target {target}")
    closed = tuple(sorted(closed))
    if any(g < 0 for g in closed):
        raise BordismError("negative genus")
    return Bordism(source, target, tuple(sorted(comps)), closed)


# ---------------------------------------------------------------------------
# named bordisms


def identity(n: int = 1) -> Bordism:
    return make_bordism(n, n, [(0, [i], [i]) for i in range(n)])


def cylinder() -> Bordism:
    return identity(1)


def empty() -> Bordism:
    return make_bordism(0, 0, [])


def cup() -> Bordism:
    return make_bordism(0, 1, [(0, [], [0])])


def cap() -> Bordism:
    return make_bordism(1, 0, [(0, [0], [])])


def pants() -> Bordism:
    return make_bordism(2, 1, [(0, [0, 1], [0])])


def copants() -> Bordism:
    return make_bordism(1, 2, [(0, [0], [0, 1])])


def swap() -> Bordism:
    return make_bordism(2, 2, [(0, [0], [1]), (0, [1], [0])])


def permutation(perm: Sequence[int]) -> Bordism:
    """Cylinders sending incoming circle ``i`` to outgoing circle ``perm[i]``."""
    if sorted(perm) != list(range(len(perm))):
        raise BordismError(f"{perm} is not a permutation")
    return make_bordism(len(perm), len(perm), [(0, [i], [p]) for i, p in enumerate(perm)])


def closed_surface(genus: int) -> Bordism:
    return make_bordism(0, 0, [], [genus])


def torus() -> Bordism:
    return closed_surface(1)


def annulus_in() -> Bordism:
    """The annulus read ``2 -> 0`` (evaluation of the circle's self-duality)."""
    return make_bordism(2, 0, [(0, [0, 1], [])])


def annulus_out() -> Bordism:
    """The annulus read ``0 -> 2``."""
    return make_bordism(0, 2, [(0, [], [0, 1])])


NAMED = {
    "cylinder": cylinder,
    "id": cylinder,
    "empty": empty,
    "cup": cup,
    "cap": cap,
    "pants": pants,
    "copants": copants,
    "swap": swap,
    "torus": torus,
    "sphere": lambda: closed_surface(0),
}


# ---------------------------------------------------------------------------
# composition and disjoint union


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def compose(b1: Bordism, b2: Bordism) -> Bordism:
    """``b2 o b1``: glue the outgoing circles of ``b1`` to the incoming circles of ``b2``."""
    if b1.target != b2.source:
        raise ArityMismatch(f"cannot glue {b1.source}->{b1.target} to {b2.source}->{b2.target}")
    pieces = list(b1.components) + list(b2.components)
    k = len(b1.components)
    uf = _UnionFind(len(pieces))
    left = {j: idx for idx, c in enumerate(b1.components) for j in c.outs}
    right = {i: k + idx for idx, c in enumerate(b2.components) for i in c.ins}
    for circle in range(b1.target):
        uf.union(left[circle], right[circle])
    groups: dict[int, list[int]] = {}
    for idx in range(len(pieces)):
        groups.setdefault(uf.find(idx), []).append(idx)
    comps = []
    closed = list(b1.closed) + list(b2.closed)
    for members in groups.values():
        chi = sum(pieces[m].chi for m in members)
        ins = [i for m in members if m < k for i in pieces[m].ins]
        outs = [j for m in members if m >= k for j in pieces[m].outs]
        b = len(ins) + len(outs)
        twice_genus = 2 - chi - b
        assert twice_genus >= 0 and twice_genus % 2 == 0, (chi, b)
        genus = twice_genus // 2
        if b == 0:
            closed.append(genus)
        else:
            comps.append(Component(tuple(sorted(ins)), tuple(sorted(outs)), genus))
    return Bordism(b1.source, b2.target, tuple(sorted(comps)), tuple(sorted(closed)))


def compose_all(bordisms: Sequence[Bordism]) -> Bordism:
    """Compose left to right: the first entry is applied first."""
    if not bordisms:
        raise BordismError("nothing to compose")
    out = bordisms[0]
    for b in bordisms[1:]:
        out = compose(out, b)
    return out


def tensor(b1: Bordism, b2: Bordism) -> Bordism:
    comps = list(b1.components)
    for c in b2.components:
        comps.append(Component(tuple(i + b1.source for i in c.ins), tuple(j + b1.target for j in c.outs), c.genus))
    return Bordism(b1.source + b2.source, b1.target + b2.target, tuple(sorted(comps)), tuple(sorted(b1.closed + b2.closed)))


def tensor_all(bordisms: Sequence[Bordism]) -> Bordism:
    out = empty()
    for b in bordisms:
        out = tensor(out, b)
    return out


def reverse(b: Bordism) -> Bordism:
    """The same surface read backwards (``target -> source``)."""
    return Bordism(b.target, b.source, tuple(sorted(Component(c.outs, c.ins, c.genus) for c in b.components)), b.closed)


# ---------------------------------------------------------------------------
# pants decomposition

PIECES = {
    "cup": (0, 1),
    "cap": (1, 0),
    "pants": (2, 1),
    "copants": (1, 2),
    "cylinder": (1, 1),
    "swap": (2, 2),
}


@dataclass(frozen=True)
class Layer:
    """``id_left (x) piece (x) id_right``."""

    left: int
    piece: str
    right: int

    @property
    def source(self) -> int:
        return self.left + PIECES[self.piece][0] + self.right

    @property
    def target(self) -> int:
        return self.left + PIECES[self.piece][1] + self.right

    @property
    def bordism(self) -> Bordism:
        piece = NAMED[self.piece]()
        return tensor_all([identity(self.left), piece, identity(self.right)])

    def __str__(self):
        parts = []
        if self.left:
            parts.append(f"id{self.left}")
        parts.append(self.piece)
        if self.right:
            parts.append(f"id{self.right}")
        return " (x) ".join(parts)


def _swap_layers(current: list, target_order: list) -> tuple[list[Layer], list]:
    """Adjacent-swap layers that sort ``current`` into ``target_order`` (bubble sort)."""
    rank = {x: i for i, x in enumerate(target_order)}
    cur = list(current)
    layers = []
    n = len(cur)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if rank[cur[i]] > rank[cur[i + 1]]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                layers.append(Layer(i, "swap", n - i - 2))
                changed = True
    return layers, cur


def _component_layers(p: int, q: int, genus: int, offset: int, rest: int, stacked: bool) -> list[Layer]:
    """Layers turning ``p`` adjacent circles at ``offset`` into ``q`` circles through a genus-``genus`` piece."""
    layers = []
    if p == 0:
        layers.append(Layer(offset, "cup", rest))
        p = 1
    for m in range(p - 1):
        layers.append(Layer(offset, "pants", rest + p - m - 2))
    if stacked:
        for h in range(genus):
            layers.append(Layer(offset, "copants", rest + h))
        for h in reversed(range(genus)):
            layers.append(Layer(offset, "pants", rest + h))
    else:
        for _ in range(genus):
            layers.append(Layer(offset, "copants", rest))
            layers.append(Layer(offset, "pants", rest))
    if q == 0:
        layers.append(Layer(offset, "cap", rest))
    else:
        for h in range(q - 1):
            layers.append(Layer(offset, "copants", rest + h))
    return layers


def pants_decompose(b: Bordism, stacked: bool = False) -> list[Layer]:
    """Layers over {cup, cap, pants, copants, cylinder, swap} whose composite is ``b``.

    With ``stacked=True`` the handles of each component are built as a tower
    of copants followed by the matching pants, instead of alternating
    copants/pants pairs; both choices compose to the same canonical form.
    """
    comps = list(b.components)
    order = []
    for idx, c in enumerate(comps):
        order.extend(("c", idx, i) for i in c.ins)
    current = [("c", next(idx for idx, c in enumerate(comps) if i in c.ins), i) for i in range(b.source)]
    layers, _ = _swap_layers(current, order)
    # blocks: (component index, number of circles currently carried)
    offset = 0
    total = b.source
    for idx, c in enumerate(comps):
        p, q = len(c.ins), len(c.outs)
        rest = total - offset - p
        layers.extend(_component_layers(p, q, c.genus, offset, rest, stacked))
        total += q - p
        offset += q
    for g in b.closed:
        layers.extend(_component_layers(0, 0, g, total, 0, stacked))
    # outgoing circles now sit grouped by component in sorted ``outs`` order
    produced = [j for c in comps for j in c.outs]
    perm_layers, _ = _swap_layers(produced, list(range(b.target)))
    layers.extend(perm_layers)
    if not layers:
        return [Layer(0, "cylinder", b.source - 1)] if b.source else []
    return layers


def compose_layers(layers: Sequence[Layer], n: int | None = None) -> Bordism:
    if not layers:
        return identity(n or 0)
    return compose_all([l.bordism for l in layers])


# ---------------------------------------------------------------------------
# text format


def format_bordism(b: Bordism) -> str:
    lines = [f"source {b.source} target {b.target}"]
    for c in b.components:
        lines.append(f"g={c.genus} in={','.join(map(str, c.ins))} out={','.join(map(str, c.outs))}")
    for g in b.closed:
        lines.append(f"closed g={g}")
    return "\n".join(lines)


def parse_bordism(text: str) -> Bordism:
    """Parse the line format written by :func:`format_bordism`.

    The ``source/target`` header is optional; without it the arities are
    read off the largest indices used.
    """
    source = target = None
    comps = []
    closed = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("source"):
                toks = line.split()
                source, target = int(toks[1]), int(toks[3])
            elif line.startswith("closed"):
                closed.append(int(line.split("g=", 1)[1].split()[0]))
            else:
                fields = dict(tok.split("=", 1) for tok in line.split())
                ins = [int(x) for x in fields.get("in", "").split(",") if x]
                outs = [int(x) for x in fields.get("out", "").split(",") if x]
                comps.append((int(fields["g"]), ins, outs))
        except (ValueError, KeyError, IndexError) as exc:
            raise BordismError(f"line {lineno}: cannot parse {raw!r}") from exc
    if source is None:
        source = 1 + max((i for _, ins, _ in comps for i in ins), default=-1)
        target = 1 + max((j for _, _, outs in comps for j in outs), default=-1)
    return make_bordism(source, target, comps, closed)


def bordism_from_spec(spec: str) -> Bordism:
    """Named bordism (``pants``, ``genus:2``), composite ``a;b`` or tensor ``a*b``, or a file path."""
    s = spec.strip()
    if os.path.exists(s):
        with open(s) as fh:
            return parse_bordism(fh.read())
    if ";" in s:
        return compose_all([bordism_from_spec(p) for p in s.split(";")])
    if "*" in s:
        return tensor_all([bordism_from_spec(p) for p in s.split("*")])
    if s.startswith("genus:"):
        return closed_surface(int(s.split(":", 1)[1]))
    if s.startswith("id") and s[2:].isdigit():
        return identity(int(s[2:]))
    if s in NAMED:
        return NAMED[s]()
    raise BordismError(f"unknown bordism {spec!r}")


def random_bordism(rng: random.Random, source: int, target: int, max_genus: int = 2, closed_prob: float = 0.2) -> Bordism:
    """Random canonical bordism: boundary circles dealt into random components."""
    n = source + target
    k = rng.randint(1, max(1, n))
    slots = [rng.randrange(k) for _ in range(n)]
    comps = []
    for c in range(k):
        ins = [i for i in range(source) if slots[i] == c]
        outs = [j for j in range(target) if slots[source + j] == c]
        if ins or outs:
            comps.append((rng.randint(0, max_genus), ins, outs))
    closed = [rng.randint(0, max_genus)] if rng.random() < closed_prob else []
    return make_bordism(source, target, comps, closed)


def composable_pairs(count: int = 120, seed: int = 0, max_arity: int = 2, max_genus: int = 2) -> list[tuple[Bordism, Bordism]]:
    """Deterministic list of pairs ``(b1, b2)`` with ``b1.target == b2.source``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a, b, c = (rng.randint(0, max_arity) for _ in range(3))
        out.append((random_bordism(rng, a, b, max_genus), random_bordism(rng, b, c, max_genus)))
    return out


# ---------------------------------------------------------------------------
# surgery on closed surfaces


SurfaceState = tuple  # sorted tuple of genera


def surface_state(genera: Iterable[int]) -> SurfaceState:
    genera = tuple(sorted(int(g) for g in genera))
    if any(g < 0 for g in genera):
        raise InvalidMove("negative genus")
    return genera


def state_chi(s: SurfaceState) -> int:
    return sum(2 - 2 * g for g in s)


def parse_state(text: str) -> SurfaceState:
    """``{1,1}``, ``1,1`` or ``1 1``."""
    body = text.strip().strip("{}").replace(",", " ")
    return surface_state(int(t) for t in body.split())


def format_state(s: SurfaceState) -> str:
    return "{" + ",".join(map(str, s)) + "}"


MOVE_KINDS = ("zero_internal", "zero_join", "one_nonseparating", "one_separating")


@dataclass(frozen=True)
class SurgeryMove:
    """A surgery on a closed surface.

    ``components`` holds positions in the sorted state; ``split`` is the
    genus pair ``(g1, g2)`` for a separating 1-surgery.
    """

    kind: str
    components: tuple[int, ...]
    split: tuple[int, int] | None = None

    def __str__(self):
        args = ",".join(map(str, self.components))
        if self.split:
            return f"{self.kind}({args}; {self.split[0]}+{self.split[1]})"
        return f"{self.kind}({args})"


def _check_move(s: SurfaceState, m: SurgeryMove):
    if m.kind not in MOVE_KINDS:
        raise InvalidMove(f"unknown move kind {m.kind!r}")
    need = 2 if m.kind == "zero_join" else 1
    if len(m.components) != need or any(not 0 <= c < len(s) for c in m.components):
        raise InvalidMove(f"{m} does not fit state {format_state(s)}")
    if m.kind == "zero_join" and m.components[0] == m.components[1]:
        raise InvalidMove("zero_join needs two distinct components")
    g = s[m.components[0]]
    if m.kind == "one_nonseparating" and g < 1:
        raise InvalidMove("non-separating 1-surgery needs genus >= 1")
    if m.kind == "one_separating":
        if m.split is None or min(m.split) < 0 or sum(m.split) != g:
            raise InvalidMove(f"split {m.split} does not add up to genus {g}")


def surgery_apply(s: SurfaceState, m: SurgeryMove) -> SurfaceState:
    s = surface_state(s)
    _check_move(s, m)
    rest = [g for i, g in enumerate(s) if i not in m.components]
    g = s[m.components[0]]
    if m.kind == "zero_internal":
        new = [g + 1]
    elif m.kind == "zero_join":
        new = [g + s[m.components[1]]]
    elif m.kind == "one_nonseparating":
        new = [g - 1]
    else:
        new = list(m.split)
    return surface_state(rest + new)


def surgery_moves(s: SurfaceState) -> list[SurgeryMove]:
    """All moves on ``s`` up to the symmetry of equal-genus components."""
    moves = []
    firsts = {}
    for i, g in enumerate(s):
        firsts.setdefault(g, i)
    for g, i in sorted(firsts.items()):
        moves.append(SurgeryMove("zero_internal", (i,)))
        if g >= 1:
            moves.append(SurgeryMove("one_nonseparating", (i,)))
        for g1 in range(g // 2 + 1):
            moves.append(SurgeryMove("one_separating", (i,), (g1, g - g1)))
    seen = set()
    for i, j in itertools.combinations(range(len(s)), 2):
        key = (s[i], s[j])
        if key not in seen:
            seen.add(key)
            moves.append(SurgeryMove("zero_join", (i, j)))
    return moves


def surgery_path(s: SurfaceState, t: SurfaceState, genus_cap: int = 8, component_cap: int | None = None) -> list[SurgeryMove]:
    """Shortest list of moves from ``s`` to ``t`` by breadth-first search.

    States are restricted to total genus ``<= genus_cap`` and at most
    ``component_cap`` components (default: the larger endpoint count plus
    ``genus_cap``), which keeps the search finite.
    """
    s, t = surface_state(s), surface_state(t)
    if component_cap is None:
        component_cap = max(len(s), len(t)) + genus_cap
    if s == t:
        return []
    for st in (s, t):
        if sum(st) > genus_cap or len(st) > component_cap:
            raise SurgeryPathNotFound(f"{format_state(st)} lies outside the search caps")
    parent: dict = {s: None}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for m in surgery_moves(cur):
            nxt = surgery_apply(cur, m)
            if nxt in parent or sum(nxt) > genus_cap or len(nxt) > component_cap:
                continue
            parent[nxt] = (cur, m)
            if nxt == t:
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, mv = parent[node]
                    path.append(mv)
                    node = prev
                return path[::-1]
            queue.append(nxt)
    raise SurgeryPathNotFound(f"no path {format_state(s)} -> {format_state(t)} with genus cap {genus_cap}")


def replay(s: SurfaceState, moves: Sequence[SurgeryMove]) -> list[SurfaceState]:
    states = [surface_state(s)]
    for m in moves:
        states.append(surgery_apply(states[-1], m))
    return states


def inverse_move(s: SurfaceState, m: SurgeryMove) -> SurgeryMove:
    """A move undoing ``m`` when applied to ``surgery_apply(s, m)``."""
    after = surgery_apply(s, m)
    rest = list(s)
    for i in sorted(m.components, reverse=True):
        rest.pop(i)
    created = [g for g in after]
    for g in rest:
        created.remove(g)
    if m.kind == "zero_internal":
        return SurgeryMove("one_nonseparating", (after.index(created[0]),))
    if m.kind == "one_nonseparating":
        return SurgeryMove("zero_internal", (after.index(created[0]),))
    if m.kind == "zero_join":
        g1, g2 = s[m.components[0]], s[m.components[1]]
        return SurgeryMove("one_separating", (after.index(created[0]),), (g1, g2))
    g1, g2 = m.split
    i = after.index(g1)
    j = next(k for k, g in enumerate(after) if g == g2 and k != i)
    return SurgeryMove("zero_join", tuple(sorted((i, j))))


def surgery_cobordism(m: SurgeryMove, ambient: SurfaceState) -> tuple[Bordism, Bordism]:
    """Split the post-surgery surface as ``glue o complement``.

    The complement is the old surface minus the surgery neighbourhood
    (``S^k x D^(2-k)``), read ``0 -> 2``; untouched components ride along
    as closed components.  The glue piece is ``D^(k+1) x S^(1-k)`` read
    ``2 -> 0``: an annulus for 0-surgeries, two disks for 1-surgeries.
    """
    s = surface_state(ambient)
    _check_move(s, m)
    rest = [g for i, g in enumerate(s) if i not in m.components]
    g = s[m.components[0]]
    if m.kind == "zero_internal":
        comps = [(g, [], [0, 1])]
    elif m.kind == "zero_join":
        comps = [(g, [], [0]), (s[m.components[1]], [], [1])]
    elif m.kind == "one_nonseparating":
        comps = [(g - 1, [], [0, 1])]
    else:
        comps = [(m.split[0], [], [0]), (m.split[1], [], [1])]
    complement = make_bordism(0, 2, comps, rest)
    if m.kind.startswith("zero"):
        glue = annulus_in()
    else:
        glue = tensor(cap(), cap())
    return complement, glue


# ---------------------------------------------------------------------------
# handle cancellation at d = 2


@dataclass(frozen=True)
class CorneredSurface:
    """Connected surface whose boundary circles may carry source/target arcs.

    Used for the strip complement of a cancelling handle pair: the boundary
    circle made of a source arc, a target arc and two side arcs.
    """

    genus: int
    boundary_circles: int
    source_arcs: int
    target_arcs: int

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - self.boundary_circles


def handle_pair(p: int) -> tuple[Bordism, Bordism]:
    """The cancelling pair ``(H_{p-1}, H_p)`` on the circle as closed-boundary bordisms.

    ``p = 1``: birth of a circle (0-handle) then a joining 1-handle.
    ``p = 2``: a splitting 1-handle then a capping 2-handle.
    """
    if p == 1:
        return tensor(identity(1), cup()), pants()
    if p == 2:
        return copants(), tensor(identity(1), cap())
    raise BordismError("handle pairs at d = 2 have p in {1, 2}")


def remove_strip(b: Bordism, in_circle: int = 0, out_circle: int = 0) -> CorneredSurface:
    """Cut ``D^1 x I`` running from an incoming to an outgoing circle out of ``b``.

    The two circles fuse into one boundary circle carrying one source and one
    target arc; Euler characteristic goes up by one (strip minus two arcs).
    """
    comp = b.component_of_in(in_circle)
    if out_circle not in comp.outs:
        raise BordismError("the strip must run inside one component")
    if len(b.components) != 1 or b.closed:
        raise BordismError("strip removal is only defined on connected bordisms")
    chi = comp.chi + 1
    circles = comp.boundary - 1
    twice_genus = 2 - chi - circles
    return CorneredSurface(twice_genus // 2, circles, 1, 1)


def punctured_handle_compose(p: int) -> CorneredSurface:
    """``H'_p o H'_{p-1}``: the cancelling pair with a disk removed.

    ``p`` in {0, 1} selects the pair (0-/1-handles or 1-/2-handles).  The
    un-punctured composite is the cylinder; removing the strip leaves the
    identity on the interval, a disk with chi = 1.
    """
    if p not in (0, 1):
        raise BordismError("p must be 0 or 1")
    lower, upper = handle_pair(p + 1)
    whole = compose(lower, upper)
    if whole != cylinder():
        raise AssertionError(f"handle pair {p} does not cancel: {whole}")
    disk = remove_strip(whole)
    if disk.chi != 1 or disk.genus != 0:
        raise AssertionError(f"strip complement is not a disk: {disk}")
    return disk


# ---------------------------------------------------------------------------
# corner-level generator words

ONE_GENERATORS = {
    # name: (source signs, target signs)
    "left_elbow": ((), ("+", "-")),
    "right_elbow": (("+", "-"), ()),
    "id_pos": (("+",), ("+",)),
    "id_neg": (("-",), ("-",)),
    "id_pair": (("+", "-"), ("+", "-")),
    "swap_pair": (("+", "-"), ("-", "+")),
}

POINTS = {"positive_point": ("+",), "negative_point": ("-",)}

CIRCLE = ("left_elbow", "right_elbow")
EMPTY_WORD: tuple[str, ...] = ()
ELBOW_PAIR = ("right_elbow", "left_elbow")
STRAIGHT_PAIR = ("id_pair",)

TWO_GENERATORS = {
    # name: (source 1-morphism word, target 1-morphism word)
    "cup": (EMPTY_WORD, CIRCLE),
    "cap": (CIRCLE, EMPTY_WORD),
    "saddle": (ELBOW_PAIR, STRAIGHT_PAIR),
    "cosaddle": (STRAIGHT_PAIR, ELBOW_PAIR),
    # unit and counit of the adjunction left_elbow -| right_elbow
    "elbow_unit": (EMPTY_WORD, CIRCLE),
    "elbow_counit": (ELBOW_PAIR, STRAIGHT_PAIR),
    "identity_circle": (CIRCLE, CIRCLE),
    "identity_pair": (STRAIGHT_PAIR, STRAIGHT_PAIR),
    "identity_elbows": (ELBOW_PAIR, ELBOW_PAIR),
}


def one_word_arity(word: Sequence[str]) -> tuple[tuple, tuple]:
    """Source and target signs of a composable 1-morphism word (empty word: ``() -> ()``)."""
    if not word:
        return (), ()
    src = ONE_GENERATORS[word[0]][0]
    cur = src
    for g in word:
        if g not in ONE_GENERATORS:
            raise BordismError(f"unknown 1-morphism generator {g!r}")
        s, t = ONE_GENERATORS[g]
        if s != cur:
            raise ArityMismatch(f"{g} expects {s}, got {cur}")
        cur = t
    return src, cur


@dataclass(frozen=True)
class GeneratorWord:
    """A composable sequence of generators, applied left to right.

    ``layer`` is 1 for words in the 1-morphism generators (elbows, identity
    intervals, swap) and 2 for vertical composites of 2-morphism generators.
    Words are not normalised; equality of words is decided by evaluation.
    """

    letters: tuple[str, ...]
    layer: int

    def __post_init__(self):
        if self.layer == 1:
            one_word_arity(self.letters)
        elif self.layer == 2:
            if not self.letters:
                raise BordismError("empty 2-morphism word")
            cur = None
            for g in self.letters:
                if g not in TWO_GENERATORS:
                    raise BordismError(f"unknown 2-morphism generator {g!r}")
                s, t = TWO_GENERATORS[g]
                if cur is not None and s != cur:
                    raise ArityMismatch(f"{g} expects {s}, got {cur}")
                cur = t
        else:
            raise BordismError("layer must be 1 or 2")

    @property
    def source(self):
        if self.layer == 1:
            return one_word_arity(self.letters)[0]
        return TWO_GENERATORS[self.letters[0]][0]

    @property
    def target(self):
        if self.layer == 1:
            return one_word_arity(self.letters)[1]
        return TWO_GENERATORS[self.letters[-1]][1]

    @classmethod
    def one(cls, *letters: str) -> "GeneratorWord":
        return cls(tuple(letters), 1)

    @classmethod
    def two(cls, *letters: str) -> "GeneratorWord":
        return cls(tuple(letters), 2)

    def __str__(self):
        return " ; ".join(self.letters) if self.letters else "(empty)"
