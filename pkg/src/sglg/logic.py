"""Finite partition logics and their two-valued states.

A partition logic is a pasting of Boolean contexts: an ordered atom list
plus an ordered list of contexts, each context naming the atoms of one
maximal Boolean block. A two-valued state assigns 0/1 to every atom so
that exactly one atom per context is true. This module parses the two
input file modes (hypergraph and base-set partitions), enumerates states,
and computes supports and partition representations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Union

from .errors import LogicFileError, NotAPartitionError, PinnedStatesError

Point = Union[int, str]

_NAME_RE = re.compile(r"[A-Za-z_]\w*")
_HEX_COLOR_RE = re.compile(r"#[0-9A-Fa-f]{6}")
DEFAULT_LOGIC_NAME = "logic"


class StateOrder(Enum):
    """How the order of a state set was fixed."""

    CANONICAL = "canonical"
    PINNED = "pinned-by-spec"
    POINT_INDUCED = "point-induced"


@dataclass(frozen=True)
class PartitionLogic:
    """Ordered atoms plus ordered contexts of atom indices."""

    name: str
    atoms: tuple[str, ...]
    contexts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise LogicFileError(f"not an identifier: {self.name!r}", "name")
        if not self.atoms:
            raise LogicFileError("atom list is empty", "atoms")
        seen: dict[str, int] = {}
        for i, atom in enumerate(self.atoms):
            if not isinstance(atom, str) or not atom:
                raise LogicFileError("atom names must be nonempty strings", f"atoms[{i}]")
            if atom in seen:
                raise LogicFileError(f"duplicate atom name {atom!r}", f"atoms[{i}]")
            seen[atom] = i
        if not self.contexts:
            raise LogicFileError("context list is empty", "contexts")
        for ci, ctx in enumerate(self.contexts):
            for j in ctx:
                if not 0 <= j < len(self.atoms):
                    raise LogicFileError(f"atom index {j} out of range", f"contexts[{ci}]")
            if len(set(ctx)) != len(ctx):
                raise LogicFileError("context repeats an atom", f"contexts[{ci}]")
            if len(ctx) < 2:
                raise LogicFileError("context has fewer than 2 atoms", f"contexts[{ci}]")
        covered = {j for ctx in self.contexts for j in ctx}
        for i, atom in enumerate(self.atoms):
            if i not in covered:
                raise LogicFileError(f"atom {atom!r} appears in no context", f"atoms[{i}]")
        for ci, cj in combinations(range(len(self.contexts)), 2):
            a, b = set(self.contexts[ci]), set(self.contexts[cj])
            if a <= b or b <= a:
                raise LogicFileError(
                    f"contexts {ci} and {cj} are nested; no context may be a "
                    "subset of another",
                    f"contexts[{cj}]",
                )

    def context_atoms(self, index: int) -> tuple[str, ...]:
        """Atom names of one context, in context order."""
        return tuple(self.atoms[j] for j in self.contexts[index])


@dataclass(frozen=True)
class BaseSetSpec:
    """Partitions of a finite base set, each block becoming an atom."""

    name: str
    base_set: tuple[Point, ...]
    partitions: tuple[tuple[tuple[Point, ...], ...], ...]
    block_names: tuple[tuple[str, ...], ...] | None = None

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise LogicFileError(f"not an identifier: {self.name!r}", "name")
        if not self.base_set:
            raise LogicFileError("base set is empty", "base_set")
        if len(set(self.base_set)) != len(self.base_set):
            raise LogicFileError("base set repeats a point", "base_set")
        if not self.partitions:
            raise LogicFileError("partition list is empty", "partitions")
        universe = set(self.base_set)
        for pi, partition in enumerate(self.partitions):
            loc = f"partitions[{pi}]"
            seen: set[Point] = set()
            for bi, block in enumerate(partition):
                if not block:
                    raise LogicFileError("block is empty", f"{loc}[{bi}]")
                block_set = set(block)
                if len(block_set) != len(block):
                    raise LogicFileError("block repeats a point", f"{loc}[{bi}]")
                stray = block_set - universe
                if stray:
                    raise LogicFileError(
                        f"points {sorted(stray, key=repr)} are not in the base set",
                        f"{loc}[{bi}]",
                    )
                if block_set & seen:
                    raise LogicFileError("blocks are not pairwise disjoint", loc)
                seen |= block_set
            if seen != universe:
                missing = sorted(universe - seen, key=repr)
                raise LogicFileError(f"partition does not cover points {missing}", loc)
        if self.block_names is not None:
            if len(self.block_names) != len(self.partitions):
                raise LogicFileError(
                    "block_names must have one entry per partition", "block_names"
                )
            for pi, names in enumerate(self.block_names):
                if len(names) != len(self.partitions[pi]):
                    raise LogicFileError(
                        "block_names entry does not match the partition's block count",
                        f"block_names[{pi}]",
                    )
                for name in names:
                    if not isinstance(name, str) or not name:
                        raise LogicFileError(
                            "block names must be nonempty strings", f"block_names[{pi}]"
                        )


@dataclass(frozen=True)
class TwoValuedState:
    """A 0/1 valuation over the atom list, with its symbol label."""

    label: str
    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.values):
            raise ValueError(f"state {self.label}: values must be 0 or 1")


@dataclass(frozen=True)
class StateSet:
    """Ordered, labeled two-valued states; the column order of all artifacts."""

    states: tuple[TwoValuedState, ...]
    order_source: StateOrder

    def __post_init__(self):
        vectors = {s.values for s in self.states}
        if len(vectors) != len(self.states):
            raise ValueError("state value vectors are not distinct")
        if len({len(s.values) for s in self.states}) > 1:
            raise ValueError("states have differing atom counts")
        for i, state in enumerate(self.states):
            if state.label != f"s{i + 1}":
                raise ValueError(
                    f"state {i} is labeled {state.label!r}, expected 's{i + 1}'"
                )

    @classmethod
    def from_vectors(
        cls, vectors: list[tuple[int, ...]], order_source: StateOrder
    ) -> "StateSet":
        states = tuple(
            TwoValuedState(f"s{i + 1}", values) for i, values in enumerate(vectors)
        )
        return cls(states, order_source)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.states)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[TwoValuedState]:
        return iter(self.states)

    def __getitem__(self, index: int) -> TwoValuedState:
        return self.states[index]


@dataclass(frozen=True)
class SupportTable:
    """Per atom, the state labels valuing it 1 (T) and 0 (F), in state order."""

    atoms: tuple[str, ...]
    state_labels: tuple[str, ...]
    true_sets: tuple[tuple[str, ...], ...]
    false_sets: tuple[tuple[str, ...], ...]

    def true_labels(self, atom: str) -> tuple[str, ...]:
        return self.true_sets[self.atoms.index(atom)]

    def false_labels(self, atom: str) -> tuple[str, ...]:
        return self.false_sets[self.atoms.index(atom)]


@dataclass(frozen=True)
class SeparationResult:
    separating: bool
    witness: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.separating


@dataclass(frozen=True)
class LogicFile:
    """One parsed logic file: the input-mode payload plus optional extras."""

    source: PartitionLogic | BaseSetSpec
    pinned_states: tuple[tuple[int, ...], ...] | None = None
    palette: dict[str, str] | None = None


def is_admissible(values: tuple[int, ...], logic: PartitionLogic) -> bool:
    """True iff exactly one atom per context is valued 1."""
    return all(sum(values[j] for j in ctx) == 1 for ctx in logic.contexts)


def parse_logic_file(text: str) -> LogicFile:
    """Parse a UTF-8 JSON logic file in either input mode.

    Mode 1 gives atoms and contexts directly (optionally with a pinned
    state order and a palette); mode 2 gives a base set and partitions.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LogicFileError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise LogicFileError("top level must be a JSON object")

    keys = set(raw)
    if "atoms" in keys and "base_set" in keys:
        raise LogicFileError("file mixes both input modes (atoms and base_set given)")
    if "atoms" in keys:
        allowed = {"name", "atoms", "contexts", "states", "palette"}
    elif "base_set" in keys:
        allowed = {"name", "base_set", "partitions", "block_names"}
    else:
        raise LogicFileError("file must give either 'atoms' or 'base_set'")
    unknown = keys - allowed
    if unknown:
        raise LogicFileError(f"unknown keys {sorted(unknown)}")

    name = raw.get("name", DEFAULT_LOGIC_NAME)
    if not isinstance(name, str):
        raise LogicFileError("must be a string", "name")

    if "base_set" in keys:
        return LogicFile(source=_parse_base_set_mode(name, raw))

    logic = _parse_hypergraph_mode(name, raw)
    pinned = _parse_pinned_states(raw.get("states"), logic)
    palette = _parse_palette(raw.get("palette"))
    return LogicFile(source=logic, pinned_states=pinned, palette=palette)


def parse_logic_spec(text: str) -> PartitionLogic | BaseSetSpec:
    """Parse a logic file and return its input-mode payload only."""
    return parse_logic_file(text).source


def _parse_hypergraph_mode(name: str, raw: dict) -> PartitionLogic:
    atoms = raw["atoms"]
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise LogicFileError("must be a list of strings", "atoms")
    contexts = raw.get("contexts")
    if not isinstance(contexts, list):
        raise LogicFileError("must be a list of atom-name lists", "contexts")
    index = {a: i for i, a in enumerate(atoms)}
    if len(index) != len(atoms):
        dup = next(a for i, a in enumerate(atoms) if a in atoms[:i])
        raise LogicFileError(f"duplicate atom name {dup!r}", "atoms")
    resolved = []
    for ci, ctx in enumerate(contexts):
        if not isinstance(ctx, list):
            raise LogicFileError("must be a list of atom names", f"contexts[{ci}]")
        row = []
        for a in ctx:
            if a not in index:
                raise LogicFileError(f"unknown atom {a!r}", f"contexts[{ci}]")
            row.append(index[a])
        resolved.append(tuple(row))
    return PartitionLogic(name, tuple(atoms), tuple(resolved))


def _parse_base_set_mode(name: str, raw: dict) -> BaseSetSpec:
    base = raw["base_set"]
    if not isinstance(base, list) or not all(isinstance(p, (int, str)) for p in base):
        raise LogicFileError("must be a list of ints or strings", "base_set")
    partitions = raw.get("partitions")
    if not isinstance(partitions, list):
        raise LogicFileError("must be a list of partitions", "partitions")
    parsed = []
    for pi, partition in enumerate(partitions):
        if not isinstance(partition, list) or not all(
            isinstance(b, list) for b in partition
        ):
            raise LogicFileError("must be a list of blocks", f"partitions[{pi}]")
        parsed.append(tuple(tuple(block) for block in partition))
    names = raw.get("block_names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(n, list) for n in names):
            raise LogicFileError("must be a list of name lists", "block_names")
        names = tuple(tuple(n) for n in names)
    return BaseSetSpec(name, tuple(base), tuple(parsed), names)


def _parse_pinned_states(raw_states, logic: PartitionLogic):
    if raw_states is None:
        return None
    if not isinstance(raw_states, list):
        raise LogicFileError("must be a list of 0/1 rows", "states")
    rows = []
    for si, row in enumerate(raw_states):
        if (
            not isinstance(row, list)
            or len(row) != len(logic.atoms)
            or any(v not in (0, 1) for v in row)
        ):
            raise LogicFileError(
                f"must be a list of {len(logic.atoms)} values, each 0 or 1",
                f"states[{si}]",
            )
        rows.append(tuple(row))
    return tuple(rows)


def _parse_palette(raw_palette):
    if raw_palette is None:
        return None
    if not isinstance(raw_palette, dict):
        raise LogicFileError("must map state labels to colors", "palette")
    for label, color in raw_palette.items():
        if not isinstance(color, str) or not _HEX_COLOR_RE.fullmatch(color):
            raise LogicFileError(
                f"color for {label!r} must look like '#RRGGBB'", "palette"
            )
    return dict(raw_palette)


def logic_from_partitions(spec: BaseSetSpec) -> tuple[PartitionLogic, StateSet]:
    """Build the pasted logic and its point-induced states.

    Blocks equal as point sets are identified as one atom across
    partitions; giving such blocks different names is rejected as an
    ambiguous pasting. Points inducing identical valuations collapse to
    one state.
    """
    atoms: list[str] = []
    blocks: list[frozenset[Point]] = []
    by_block: dict[frozenset[Point], int] = {}
    contexts: list[tuple[int, ...]] = []
    for pi, partition in enumerate(spec.partitions):
        row = []
        for bi, block in enumerate(partition):
            key = frozenset(block)
            if spec.block_names is not None:
                name = spec.block_names[pi][bi]
            else:
                name = f"p{pi + 1}b{bi + 1}"
            if key in by_block:
                j = by_block[key]
                if spec.block_names is not None and atoms[j] != name:
                    raise LogicFileError(
                        f"block {sorted(key, key=repr)} is named {atoms[j]!r} and "
                        f"{name!r} in different partitions (ambiguous pasting)",
                        f"block_names[{pi}][{bi}]",
                    )
            else:
                if name in atoms:
                    raise LogicFileError(
                        f"name {name!r} is used for two different blocks",
                        f"block_names[{pi}][{bi}]" if spec.block_names else None,
                    )
                by_block[key] = len(atoms)
                atoms.append(name)
                blocks.append(key)
                j = by_block[key]
            row.append(j)
        contexts.append(tuple(row))

    logic = PartitionLogic(spec.name, tuple(atoms), tuple(contexts))

    vectors: list[tuple[int, ...]] = []
    for point in spec.base_set:
        values = tuple(1 if point in block else 0 for block in blocks)
        if values not in vectors:
            vectors.append(values)
    states = StateSet.from_vectors(vectors, StateOrder.POINT_INDUCED)
    return logic, states


def enumerate_states(logic: PartitionLogic) -> StateSet:
    """All two-valued states of the logic, in canonical order.

    Canonical order is descending lexicographic over the atom declaration
    order; labels s1..sN follow that order. An empty result is legal and
    is rejected only by the grammar compiler.
    """
    values: list[int | None] = [None] * len(logic.atoms)
    found: list[tuple[int, ...]] = []

    def extend(ci: int) -> None:
        if ci == len(logic.contexts):
            found.append(tuple(values))  # type: ignore[arg-type]
            return
        ctx = logic.contexts[ci]
        fixed = [j for j in ctx if values[j] == 1]
        if len(fixed) > 1:
            return
        choices = fixed if fixed else [j for j in ctx if values[j] is None]
        for true_atom in choices:
            changed = []
            consistent = True
            for j in ctx:
                want = 1 if j == true_atom else 0
                if values[j] is None:
                    values[j] = want
                    changed.append(j)
                elif values[j] != want:
                    consistent = False
                    break
            if consistent:
                extend(ci + 1)
            for j in changed:
                values[j] = None

    extend(0)
    found.sort(reverse=True)
    return StateSet.from_vectors(found, StateOrder.CANONICAL)


def pinned_state_set(
    logic: PartitionLogic, rows: tuple[tuple[int, ...], ...]
) -> StateSet:
    """Validate an explicit state order against the full enumeration."""
    for si, row in enumerate(rows):
        if not is_admissible(row, logic):
            raise PinnedStatesError(
                f"pinned state s{si + 1} is not admissible (some context does "
                "not have exactly one true atom)"
            )
    if len(set(rows)) != len(rows):
        raise PinnedStatesError("pinned states repeat a valuation")
    enumerated = {s.values for s in enumerate_states(logic)}
    pinned = set(rows)
    if pinned != enumerated:
        missing = len(enumerated - pinned)
        raise PinnedStatesError(
            "pinned states do not match the full enumeration "
            f"({missing} of {len(enumerated)} valuations missing)"
        )
    return StateSet.from_vectors(list(rows), StateOrder.PINNED)


def resolve_states(logic_file: LogicFile) -> tuple[PartitionLogic, StateSet]:
    """Turn a parsed logic file into a logic plus its working state set."""
    if isinstance(logic_file.source, BaseSetSpec):
        return logic_from_partitions(logic_file.source)
    logic = logic_file.source
    if logic_file.pinned_states is not None:
        return logic, pinned_state_set(logic, logic_file.pinned_states)
    return logic, enumerate_states(logic)


def is_separating(states: StateSet, logic: PartitionLogic) -> SeparationResult:
    """Whether all atoms have pairwise distinct supports; witness on failure."""
    support = [
        frozenset(s.label for s in states if s.values[j] == 1)
        for j in range(len(logic.atoms))
    ]
    for i, j in combinations(range(len(logic.atoms)), 2):
        if support[i] == support[j]:
            return SeparationResult(False, (logic.atoms[i], logic.atoms[j]))
    return SeparationResult(True)


def supports(logic: PartitionLogic, states: StateSet) -> SupportTable:
    """T and F label sets per atom, both in ascending state-index order."""
    true_sets = []
    false_sets = []
    for j in range(len(logic.atoms)):
        true_sets.append(tuple(s.label for s in states if s.values[j] == 1))
        false_sets.append(tuple(s.label for s in states if s.values[j] == 0))
    return SupportTable(
        atoms=logic.atoms,
        state_labels=states.labels(),
        true_sets=tuple(true_sets),
        false_sets=tuple(false_sets),
    )


def partition_representation(
    logic: PartitionLogic, states: StateSet
) -> tuple[tuple[tuple[str, ...], ...], ...]:
    """Per context, the T-sets of its atoms in context order.

    For admissible states each context's T-sets are pairwise disjoint and
    cover the state labels; this is still checked defensively. A cell may
    be empty (an atom valued 0 by every state).
    """
    table = supports(logic, states)
    result = []
    for ci, ctx in enumerate(logic.contexts):
        cells = tuple(table.true_sets[j] for j in ctx)
        seen: set[str] = set()
        total = 0
        for cell in cells:
            total += len(cell)
            seen.update(cell)
        if total != len(seen) or seen != set(states.labels()):
            raise NotAPartitionError(
                f"context {ci}: supports do not partition the state labels"
            )
        result.append(cells)
    return tuple(result)
