"""Simple generative logic grammars compiled from partition logics.

The compiler translates a logic plus a separating state set into a flat,
non-recursive grammar: a start rule expanding into one nonterminal per
atom, and per atom a row rule listing the supporting state symbols, a
separator, the complementary symbols, and a line break. The derivation
engine expands any grammar of this kind (not only compiled ones) by
deterministic leftmost rewriting.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator

from .errors import (
    CyclicGrammarError,
    EmptyStateSetError,
    LogicFileError,
    NotSeparatingError,
    ValidationError,
)
from .logic import PartitionLogic, StateSet, is_admissible, is_separating

SEPARATOR_NAME = "br"
LINEBREAK_NAME = "n"


class SymbolKind(Enum):
    NONTERMINAL = "nonterminal"
    STATE = "state"
    SEPARATOR = "separator"
    LINEBREAK = "linebreak"


@dataclass(frozen=True)
class Symbol:
    kind: SymbolKind
    name: str

    def __str__(self) -> str:
        return self.name


SEPARATOR = Symbol(SymbolKind.SEPARATOR, SEPARATOR_NAME)
LINEBREAK = Symbol(SymbolKind.LINEBREAK, LINEBREAK_NAME)


def nonterminal(name: str) -> Symbol:
    return Symbol(SymbolKind.NONTERMINAL, name)


def state_symbol(label: str) -> Symbol:
    return Symbol(SymbolKind.STATE, label)


@dataclass(frozen=True)
class Production:
    head: str
    body: tuple[Symbol, ...]


@dataclass(frozen=True)
class Grammar:
    """Nonterminals, state terminals, productions, start symbol, layout.

    The rendering map is carried by id only; binding symbols to colors or
    other realizations happens in the render layer.
    """

    nonterminals: tuple[str, ...]
    terminals: tuple[str, ...]
    productions: tuple[Production, ...]
    start: str
    rendering_map_id: str = "default"
    layout: tuple[str, str] = (SEPARATOR_NAME, LINEBREAK_NAME)

    def __post_init__(self):
        if self.layout != (SEPARATOR_NAME, LINEBREAK_NAME):
            raise ValueError(f"layout symbols must be {(SEPARATOR_NAME, LINEBREAK_NAME)}")
        v, sigma = set(self.nonterminals), set(self.terminals)
        if len(v) != len(self.nonterminals) or len(sigma) != len(self.terminals):
            raise ValueError("symbol declarations repeat a name")
        overlap = (v & sigma) | ((v | sigma) & set(self.layout))
        if overlap:
            raise ValueError(f"symbols declared in more than one class: {sorted(overlap)}")
        if self.start not in v:
            raise ValueError(f"start symbol {self.start!r} is not a nonterminal")
        heads = [p.head for p in self.productions]
        if sorted(heads) != sorted(self.nonterminals):
            raise ValueError("grammar needs exactly one production per nonterminal")
        for production in self.productions:
            for sym in production.body:
                if sym.kind is SymbolKind.NONTERMINAL and sym.name not in v:
                    raise ValueError(f"undeclared nonterminal {sym.name!r}")
                if sym.kind is SymbolKind.STATE and sym.name not in sigma:
                    raise ValueError(f"undeclared terminal {sym.name!r}")
                if sym.kind is SymbolKind.SEPARATOR and sym.name != SEPARATOR_NAME:
                    raise ValueError("separator symbol must be named 'br'")
                if sym.kind is SymbolKind.LINEBREAK and sym.name != LINEBREAK_NAME:
                    raise ValueError("linebreak symbol must be named 'n'")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        refs = {
            p.head: [s.name for s in p.body if s.kind is SymbolKind.NONTERMINAL]
            for p in self.productions
        }
        done: set[str] = set()
        path: set[str] = set()

        def visit(head: str) -> None:
            if head in done:
                return
            if head in path:
                raise CyclicGrammarError(f"nonterminal {head!r} derives itself")
            path.add(head)
            for ref in refs[head]:
                visit(ref)
            path.remove(head)
            done.add(head)

        for head in refs:
            visit(head)

    @cached_property
    def _by_head(self) -> dict[str, Production]:
        return {p.head: p for p in self.productions}

    def production_for(self, head: str) -> Production:
        return self._by_head[head]


@dataclass(frozen=True)
class Derivation:
    """Fully expanded token sequence, with row bookkeeping.

    ``row_boundaries`` are the token indices of linebreaks; ``row_atoms``
    names, per row, the nonterminal whose production emitted it.
    """

    tokens: tuple[Symbol, ...]
    row_boundaries: tuple[int, ...]
    row_atoms: tuple[str, ...]

    def rows(self) -> tuple[tuple[Symbol, ...], ...]:
        """Token runs between linebreaks; linebreaks themselves excluded."""
        rows = []
        start = 0
        for boundary in self.row_boundaries:
            rows.append(self.tokens[start:boundary])
            start = boundary + 1
        if start < len(self.tokens):
            rows.append(self.tokens[start:])
        return tuple(row for row in rows if row)

    @property
    def row_count(self) -> int:
        return len(self.row_atoms)


@dataclass(frozen=True)
class RowViolation:
    row_index: int
    atom: str
    labels: tuple[str, ...]


@dataclass(frozen=True)
class IncidenceReport:
    ok: bool
    violations: tuple[RowViolation, ...]


def compile_grammar(
    logic: PartitionLogic, states: StateSet, rendering_map_id: str = "default"
) -> Grammar:
    """Translate a logic plus admissible, separating states into a grammar.

    The start rule expands into the atoms in declaration order; each atom's
    rule lists its supporting state symbols, then ``br``, then the rest,
    then ``n``. Every row, including the last, ends with ``n`` so that all
    rows have uniform shape.
    """
    if len(states) == 0:
        raise EmptyStateSetError(
            f"logic {logic.name!r} admits no two-valued states"
        )
    for state in states:
        if not is_admissible(state.values, logic):
            raise ValidationError(f"state {state.label} is not admissible")
    separation = is_separating(states, logic)
    if not separation:
        raise NotSeparatingError(*separation.witness)

    labels = states.labels()
    reserved = {SEPARATOR_NAME, LINEBREAK_NAME}
    name_pool = set(logic.atoms) | set(labels) | reserved
    if logic.name in name_pool:
        raise ValidationError(
            f"logic name {logic.name!r} collides with another grammar symbol"
        )
    for atom in logic.atoms:
        if atom in reserved or atom in labels:
            raise ValidationError(
                f"atom {atom!r} collides with a state label or layout symbol"
            )

    productions = [
        Production(logic.name, tuple(nonterminal(a) for a in logic.atoms))
    ]
    for j, atom in enumerate(logic.atoms):
        true_part = [state_symbol(s.label) for s in states if s.values[j] == 1]
        false_part = [state_symbol(s.label) for s in states if s.values[j] == 0]
        body = (*true_part, SEPARATOR, *false_part, LINEBREAK)
        productions.append(Production(atom, body))
    return Grammar(
        nonterminals=(logic.name, *logic.atoms),
        terminals=labels,
        productions=tuple(productions),
        start=logic.name,
        rendering_map_id=rendering_map_id,
    )


def derive(grammar: Grammar) -> Derivation:
    """Deterministic leftmost expansion of the start symbol."""
    depth_limit = len(grammar.nonterminals)
    tokens: list[Symbol] = []
    parents: list[str] = []

    def expand(symbol: Symbol, parent: str, depth: int) -> None:
        if symbol.kind is not SymbolKind.NONTERMINAL:
            tokens.append(symbol)
            parents.append(parent)
            return
        if depth > depth_limit:
            raise CyclicGrammarError(
                f"expansion of {symbol.name!r} exceeds the acyclic depth bound"
            )
        for child in grammar.production_for(symbol.name).body:
            expand(child, symbol.name, depth + 1)

    expand(nonterminal(grammar.start), grammar.start, 0)

    boundaries = tuple(
        i for i, sym in enumerate(tokens) if sym.kind is SymbolKind.LINEBREAK
    )
    row_atoms = []
    start = 0
    for boundary in (*boundaries, len(tokens)):
        if boundary > start:
            row_atoms.append(parents[start])
        start = boundary + 1
    return Derivation(tuple(tokens), boundaries, tuple(row_atoms))


def check_incidence(
    derivation: Derivation, logic: PartitionLogic, states: StateSet
) -> IncidenceReport:
    """Verify that each row places every state symbol on the correct side.

    For row j and state i, the symbol s_i must sit left of the separator
    exactly when state i values atom j as 1. Structural damage (wrong row
    count, missing separator, wrong symbol multiset) is a precondition
    breach and raises ``ValueError``; side mismatches are reported.
    """
    rows = derivation.rows()
    if len(rows) != len(logic.atoms):
        raise ValueError(
            f"derivation has {len(rows)} rows for {len(logic.atoms)} atoms"
        )
    labels = states.labels()
    violations = []
    for j, row in enumerate(rows):
        separators = [k for k, sym in enumerate(row) if sym.kind is SymbolKind.SEPARATOR]
        if len(separators) != 1:
            raise ValueError(f"row {j} does not contain exactly one separator")
        row_labels = sorted(sym.name for sym in row if sym.kind is SymbolKind.STATE)
        if row_labels != sorted(labels):
            raise ValueError(f"row {j} does not carry each state symbol exactly once")
        cut = separators[0]
        left = {sym.name for sym in row[:cut]}
        atom = logic.atoms[j]
        mismatched = tuple(
            state.label
            for i, state in enumerate(states)
            if (state.label in left) != (state.values[j] == 1)
        )
        if mismatched:
            violations.append(RowViolation(j, atom, mismatched))
    return IncidenceReport(not violations, tuple(violations))


def production_text(grammar: Grammar) -> str:
    """Plain-text production listing in arrow notation.

    The start rule is set off from the row rules by a blank line, matching
    the layered source layout used by :func:`sglg.render.emit_logic_program`.
    """
    lines = [_production_line(grammar.productions[0])]
    if len(grammar.productions) > 1:
        lines.append("")
        lines.extend(_production_line(p) for p in grammar.productions[1:])
    return "\n".join(lines) + "\n"


def productions_json(grammar: Grammar) -> str:
    """Productions as a JSON object mapping each head to its body symbols."""
    payload = {p.head: [sym.name for sym in p.body] for p in grammar.productions}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _production_line(production: Production) -> str:
    body = ",".join(sym.name for sym in production.body)
    return f"{production.head} --> {body}."


_RULE_RE = re.compile(r"^(?P<head>\S+)\s*-->\s*(?P<body>.*)\.$")


def parse_production_listing(text: str) -> tuple[tuple[str, tuple[str, ...]], ...]:
    """Recover (head, body-symbol-names) pairs from a production listing.

    Bracketed bodies (repertoire and layout bindings of a full logic
    program) are skipped, so the structural layer can be recovered from
    either a bare listing or complete program source.
    """
    productions = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        match = _RULE_RE.match(stripped)
        if match is None:
            raise LogicFileError("not a production rule", f"line {lineno}")
        body = match.group("body").strip()
        if body.startswith("["):
            continue
        names = tuple(part.strip() for part in body.split(","))
        if not all(names):
            raise LogicFileError("empty symbol in rule body", f"line {lineno}")
        productions.append((match.group("head"), names))
    return tuple(productions)
