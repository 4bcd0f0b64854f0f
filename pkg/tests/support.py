"""Shared fixtures-loading helpers and independent oracles for the tests.

The brute-force state oracle deliberately re-derives admissibility from
scratch (filter all 2^m bit vectors) instead of calling into the package,
so enumeration bugs cannot hide behind a shared implementation.
"""

from __future__ import annotations

import random
import string
from itertools import combinations, product
from pathlib import Path

from sglg import (
    Grammar,
    PartitionLogic,
    Production,
    StateSet,
    Symbol,
    SymbolKind,
    enumerate_states,
    is_separating,
    parse_logic_file,
    resolve_states,
)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

# Golden valuation tables for the two pasting fixtures, in pinned order.
L12_TABLE = (
    (1, 0, 0, 0, 1),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 0, 1),
    (0, 1, 0, 1, 0),
    (0, 0, 1, 0, 0),
)
TRIANGLE_TABLE = (
    (1, 0, 0, 1, 0, 0),
    (0, 1, 0, 1, 0, 1),
    (0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1),
)


def load_fixture(name: str):
    return parse_logic_file((FIXTURES / name).read_text(encoding="utf-8"))


def resolve_fixture(name: str) -> tuple[PartitionLogic, StateSet]:
    return resolve_states(load_fixture(name))


def brute_force_states(logic: PartitionLogic) -> set[tuple[int, ...]]:
    """All valuations with exactly one true atom per context, by filtering."""
    hits = set()
    for bits in product((0, 1), repeat=len(logic.atoms)):
        if all(sum(bits[j] for j in ctx) == 1 for ctx in logic.contexts):
            hits.add(bits)
    return hits


def random_logic(rng: random.Random, max_atoms: int = 8) -> PartitionLogic:
    """A random pasted logic with sanitized contexts.

    Contexts that would nest are discarded and atoms left uncovered are
    dropped (with indices remapped), so the result always satisfies the
    structural invariants.
    """
    while True:
        m = rng.randint(2, max_atoms)
        wanted = rng.randint(1, 4)
        contexts: list[tuple[int, ...]] = []
        for _ in range(wanted * 3):
            if len(contexts) >= wanted:
                break
            size = rng.randint(2, min(m, 4))
            ctx = tuple(sorted(rng.sample(range(m), size)))
            sets = [set(c) for c in contexts]
            if any(set(ctx) <= s or s <= set(ctx) for s in sets):
                continue
            contexts.append(ctx)
        if not contexts:
            continue
        covered = sorted({j for ctx in contexts for j in ctx})
        remap = {j: i for i, j in enumerate(covered)}
        atoms = tuple(string.ascii_lowercase[i] for i in range(len(covered)))
        return PartitionLogic(
            name="random_logic",
            atoms=atoms,
            contexts=tuple(tuple(remap[j] for j in ctx) for ctx in contexts),
        )


def random_separating_logic(
    rng: random.Random, max_atoms: int = 8, max_states: int = 16
) -> tuple[PartitionLogic, StateSet]:
    """Rejection-sample until the enumerated states separate the atoms."""
    while True:
        logic = random_logic(rng, max_atoms)
        states = enumerate_states(logic)
        if 0 < len(states) <= max_states and is_separating(states, logic):
            return logic, states


def one_state_grammar(name: str = "g") -> Grammar:
    """The smallest useful grammar: one row holding one state symbol."""
    return Grammar(
        nonterminals=(name, "x"),
        terminals=("s1",),
        productions=(
            Production(name, (Symbol(SymbolKind.NONTERMINAL, "x"),)),
            Production(
                "x",
                (
                    Symbol(SymbolKind.STATE, "s1"),
                    Symbol(SymbolKind.SEPARATOR, "br"),
                    Symbol(SymbolKind.LINEBREAK, "n"),
                ),
            ),
        ),
        start=name,
    )


def separating_by_oracle(states, logic: PartitionLogic) -> bool:
    """Independent pairwise-support comparison."""
    support = {
        atom: frozenset(
            i for i, s in enumerate(states) if s.values[j] == 1
        )
        for j, atom in enumerate(logic.atoms)
    }
    return all(
        support[u] != support[v] for u, v in combinations(logic.atoms, 2)
    )
