"""Shared test helpers: an independent simulation oracle and input makers.

The oracle evaluates gates per input pattern with plain bit twiddling,
deliberately avoiding the library's permutation-table composition so the
two routes check each other.
"""

from __future__ import annotations

import random

from revident import Circuit, Gate

try:  # hypothesis is a test-only dependency
    from hypothesis import strategies as st
except ImportError:  # pragma: no cover
    st = None


def eval_gate(gate: Gate, pattern: int) -> int:
    if all(pattern >> c & 1 for c in gate.controls):
        return pattern ^ (1 << gate.target)
    return pattern


def simulate_bruteforce(c: Circuit) -> tuple[int, ...]:
    out = []
    for x in range(1 << c.width):
        v = x
        for g in c.gates:
            v = eval_gate(g, v)
        out.append(v)
    return tuple(out)


def random_circuit(rng: random.Random, width: int, gates: int) -> Circuit:
    """Plain sampler, independent of the library's generator module."""
    out = []
    for _ in range(gates):
        k = rng.randint(0, min(3, width - 1))
        wires = rng.sample(range(width), k + 1)
        out.append(Gate(frozenset(wires[:-1]), wires[-1]))
    return Circuit(width, tuple(out))


def all_gates(width: int, max_controls: int = 3):
    """Every MCT gate on the given wires with at most max_controls controls."""
    from itertools import combinations

    for target in range(width):
        rest = [w for w in range(width) if w != target]
        for k in range(0, min(max_controls, width - 1) + 1):
            for controls in combinations(rest, k):
                yield Gate(frozenset(controls), target)


if st is not None:

    @st.composite
    def circuits(draw, max_width: int = 5, max_gates: int = 12):
        width = draw(st.integers(min_value=1, max_value=max_width))
        gates = []
        for _ in range(draw(st.integers(min_value=0, max_value=max_gates))):
            target = draw(st.integers(min_value=0, max_value=width - 1))
            rest = [w for w in range(width) if w != target]
            k = draw(st.integers(min_value=0, max_value=min(3, len(rest))))
            controls = draw(
                st.lists(st.sampled_from(rest), min_size=k, max_size=k, unique=True)
                if rest
                else st.just([])
            )
            gates.append(Gate(frozenset(controls), target))
        m = len(gates)
        marker = draw(st.one_of(st.none(), st.integers(min_value=0, max_value=m)))
        lo = draw(st.one_of(st.none(), st.integers(min_value=0, max_value=m)))
        bracket = None
        if lo is not None:
            hi = draw(st.integers(min_value=lo, max_value=m))
            bracket = (lo, hi)
        return Circuit(width, tuple(gates), marker, bracket)
