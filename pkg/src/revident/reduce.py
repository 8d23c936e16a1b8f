"""Identity elimination for reversible circuits.

A gate subsequence whose gates multiply to the identity contributes
nothing to the circuit's specification and can be deleted.  Two reducers
share one removal discipline:

* ``remove_trivial_identities`` deletes adjacent identical gate pairs
  (every MCT gate is self-inverse), re-checking around each deletion
  until no adjacent pair remains.
* ``eliminate_ntris`` deletes every identity segment, adjacent or not.
  It walks the prefix specifications: if the prefixes ending at gates
  ``j`` and ``i`` compute the same specification, gates ``j+1..i``
  (1-based, inclusive) form an identity segment and are removed.  The
  scan is deterministic: the end index grows 1..m, the start index is
  tried ascending 0..end-1, the first hit is deleted, and the whole scan
  restarts on the shortened circuit.  Prefix specifications are computed
  lazily, so a pass stops work at its first hit.
* ``eliminate_ntris_fast`` replaces the linear start-index scan with a
  hash map from prefix specification to its earliest index.  Within one
  pass all stored prefixes are distinct until the first hit, so the map
  lookup finds exactly the pair the ascending scan would; the output
  circuit and removal list are identical on every input.

Removal coordinates are local to the circuit as it stood when the
removal happened: ``start_gap`` counts the gates kept in front and
``end_index`` is the 1-based index of the last deleted gate, so the
deleted 0-based slice is ``[start_gap, end_index)``.  Replaying the
removals in order against the input gate list therefore reproduces the
output gate list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .circuit import Circuit, Gate
from .cost import DEFAULT_COST_TABLE, CostTableError, gate_cost
from .semantics import (
    DEFAULT_WIDTH_CAP,
    Specification,
    _check_width,
    apply_gate,
    identity_spec,
    prefix_trace,
    simulate,
)

__all__ = [
    "Removal",
    "ReductionReport",
    "remove_trivial_identities",
    "eliminate_ntris",
    "eliminate_ntris_fast",
    "is_irreducible",
]


@dataclass(frozen=True)
class Removal:
    """One deleted identity segment, in coordinates of the circuit at
    removal time: the deleted 0-based slice is [start_gap, end_index)."""

    start_gap: int
    end_index: int
    gate_count: int
    cost: int | None

    def __post_init__(self) -> None:
        if not 0 <= self.start_gap < self.end_index:
            raise ValueError("empty or negative removal span")
        if self.gate_count != self.end_index - self.start_gap:
            raise ValueError("gate_count does not match the span")


@dataclass(frozen=True)
class ReductionReport:
    """What a reduction did.  ``passes`` counts restarts of the outer
    scan, including the final pass that found nothing.  Cost and
    specification fields are None when the cost table has no entry for
    some gate or the width exceeds the cap.  ``comparisons`` counts
    specification equality tests and is informational only: it differs
    between the faithful and fast variants and never takes part in
    equality."""

    passes: int
    removals: tuple[Removal, ...]
    input_gates: int
    output_gates: int
    input_cost: int | None
    output_cost: int | None
    input_spec: Specification | None
    output_spec: Specification | None
    comparisons: int = field(default=0, compare=False)

    @property
    def gates_removed(self) -> int:
        return self.input_gates - self.output_gates

    def to_dict(self) -> dict:
        return {
            "passes": self.passes,
            "removals": [
                {
                    "start_gap": r.start_gap,
                    "end_index": r.end_index,
                    "gate_count": r.gate_count,
                    "cost": r.cost,
                }
                for r in self.removals
            ],
            "input_gates": self.input_gates,
            "output_gates": self.output_gates,
            "input_cost": self.input_cost,
            "output_cost": self.output_cost,
            "input_spec": None if self.input_spec is None else list(self.input_spec),
            "output_spec": None if self.output_spec is None else list(self.output_spec),
            "comparisons": self.comparisons,
        }


def _maybe_cost(gates: "list[Gate] | tuple[Gate, ...]", table: Mapping[int, int]) -> int | None:
    try:
        return sum(gate_cost(g, table) for g in gates)
    except CostTableError:
        return None


def _report(
    c: Circuit,
    out_gates: list[Gate],
    passes: int,
    removals: list[Removal],
    comparisons: int,
    table: Mapping[int, int],
    in_spec: Specification | None,
    out_spec: Specification | None,
) -> tuple[Circuit, ReductionReport]:
    out = Circuit(c.width, tuple(out_gates))
    report = ReductionReport(
        passes=passes,
        removals=tuple(removals),
        input_gates=len(c.gates),
        output_gates=len(out_gates),
        input_cost=_maybe_cost(c.gates, table),
        output_cost=_maybe_cost(out_gates, table),
        input_spec=in_spec,
        output_spec=out_spec,
        comparisons=comparisons,
    )
    return out, report


def remove_trivial_identities(
    c: Circuit,
    table: Mapping[int, int] = DEFAULT_COST_TABLE,
    *,
    max_width: int = DEFAULT_WIDTH_CAP,
) -> tuple[Circuit, ReductionReport]:
    """Cancel adjacent identical gate pairs until none remain.

    Deleting a pair can make its neighbours adjacent; the stack scan
    handles that in one linear sweep, and the result does not depend on
    deletion order.  Specifications are filled in only when the width
    fits the cap: this pass itself never simulates.
    """
    stack: list[Gate] = []
    removals: list[Removal] = []
    comparisons = 0
    for g in c.gates:
        if stack:
            comparisons += 1
        if stack and stack[-1] == g:
            j = len(stack) - 1
            removals.append(Removal(j, j + 2, 2, _maybe_cost([g, g], table)))
            stack.pop()
        else:
            stack.append(g)
    if c.width <= max_width:
        in_spec: Specification | None = simulate(c, max_width=max_width)
        out_spec: Specification | None = simulate(
            Circuit(c.width, tuple(stack)), max_width=max_width
        )
    else:
        in_spec = out_spec = None
    return _report(c, stack, 1, removals, comparisons, table, in_spec, out_spec)


# One elimination pass: return the first (start_gap, end_index) whose
# prefix specifications match, or None.  Both variants compute prefixes
# lazily and stop at the first hit.

def _scan_linear(gates: list[Gate], width: int, counter: list[int]) -> tuple[int, int] | None:
    spec = identity_spec(width)
    prefixes = [spec]
    for i, g in enumerate(gates, start=1):
        spec = apply_gate(spec, g, width)
        for j, earlier in enumerate(prefixes):
            counter[0] += 1
            if earlier == spec:
                return j, i
        prefixes.append(spec)
    return None


def _scan_hashed(gates: list[Gate], width: int, counter: list[int]) -> tuple[int, int] | None:
    spec = identity_spec(width)
    earliest: dict[Specification, int] = {spec: 0}
    for i, g in enumerate(gates, start=1):
        spec = apply_gate(spec, g, width)
        counter[0] += 1
        j = earliest.get(spec)
        if j is not None:
            return j, i
        earliest[spec] = i
    return None


def _eliminate(
    c: Circuit,
    table: Mapping[int, int],
    max_width: int,
    scan: Callable[[list[Gate], int, list[int]], "tuple[int, int] | None"],
) -> tuple[Circuit, ReductionReport]:
    _check_width(c.width, max_width)
    gates = list(c.gates)
    removals: list[Removal] = []
    counter = [0]
    passes = 0
    while True:
        passes += 1
        hit = scan(gates, c.width, counter)
        if hit is None:
            break
        j, i = hit
        removals.append(Removal(j, i, i - j, _maybe_cost(gates[j:i], table)))
        del gates[j:i]
    in_spec = simulate(c, max_width=max_width)
    out_spec = simulate(Circuit(c.width, tuple(gates)), max_width=max_width)
    return _report(c, gates, passes, removals, counter[0], table, in_spec, out_spec)


def eliminate_ntris(
    c: Circuit,
    table: Mapping[int, int] = DEFAULT_COST_TABLE,
    *,
    max_width: int = DEFAULT_WIDTH_CAP,
) -> tuple[Circuit, ReductionReport]:
    """Remove every identity segment, restarting after each removal.

    The output computes the same specification as the input and is
    irreducible: no two of its prefix specifications are equal.  Runs in
    O(m**2) passes of O(m**2) specification comparisons worst case; each
    comparison is O(2**width)."""
    return _eliminate(c, table, max_width, _scan_linear)


def eliminate_ntris_fast(
    c: Circuit,
    table: Mapping[int, int] = DEFAULT_COST_TABLE,
    *,
    max_width: int = DEFAULT_WIDTH_CAP,
) -> tuple[Circuit, ReductionReport]:
    """Same result as ``eliminate_ntris`` (same circuit, same removal
    list, same pass count), with each pass running in O(m) expected
    specification hashes instead of O(m**2) comparisons."""
    return _eliminate(c, table, max_width, _scan_hashed)


def is_irreducible(c: Circuit, *, max_width: int = DEFAULT_WIDTH_CAP) -> bool:
    """True when no two prefix specifications coincide, i.e. the
    eliminators would leave ``c`` unchanged."""
    seen: set[Specification] = set()
    for spec in prefix_trace(c, max_width=max_width):
        if spec in seen:
            return False
        seen.add(spec)
    return True
