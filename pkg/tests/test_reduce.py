"""Identity elimination: the trivial pass, the full eliminator, the
hash-assisted variant, and the reduction reports."""

from __future__ import annotations

import random

import pytest

from revident import (
    Circuit,
    ReductionReport,
    Removal,
    WidthCapExceeded,
    eliminate_ntris,
    eliminate_ntris_fast,
    is_identity,
    is_irreducible,
    mct,
    parse_circuit,
    prefix_trace,
    remove_trivial_identities,
    simulate,
)
from revident.bench import surviving_indices

from helpers import random_circuit

GOLDEN = "wires: a b c\nCNOT(b, a) TOF(a, b, c) CNOT(c, b) CNOT(c, b) TOF(a, b, c)"

# a five-gate identity with no adjacent equal pair
BURIED = "wires: a b c d\nCNOT(d, c) TOF(b, c, a) TOF(b, d, a) CNOT(d, c) TOF(b, c, a)"

# three repetitions of an alternating two-gate identity block
ALTERNATING = (
    "wires: a b c d\n"
    "TOF4(a, c, d, b) TOF4(a, b, d, c) TOF4(a, c, d, b) "
    "TOF4(a, b, d, c) TOF4(a, c, d, b) TOF4(a, b, d, c)"
)


class TestTrivialPass:
    def test_adjacent_pair_cancels(self):
        c = parse_circuit("NOT(a) NOT(a)")
        out, report = remove_trivial_identities(c)
        assert out.gates == ()
        assert report.removals == (Removal(0, 2, 2, 2),)

    def test_cancellation_cascades(self):
        c = parse_circuit("wires: a b\nNOT(a) CNOT(a, b) CNOT(a, b) NOT(a)")
        out, report = remove_trivial_identities(c)
        assert out.gates == ()
        assert [(r.start_gap, r.end_index) for r in report.removals] == [(1, 3), (0, 2)]

    def test_golden_example_is_trivially_reducible(self):
        out, _ = remove_trivial_identities(parse_circuit(GOLDEN))
        assert out == parse_circuit("wires: a b c\nCNOT(b, a)")

    def test_buried_identity_is_invisible_to_trivial_pass(self):
        c = parse_circuit(BURIED)
        assert is_identity(c)
        out, report = remove_trivial_identities(c)
        assert out == c and report.removals == ()

    def test_no_adjacent_pairs_survive(self):
        rng = random.Random(50)
        for _ in range(200):
            c = random_circuit(rng, rng.randint(2, 5), rng.randint(0, 30))
            out, report = remove_trivial_identities(c)
            assert all(out.gates[i] != out.gates[i + 1] for i in range(len(out) - 1))
            assert report.input_spec == report.output_spec
            survivors = surviving_indices(len(c), report.removals)
            assert [c.gates[i] for i in survivors] == list(out.gates)

    def test_works_above_width_cap_without_specs(self):
        c = Circuit(20, (mct({0}, 19), mct({0}, 19)))
        out, report = remove_trivial_identities(c)
        assert out.gates == ()
        assert report.input_spec is None and report.output_spec is None


class TestEliminate:
    def test_golden_example(self):
        out, report = eliminate_ntris(parse_circuit(GOLDEN))
        assert out == parse_circuit("wires: a b c\nCNOT(b, a)")
        assert [(r.start_gap, r.end_index) for r in report.removals] == [(2, 4), (1, 3)]
        assert report.passes == 3

    def test_buried_identity_removed_whole(self):
        out, report = eliminate_ntris(parse_circuit(BURIED))
        assert out.gates == ()
        assert report.removals == (Removal(0, 5, 5, 17),)

    def test_alternating_identity_removed_whole(self):
        # the alternating pair has order 3, so no proper prefix repeats
        # and the six gates disappear in a single removal
        out, report = eliminate_ntris(parse_circuit(ALTERNATING))
        assert out.gates == ()
        assert [(r.start_gap, r.end_index) for r in report.removals] == [(0, 6)]

    def test_scan_takes_smallest_end_index_then_smallest_start(self):
        # NOT(a) NOT(a) twice: the first pass must remove gates 1..2, not 1..4
        c = parse_circuit("NOT(a) NOT(a) NOT(a) NOT(a)")
        out, report = eliminate_ntris(c)
        assert out.gates == ()
        assert [(r.start_gap, r.end_index) for r in report.removals] == [(0, 2), (0, 2)]
        assert report.passes == 3

    def test_identity_prefix_removed_from_gap_zero(self):
        c = parse_circuit("wires: a b\nCNOT(a, b) CNOT(a, b) NOT(a)")
        out, report = eliminate_ntris(c)
        assert out == parse_circuit("wires: a b\nNOT(a)")
        assert report.removals == (Removal(0, 2, 2, 2),)

    def test_empty_input(self):
        out, report = eliminate_ntris(Circuit.empty(4))
        assert out.gates == () and report.passes == 1 and report.removals == ()

    def test_width_cap(self):
        with pytest.raises(WidthCapExceeded):
            eliminate_ntris(Circuit(17, (mct((), 16),)))

    def test_properties_on_random_circuits(self):
        rng = random.Random(2024)
        for _ in range(150):
            c = random_circuit(rng, rng.randint(2, 5), rng.randint(0, 40))
            out, report = eliminate_ntris(c)
            assert report.input_spec == simulate(c)
            assert report.output_spec == simulate(out)
            assert report.input_spec == report.output_spec
            assert is_irreducible(out)
            assert len(out) <= len(c)
            again, again_report = eliminate_ntris(out)
            assert again == out and again_report.removals == ()
            # replaying the removal list reproduces the output
            survivors = surviving_indices(len(c), report.removals)
            assert [c.gates[i] for i in survivors] == list(out.gates)

    def test_output_has_no_adjacent_pairs_either(self):
        rng = random.Random(9)
        for _ in range(60):
            c = random_circuit(rng, 4, 30)
            out, _ = eliminate_ntris(c)
            trimmed, report = remove_trivial_identities(out)
            assert trimmed == out and report.removals == ()


class TestFastVariant:
    def test_identical_on_random_circuits(self):
        rng = random.Random(31337)
        for _ in range(150):
            c = random_circuit(rng, rng.randint(2, 5), rng.randint(0, 40))
            slow_out, slow_rep = eliminate_ntris(c)
            fast_out, fast_rep = eliminate_ntris_fast(c)
            assert fast_out == slow_out
            assert fast_rep.removals == slow_rep.removals
            assert fast_rep.passes == slow_rep.passes
            assert fast_rep == slow_rep  # comparisons field is excluded from equality

    def test_identical_on_handmade_cases(self):
        for text in (GOLDEN, BURIED, ALTERNATING, "NOT(a) NOT(a) NOT(a) NOT(a)"):
            c = parse_circuit(text)
            assert eliminate_ntris_fast(c)[0] == eliminate_ntris(c)[0]

    def test_comparison_counter_differs_but_equality_holds(self):
        c = parse_circuit(ALTERNATING)
        _, slow = eliminate_ntris(c)
        _, fast = eliminate_ntris_fast(c)
        assert slow == fast
        assert slow.comparisons >= fast.comparisons


class TestReport:
    def test_report_dict_shape(self):
        _, report = eliminate_ntris(parse_circuit(GOLDEN))
        d = report.to_dict()
        assert d["passes"] == 3
        assert d["input_gates"] == 5 and d["output_gates"] == 1
        assert d["removals"][0] == {"start_gap": 2, "end_index": 4, "gate_count": 2, "cost": 2}
        assert d["input_spec"] == list(simulate(parse_circuit(GOLDEN)))
        assert d["input_cost"] == 1 + 5 + 1 + 1 + 5 and d["output_cost"] == 1
        assert report.gates_removed == 4

    def test_costs_none_when_table_lacks_entries(self):
        wide = mct({0, 1, 2, 3}, 4)
        c = Circuit(5, (wide, wide))
        out, report = eliminate_ntris(c)
        assert out.gates == ()
        assert report.input_cost is None and report.removals[0].cost is None
        assert report.output_cost == 0

    def test_removal_validation(self):
        with pytest.raises(ValueError):
            Removal(2, 2, 0, None)
        with pytest.raises(ValueError):
            Removal(0, 2, 3, None)


class TestIrreducible:
    def test_known_values(self):
        assert is_irreducible(parse_circuit("NOT(a) CNOT(a, b)"))
        assert not is_irreducible(parse_circuit(BURIED))
        assert not is_irreducible(parse_circuit("NOT(a) NOT(a)"))
        assert is_irreducible(Circuit.empty(2))

    def test_matches_prefix_trace_definition(self):
        rng = random.Random(8)
        for _ in range(50):
            c = random_circuit(rng, 4, 12)
            trace = prefix_trace(c)
            assert is_irreducible(c) == (len(set(trace)) == len(trace))
