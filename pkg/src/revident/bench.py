"""Benchmark suites over the bundled corpus.

Suite 1 (bugged-benchmark recovery): each row splices an identity
segment into a known-good benchmark circuit at its ``#`` marker, runs
the eliminator, and checks that the benchmark comes back gate for gate.

Suite 2 (buried-identity discovery): each row is a random circuit whose
``[`` ``]`` bracket marks an identity segment.  The row checks the
circuit computes its recorded specification, that the bracketed span is
an identity, and that elimination removes that whole span while
preserving the specification.

Every row also carries the (gates, cost) figures published with the
corpus.  Where recomputation disagrees with a published figure, the row
reports a discrepancy entry; published figures are never silently
reconciled with computed ones, and a cost discrepancy alone does not
fail a row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .circuit import Circuit, insert_segment
from .corpus import load_corpus_circuit
from .cost import circuit_cost, gate_count
from .reduce import Removal, eliminate_ntris
from .semantics import Specification, is_identity, simulate

__all__ = [
    "Table1Row",
    "Table2Row",
    "Table1Result",
    "Table2Result",
    "BenchReport",
    "TABLE1_ROWS",
    "TABLE2_ROWS",
    "run_table1",
    "run_table2",
    "surviving_indices",
    "render_report",
]

GC = tuple[int, int]


@dataclass(frozen=True)
class Table1Row:
    """One recovery benchmark: ids of the host and segment corpus
    circuits plus the published figures for the row."""

    benchmark: str
    host_id: str
    segment_id: str
    printed_insertion_point: int
    printed_optimal: GC
    printed_bugged: GC
    printed_optimized: GC


@dataclass(frozen=True)
class Table2Row:
    circuit_id: str
    specification: Specification
    bracket: tuple[int, int]
    printed_original: GC
    printed_tool: GC
    printed_hybrid: GC


TABLE1_ROWS: tuple[Table1Row, ...] = (
    Table1Row("4_49", "app1_1a", "app1_1b", 6, (12, 32), (19, 61), (19, 61)),
    Table1Row("4bit-7-8", "app1_2a", "app1_2b", 5, (7, 19), (14, 40), (12, 34)),
    Table1Row("decode42", "app1_3a", "app1_3b", 4, (10, 30), (16, 52), (15, 51)),
    Table1Row("hwb4", "app1_4a", "app1_4b", 7, (11, 39), (16, 64), (16, 62)),
    Table1Row("imark", "app1_5a", "app1_5b", 5, (7, 19), (17, 43), (11, 37)),
    Table1Row("mperk", "app1_6a", "app1_6b", 4, (9, 15), (22, 52), (22, 52)),
    Table1Row("oc5", "app1_7a", "app1_7b", 2, (11, 39), (23, 65), (16, 52)),
    Table1Row("oc6", "app1_8a", "app1_8b", 11, (12, 60), (20, 74), (20, 74)),
    Table1Row("oc7", "app1_9a", "app1_9b", 13, (13, 41), (29, 219), (28, 207)),
    Table1Row("oc8", "app1_10a", "app1_10b", 9, (11, 47), (25, 197), (15, 79)),
    Table1Row("primes4", "app1_11a", "app1_11b", 4, (10, 42), (18, 98), (13, 77)),
    Table1Row("rd32", "app1_12a", "app1_12b", 3, (4, 8), (10, 54), (8, 46)),
    Table1Row("shift4", "app1_13a", "app1_13b", 4, (4, 18), (20, 146), (13, 101)),
)

TABLE2_ROWS: tuple[Table2Row, ...] = (
    Table2Row(
        "app2_1",
        (12, 7, 2, 5, 0, 15, 14, 11, 6, 3, 10, 1, 8, 9, 4, 13),
        (4, 14), (21, 113), (17, 103), (10, 30),
    ),
    Table2Row(
        "app2_2",
        (7, 14, 9, 6, 11, 0, 13, 2, 5, 15, 10, 12, 1, 4, 3, 8),
        (6, 18), (30, 210), (30, 204), (18, 102),
    ),
    Table2Row(
        "app2_3",
        (10, 15, 0, 7, 14, 9, 6, 1, 13, 12, 5, 3, 11, 8, 4, 2),
        (5, 16), (23, 103), (23, 101), (13, 43),
    ),
    Table2Row(
        "app2_4",
        (12, 9, 11, 14, 6, 7, 8, 10, 2, 3, 4, 5, 15, 13, 0, 1),
        (4, 13), (22, 90), (22, 90), (9, 36),
    ),
    Table2Row(
        "app2_5",
        (0, 1, 15, 8, 4, 5, 9, 14, 11, 12, 7, 6, 3, 13, 10, 2),
        (4, 17), (23, 137), (19, 105), (10, 50),
    ),
    Table2Row(
        "app2_6",
        (3, 0, 1, 6, 7, 2, 5, 4, 11, 8, 9, 14, 15, 10, 13, 12),
        (4, 18), (25, 133), (19, 99), (6, 14),
    ),
    Table2Row(
        "app2_7",
        (6, 11, 5, 4, 2, 0, 1, 15, 14, 3, 12, 8, 7, 9, 13, 10),
        (11, 17), (21, 137), (20, 132), (15, 59),
    ),
    Table2Row(
        "app2_8",
        (12, 15, 5, 8, 3, 2, 1, 10, 7, 14, 13, 6, 11, 0, 9, 4),
        (3, 11), (23, 125), (23, 125), (15, 53),
    ),
    Table2Row(
        "app2_9",
        (0, 1, 6, 5, 7, 8, 15, 2, 14, 13, 12, 3, 11, 4, 9, 10),
        (9, 14), (17, 65), (16, 64), (11, 47),
    ),
    Table2Row(
        "app2_10",
        (0, 10, 2, 15, 8, 9, 4, 1, 6, 5, 14, 3, 12, 13, 11, 7),
        (10, 15), (20, 80), (19, 75), (13, 57),
    ),
    Table2Row(
        "app2_11",
        (8, 9, 10, 2, 4, 7, 6, 5, 0, 15, 13, 3, 12, 14, 1, 11),
        (7, 14), (21, 93), (21, 93), (12, 80),
    ),
    Table2Row(
        "app2_12",
        (6, 15, 0, 1, 9, 2, 7, 4, 11, 10, 5, 12, 3, 14, 13, 8),
        (5, 17), (29, 73), (29, 73), (17, 53),
    ),
    Table2Row(
        "app2_13",
        (9, 3, 10, 11, 12, 13, 1, 7, 0, 8, 14, 2, 15, 4, 5, 6),
        (9, 16), (25, 81), (17, 69), (12, 52),
    ),
)


def surviving_indices(gate_total: int, removals: tuple[Removal, ...]) -> list[int]:
    """Original gate indices left after replaying a removal list.
    Removal coordinates are local to the circuit at removal time, so a
    sequential replay reproduces the eliminator's deletions exactly."""
    idx = list(range(gate_total))
    for r in removals:
        del idx[r.start_gap : r.end_index]
    return idx


@dataclass(frozen=True)
class Table1Result:
    benchmark: str
    recovered: bool
    marker_gap: int
    printed_insertion_point: int
    computed_optimal: GC
    printed_optimal: GC
    computed_bugged: GC
    printed_bugged: GC
    discrepancies: tuple[str, ...]
    status: str


@dataclass(frozen=True)
class Table2Result:
    circuit_id: str
    spec_matches: bool
    bracket: tuple[int, int]
    bracket_is_identity: bool
    bracket_removed: bool
    spec_preserved: bool
    computed_original: GC
    printed_original: GC
    computed_reduced: GC
    printed_hybrid: GC
    discrepancies: tuple[str, ...]
    status: str


@dataclass(frozen=True)
class BenchReport:
    suite: str
    rows: "tuple[Table1Result, ...] | tuple[Table2Result, ...]"

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows)

    def to_dict(self) -> dict:
        rows = []
        for r in self.rows:
            if isinstance(r, Table1Result):
                rows.append(
                    {
                        "row": r.benchmark,
                        "computed_g": r.computed_optimal[0],
                        "computed_c": r.computed_optimal[1],
                        "printed_g": r.printed_optimal[0],
                        "printed_c": r.printed_optimal[1],
                        "status": r.status,
                        "recovered": r.recovered,
                        "computed_bugged": list(r.computed_bugged),
                        "printed_bugged": list(r.printed_bugged),
                        "discrepancies": list(r.discrepancies),
                    }
                )
            else:
                rows.append(
                    {
                        "row": r.circuit_id,
                        "computed_g": r.computed_original[0],
                        "computed_c": r.computed_original[1],
                        "printed_g": r.printed_original[0],
                        "printed_c": r.printed_original[1],
                        "status": r.status,
                        "spec_matches": r.spec_matches,
                        "bracket": list(r.bracket),
                        "bracket_removed": r.bracket_removed,
                        "computed_reduced": list(r.computed_reduced),
                        "printed_hybrid": list(r.printed_hybrid),
                        "discrepancies": list(r.discrepancies),
                    }
                )
        return {"suite": self.suite, "passed": self.passed, "rows": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _gc(c: Circuit) -> GC:
    return gate_count(c), circuit_cost(c)


def run_table1(rows: tuple[Table1Row, ...] = TABLE1_ROWS) -> BenchReport:
    results = []
    for row in rows:
        host = load_corpus_circuit(row.host_id)
        segment = load_corpus_circuit(row.segment_id)
        if host.insertion_point is None:
            raise ValueError(f"{row.host_id} has no # marker")
        gap = host.insertion_point
        bugged = insert_segment(host, segment, gap)
        reduced, _report = eliminate_ntris(bugged)
        recovered = reduced == host
        computed_optimal = _gc(host)
        computed_bugged = _gc(bugged)
        notes = []
        if row.printed_insertion_point != gap + 1:
            notes.append(
                f"insertion column {row.printed_insertion_point} vs marker gap {gap}"
            )
        if computed_optimal != row.printed_optimal:
            notes.append(
                f"optimal printed {row.printed_optimal} computed {computed_optimal}"
            )
        if computed_bugged != row.printed_bugged:
            notes.append(
                f"bugged printed {row.printed_bugged} computed {computed_bugged}"
            )
        ok = recovered and _gc(reduced)[0] == row.printed_optimal[0]
        results.append(
            Table1Result(
                benchmark=row.benchmark,
                recovered=recovered,
                marker_gap=gap,
                printed_insertion_point=row.printed_insertion_point,
                computed_optimal=computed_optimal,
                printed_optimal=row.printed_optimal,
                computed_bugged=computed_bugged,
                printed_bugged=row.printed_bugged,
                discrepancies=tuple(notes),
                status="pass" if ok else "fail",
            )
        )
    return BenchReport("table1", tuple(results))


def run_table2(rows: tuple[Table2Row, ...] = TABLE2_ROWS) -> BenchReport:
    results = []
    for row in rows:
        c = load_corpus_circuit(row.circuit_id)
        if c.bracket is None:
            raise ValueError(f"{row.circuit_id} has no bracket")
        lo, hi = c.bracket
        notes = []
        if (lo, hi) != row.bracket:
            notes.append(f"bracket parsed {(lo, hi)} vs recorded {row.bracket}")
        spec_matches = simulate(c) == row.specification
        segment = Circuit(c.width, c.gates[lo:hi])
        bracket_is_identity = is_identity(segment)
        reduced, report = eliminate_ntris(c)
        survivors = surviving_indices(len(c.gates), report.removals)
        bracket_removed = all(i not in range(lo, hi) for i in survivors)
        spec_preserved = report.input_spec == report.output_spec
        computed_original = _gc(c)
        computed_reduced = _gc(reduced)
        if computed_original != row.printed_original:
            notes.append(
                f"original printed {row.printed_original} computed {computed_original}"
            )
        if (
            computed_reduced[0] == row.printed_hybrid[0]
            and computed_reduced[1] != row.printed_hybrid[1]
        ):
            notes.append(
                f"reduced cost printed {row.printed_hybrid[1]} computed {computed_reduced[1]}"
            )
        ok = (
            spec_matches
            and bracket_is_identity
            and bracket_removed
            and spec_preserved
            and computed_original[0] == row.printed_original[0]
        )
        results.append(
            Table2Result(
                circuit_id=row.circuit_id,
                spec_matches=spec_matches,
                bracket=(lo, hi),
                bracket_is_identity=bracket_is_identity,
                bracket_removed=bracket_removed,
                spec_preserved=spec_preserved,
                computed_original=computed_original,
                printed_original=row.printed_original,
                computed_reduced=computed_reduced,
                printed_hybrid=row.printed_hybrid,
                discrepancies=tuple(notes),
                status="pass" if ok else "fail",
            )
        )
    return BenchReport("table2", tuple(results))


def render_report(report: BenchReport) -> str:
    """Fixed-width human-readable rendering, deterministic per corpus."""
    lines = []
    if report.suite == "table1":
        lines.append("suite 1: bugged-benchmark recovery")
        header = f"{'row':<10}{'recovered':<11}{'computed(g,c)':<15}{'printed(g,c)':<14}status"
        lines.append(header)
        for r in report.rows:
            lines.append(
                f"{r.benchmark:<10}{('yes' if r.recovered else 'NO'):<11}"
                f"{str(r.computed_optimal):<15}{str(r.printed_optimal):<14}{r.status}"
            )
    else:
        lines.append("suite 2: buried-identity discovery")
        header = (
            f"{'row':<10}{'spec':<6}{'bracket':<10}{'removed':<9}"
            f"{'computed(g,c)':<15}{'printed(g,c)':<14}status"
        )
        lines.append(header)
        for r in report.rows:
            lines.append(
                f"{r.circuit_id:<10}{('ok' if r.spec_matches else 'NO'):<6}"
                f"{str(list(r.bracket)):<10}{('yes' if r.bracket_removed else 'NO'):<9}"
                f"{str(r.computed_original):<15}{str(r.printed_original):<14}{r.status}"
            )
    notes = [f"  {r.benchmark if isinstance(r, Table1Result) else r.circuit_id}: {d}"
             for r in report.rows for d in r.discrepancies]
    if notes:
        lines.append("known discrepancies (printed figures kept as printed):")
        lines.extend(notes)
    lines.append(f"result: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines)
