"""Multi-control Toffoli gates and the circuits built from them.

Values are immutable; every edit operation returns a new ``Circuit``.

Text format
-----------
A circuit is a stream of whitespace-separated tokens::

    wires: a b c d
    NOT(a) CNOT(c, a) # TOF(a, b, d) [ CNOT(a, d) CNOT(a, d) ]

* ``NOT``, ``CNOT``, ``TOF`` and ``TOF4`` take exactly 1, 2, 3 and 4
  wire arguments.  The last argument is always the target; the rest are
  controls.  Gates with more than three controls use the general form
  ``MCT(c1, ..., ck; t)``.
* Wires are single letters ``a``..``z``.  An optional ``wires:`` header
  (one line, before any gate) fixes the wire order and the width;
  without it wires are numbered in order of first appearance.
* ``#`` marks at most one insertion point, a gap between gates.
* At most one ``[`` ... ``]`` pair brackets a span of gates.
* ``//`` starts a comment running to the end of the line.  Newlines and
  stray ``;`` are insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

__all__ = [
    "Gate",
    "Circuit",
    "ParseError",
    "WidthMismatchError",
    "mct",
    "parse_circuit",
    "format_gate",
    "format_circuit",
    "concat",
    "insert_segment",
    "inverse",
]


class ParseError(ValueError):
    """Raised when circuit text does not follow the format above."""


class WidthMismatchError(ValueError):
    """Raised when an operation combines circuits of different widths."""


@dataclass(frozen=True)
class Gate:
    """One multi-control Toffoli gate: flip ``target`` iff all controls are 1."""

    controls: frozenset[int]
    target: int

    def __post_init__(self) -> None:
        controls = frozenset(self.controls)
        object.__setattr__(self, "controls", controls)
        if self.target < 0 or any(c < 0 for c in controls):
            raise ValueError("wire indices must be non-negative")
        if self.target in controls:
            raise ValueError(f"target wire {self.target} is also a control")

    @property
    def wires(self) -> frozenset[int]:
        return self.controls | {self.target}


def mct(controls: "frozenset[int] | set[int] | tuple[int, ...] | list[int]", target: int) -> Gate:
    """Build a Gate from any iterable of control wires plus a target."""
    return Gate(frozenset(controls), target)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``width`` wires.

    ``insertion_point`` and ``bracket`` are optional annotations carried
    by the text format (the ``#`` marker and the ``[`` ``]`` span).  They
    never take part in equality: two circuits are equal when they have
    the same width and the same gates.
    """

    width: int
    gates: tuple[Gate, ...]
    insertion_point: int | None = field(default=None, compare=False)
    bracket: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise ValueError("width must be at least 1")
        for g in self.gates:
            if any(w >= self.width for w in g.wires):
                raise ValueError(f"gate {g} uses a wire outside width {self.width}")
        m = len(self.gates)
        if self.insertion_point is not None and not 0 <= self.insertion_point <= m:
            raise ValueError(f"insertion point {self.insertion_point} outside 0..{m}")
        if self.bracket is not None:
            lo, hi = self.bracket
            if not 0 <= lo <= hi <= m:
                raise ValueError(f"bracket {self.bracket} outside 0..{m}")

    @classmethod
    def empty(cls, width: int) -> Circuit:
        return cls(width, ())

    def __len__(self) -> int:
        return len(self.gates)


# parsing ------------------------------------------------------------------

_ARITY = {"NOT": 1, "CNOT": 2, "TOF": 3, "TOF4": 4}

_WS_RE = re.compile(r"[\s;]+")
_HEADER_RE = re.compile(r"wires\s*:([^\n]*)")
_GATE_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*)\s*\(([^()]*)\)")
_WIRE_RE = re.compile(r"[a-z]\Z")


def parse_circuit(text: str) -> Circuit:
    """Parse circuit text.  Raises ParseError on any malformed input.

    Without a ``wires:`` header, width is the number of distinct wire
    letters and wires are numbered in order of first appearance; empty
    text parses as an empty one-wire circuit.
    """
    text = re.sub(r"//[^\n]*", "", text)
    order: list[str] = []
    declared = False
    gates: list[Gate] = []
    insertion: int | None = None
    bracket_start: int | None = None
    bracket_end: int | None = None

    def wire_index(name: str, pos: int) -> int:
        if not _WIRE_RE.match(name):
            raise ParseError(f"bad wire name {name!r} at position {pos}")
        if name not in order:
            if declared:
                raise ParseError(f"wire {name!r} at position {pos} not in wires: header")
            order.append(name)
        return order.index(name)

    pos = 0
    n = len(text)
    while pos < n:
        m = _WS_RE.match(text, pos)
        if m:
            pos = m.end()
            continue
        m = _HEADER_RE.match(text, pos)
        if m:
            if declared:
                raise ParseError(f"second wires: header at position {pos}")
            if gates or insertion is not None or bracket_start is not None:
                raise ParseError(f"wires: header at position {pos} must precede all gates")
            for name in re.split(r"[\s,]+", m.group(1).strip()):
                if not name:
                    continue
                if not _WIRE_RE.match(name):
                    raise ParseError(f"bad wire name {name!r} in wires: header")
                if name in order:
                    raise ParseError(f"repeated wire {name!r} in wires: header")
                order.append(name)
            if not order:
                raise ParseError("empty wires: header")
            declared = True
            pos = m.end()
            continue
        m = _GATE_RE.match(text, pos)
        if m:
            name, body = m.group(1), m.group(2)
            if name not in _ARITY and name != "MCT":
                raise ParseError(f"unknown gate name {name!r} at position {pos}")
            args = [a.strip() for a in re.split(r"[,;]", body)]
            if args == [""]:
                args = []
            if name in _ARITY and len(args) != _ARITY[name]:
                raise ParseError(
                    f"{name} takes {_ARITY[name]} wires, got {len(args)} at position {pos}"
                )
            if name == "MCT" and not args:
                raise ParseError(f"MCT needs at least a target at position {pos}")
            idx = [wire_index(a, pos) for a in args]
            if len(set(idx)) != len(idx):
                raise ParseError(f"repeated wire in gate at position {pos}")
            gates.append(Gate(frozenset(idx[:-1]), idx[-1]))
            pos = m.end()
            continue
        ch = text[pos]
        if ch == "#":
            if insertion is not None:
                raise ParseError(f"second insertion marker at position {pos}")
            insertion = len(gates)
        elif ch == "[":
            if bracket_start is not None:
                raise ParseError(f"second bracket at position {pos}")
            bracket_start = len(gates)
        elif ch == "]":
            if bracket_start is None or bracket_end is not None:
                raise ParseError(f"unbalanced ] at position {pos}")
            bracket_end = len(gates)
        else:
            raise ParseError(f"unexpected character {ch!r} at position {pos}")
        pos += 1

    if bracket_start is not None and bracket_end is None:
        raise ParseError("unbalanced [: bracket never closed")
    width = max(len(order), 1)
    bracket = None if bracket_start is None else (bracket_start, bracket_end)
    return Circuit(width, tuple(gates), insertion, bracket)


# formatting ---------------------------------------------------------------

def _wire_names(width: int) -> list[str]:
    if width > 26:
        raise ValueError("text format supports at most 26 wires")
    return [chr(ord("a") + i) for i in range(width)]


def format_gate(g: Gate, width: int) -> str:
    """Render one gate token; controls are printed in wire order."""
    names = _wire_names(width)
    args = [names[c] for c in sorted(g.controls)]
    if len(g.controls) <= 3:
        name = ("NOT", "CNOT", "TOF", "TOF4")[len(g.controls)]
        return f"{name}({', '.join(args + [names[g.target]])})"
    return f"MCT({', '.join(args)}; {names[g.target]})"


def format_circuit(c: Circuit) -> str:
    """Render a circuit so that ``parse_circuit(format_circuit(c)) == c``.

    A ``wires:`` header is emitted only when the gate tokens alone would
    not reproduce the width and wire order on re-parse.
    """
    names = _wire_names(c.width)
    tokens: list[str] = []
    seen: list[int] = []
    m = len(c.gates)
    for gap in range(m + 1):
        if c.bracket is not None and c.bracket[1] == gap and c.bracket[0] != gap:
            tokens.append("]")
        if c.insertion_point == gap:
            tokens.append("#")
        if c.bracket is not None and c.bracket[0] == gap:
            tokens.append("[")
            if c.bracket[1] == gap:
                tokens.append("]")
        if gap < m:
            g = c.gates[gap]
            for w in sorted(g.controls) + [g.target]:
                if w not in seen:
                    seen.append(w)
            tokens.append(format_gate(g, c.width))
    body = " ".join(tokens)
    if seen == list(range(c.width)) or (c.width == 1 and not seen):
        return body
    header = f"wires: {' '.join(names)}"
    return f"{header}\n{body}" if body else header


# editing ------------------------------------------------------------------

def concat(front: Circuit, rear: Circuit) -> Circuit:
    """Join two circuits of equal width; annotations are dropped."""
    if front.width != rear.width:
        raise WidthMismatchError(f"widths differ: {front.width} vs {rear.width}")
    return Circuit(front.width, front.gates + rear.gates)


def insert_segment(host: Circuit, segment: Circuit, point: int) -> Circuit:
    """Splice ``segment`` into ``host`` at gate gap ``point``.

    ``point`` counts the host gates kept in front (0 = before the first
    gate).  Annotations are dropped from the result.
    """
    if host.width != segment.width:
        raise WidthMismatchError(f"widths differ: {host.width} vs {segment.width}")
    if not 0 <= point <= len(host.gates):
        raise IndexError(f"insertion point {point} outside 0..{len(host.gates)}")
    return Circuit(host.width, host.gates[:point] + segment.gates + host.gates[point:])


def inverse(c: Circuit) -> Circuit:
    """Reverse the gate order.  Every MCT gate is self-inverse, so the
    result computes the inverse permutation.  Annotations are dropped."""
    return Circuit(c.width, tuple(reversed(c.gates)))
