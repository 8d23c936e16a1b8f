"""Seeded generators: random circuits and synthetic identity circuits.

A non-trivial reversible identity (NTRI) is built as ``C ++ inverse``
where ``C`` is a random circuit and the inverse is re-synthesized from
``C``'s specification rather than obtained by mirroring, so the identity
is not a telescoping pattern a local scan could spot.  Candidates are
rejection-sampled until the result is long enough and has no interior
repeated prefix specification, which makes it removable only as a whole.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .circuit import Circuit, Gate
from .semantics import (
    DEFAULT_WIDTH_CAP,
    Specification,
    is_permutation,
    prefix_trace,
    simulate,
)

__all__ = [
    "GeneratorConfig",
    "GeneratorError",
    "gen_random_circuit",
    "synthesize_inverse",
    "gen_random_ntri",
    "is_interior_irreducible",
]


class GeneratorError(RuntimeError):
    """Raised when rejection sampling exhausts its attempt budget."""


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs shared by both generators.

    ``gates`` is the exact length for random circuits; ``min_length`` is
    the minimum NTRI length.  ``max_controls`` defaults to the smaller of
    3 and width-1 so every sampled gate fits both the wire count and the
    default cost table.
    """

    width: int
    gates: int = 0
    min_length: int = 0
    max_controls: int | None = None
    seed: int = 0
    forbid_adjacent_duplicates: bool = True
    max_attempts: int = 1000

    def __post_init__(self) -> None:
        if self.width < 2:
            raise ValueError("width must be at least 2")
        if self.gates < 0 or self.min_length < 0 or self.max_attempts < 1:
            raise ValueError("counts must be non-negative, max_attempts positive")
        if self.max_controls is None:
            object.__setattr__(self, "max_controls", min(3, self.width - 1))
        if not 0 <= self.max_controls <= self.width - 1:
            raise ValueError(f"max_controls {self.max_controls} outside 0..{self.width - 1}")


def _random_gates(
    rng: random.Random, width: int, count: int, max_controls: int, forbid_adjacent: bool
) -> list[Gate]:
    gates: list[Gate] = []
    for _ in range(count):
        while True:
            k = rng.randint(0, max_controls)
            wires = rng.sample(range(width), k + 1)
            g = Gate(frozenset(wires[:-1]), wires[-1])
            if not (forbid_adjacent and gates and g == gates[-1]):
                break
        gates.append(g)
    return gates


def gen_random_circuit(cfg: GeneratorConfig) -> Circuit:
    """A uniformly sampled circuit of exactly ``cfg.gates`` gates.

    Each gate draws a control count 0..max_controls, then distinct wires.
    With ``forbid_adjacent_duplicates`` (the default) a gate equal to its
    left neighbour is re-drawn.  Deterministic for a given config.
    """
    rng = random.Random(cfg.seed)
    gates = _random_gates(
        rng, cfg.width, cfg.gates, cfg.max_controls, cfg.forbid_adjacent_duplicates
    )
    return Circuit(cfg.width, tuple(gates))


def _bits(x: int) -> list[int]:
    return [b for b in range(x.bit_length()) if x >> b & 1]


def synthesize_inverse(spec: Specification, width: int) -> Circuit:
    """A circuit computing the inverse of ``spec``, one output at a time.

    Walk outputs in ascending input order.  For input ``x`` with current
    image ``y`` (always >= x, since everything below is already fixed):
    first set the bits of ``x`` missing from ``y``, controlling each gate
    on all bits currently in the image so no fixed row can fire; then
    clear the bits not in ``x``, controlling on the bits of ``x``.  Gates
    are appended in application order, so the returned circuit maps
    ``spec`` back to the identity.
    """
    if len(spec) != 1 << width or not is_permutation(spec):
        raise ValueError(f"not a permutation of 0..{(1 << width) - 1}")
    current = list(spec)
    gates: list[Gate] = []

    def apply(controls: frozenset[int], target: int) -> None:
        gates.append(Gate(controls, target))
        mask = 0
        for c in controls:
            mask |= 1 << c
        tbit = 1 << target
        for idx, v in enumerate(current):
            if v & mask == mask:
                current[idx] = v ^ tbit

    for x in range(1 << width):
        y = current[x]
        for b in _bits(x & ~y):
            apply(frozenset(_bits(current[x])), b)
        x_controls = frozenset(_bits(x))
        for b in _bits(current[x] & ~x):
            apply(x_controls, b)
    return Circuit(width, tuple(gates))


def is_interior_irreducible(c: Circuit, *, max_width: int = DEFAULT_WIDTH_CAP) -> bool:
    """True when the only equal prefix-specification pair is the pair of
    endpoints (an identity circuit the eliminator can only remove whole)."""
    trace = prefix_trace(c, max_width=max_width)
    m = len(trace) - 1
    seen: dict[Specification, int] = {}
    for i, spec in enumerate(trace):
        j = seen.get(spec)
        if j is not None and (j, i) != (0, m):
            return False
        seen.setdefault(spec, i)
    return True


def gen_random_ntri(cfg: GeneratorConfig) -> Circuit:
    """A random identity circuit of at least ``cfg.min_length`` gates
    with no interior repeated prefix specification.

    Candidates pair a random circuit with its re-synthesized inverse;
    too-short or interior-reducible candidates are rejected and redrawn
    from the same stream.  Raises GeneratorError after ``max_attempts``
    rejections.  Synthesized gates may use more controls than
    ``max_controls``, which only bounds the random half.
    """
    rng = random.Random(cfg.seed)
    base = max(1, cfg.min_length // 2)
    for attempt in range(cfg.max_attempts):
        count = base + attempt // 100
        gates = _random_gates(rng, cfg.width, count, cfg.max_controls, True)
        half = Circuit(cfg.width, tuple(gates))
        inv = synthesize_inverse(simulate(half), cfg.width)
        whole = Circuit(cfg.width, half.gates + inv.gates)
        if len(whole.gates) >= cfg.min_length and is_interior_irreducible(whole):
            return whole
    raise GeneratorError(
        f"no identity of length >= {cfg.min_length} after {cfg.max_attempts} attempts"
    )
