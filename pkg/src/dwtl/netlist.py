"""Feed-forward circuits of spin-minority gates: evaluation, equivalence, cost.

A netlist is acyclic by construction: a gate may only reference primary
inputs or gates defined earlier in the list. The reserved input name ``one``
is a pinned constant-1 and is not a truth-table variable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .gates import SpinMinorityGate, TieError
from .table import MAX_INPUTS, TooManyInputsError, TruthTable, input_pattern

CONST_ONE = "one"

DEFAULT_SEED = 0xD0DA11
DEFAULT_SAMPLE_VECTORS = 100_000


class NetlistError(ValueError):
    """Structural or usage error on a netlist operation."""


@dataclass(frozen=True)
class GateDef:
    name: str
    gate: SpinMinorityGate
    refs: tuple[str, ...]


@dataclass(frozen=True)
class OutputDef:
    name: str
    ref: str
    invert: bool = False


@dataclass(frozen=True)
class Netlist:
    inputs: tuple[str, ...]
    gates: tuple[GateDef, ...]
    outputs: tuple[OutputDef, ...]

    @property
    def free_inputs(self) -> tuple[str, ...]:
        """Primary inputs excluding the pinned constant ``one``."""
        return tuple(n for n in self.inputs if n != CONST_ONE)

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def validate(self) -> list[str]:
        """All structural violations, empty when the netlist is usable."""
        errors: list[str] = []
        seen: set[str] = set()
        for name in self.inputs:
            if name in seen:
                errors.append(f"duplicate name '{name}'")
            seen.add(name)
        defined = set(seen)
        for gdef in self.gates:
            if gdef.name in seen:
                errors.append(f"duplicate name '{gdef.name}'")
            if len(gdef.refs) != gdef.gate.fan_in:
                errors.append(
                    f"gate '{gdef.name}': {len(gdef.refs)} refs for "
                    f"fan-in {gdef.gate.fan_in}"
                )
            for ref in gdef.refs:
                if ref not in defined:
                    later = any(g.name == ref for g in self.gates)
                    kind = "forward reference" if later else "unknown reference"
                    errors.append(f"gate '{gdef.name}': {kind} '{ref}'")
            ties = gdef.gate.tie_assignments()
            if ties:
                errors.append(f"gate '{gdef.name}': tie at assignment {ties[0]}")
            seen.add(gdef.name)
            defined.add(gdef.name)
        if not self.outputs:
            errors.append("netlist has no outputs")
        out_seen: set[str] = set()
        for odef in self.outputs:
            if odef.name in out_seen:
                errors.append(f"duplicate output name '{odef.name}'")
            out_seen.add(odef.name)
            if odef.ref not in defined:
                errors.append(f"output '{odef.name}': unknown reference '{odef.ref}'")
        return errors

    def evaluate(self, assignment: Mapping[str, int]) -> dict[str, int]:
        """Single-vector evaluation; gates run in definition order."""
        values: dict[str, int] = {}
        for name in self.inputs:
            if name == CONST_ONE:
                values[name] = 1
                continue
            if name not in assignment:
                raise NetlistError(f"missing value for input '{name}'")
            values[name] = assignment[name] & 1
        for gdef in self.gates:
            x = [values[r] for r in gdef.refs]
            try:
                values[gdef.name] = gdef.gate.eval(x)
            except TieError as exc:
                raise TieError(
                    f"gate '{gdef.name}': {exc}", assignment=exc.assignment
                ) from exc
        return {
            o.name: values[o.ref] ^ (1 if o.invert else 0) for o in self.outputs
        }

    def evaluate_patterns(
        self, patterns: Mapping[str, int], width: int
    ) -> dict[str, int]:
        """Bit-parallel evaluation of ``width`` vectors packed into integers.

        ``patterns[name]`` holds input ``name`` across all vectors, one bit per
        vector. Returns one packed integer per output.
        """
        mask = (1 << width) - 1
        values: dict[str, int] = {}
        for name in self.inputs:
            values[name] = mask if name == CONST_ONE else patterns[name] & mask
        for gdef in self.gates:
            tt = gdef.gate.truth_table()
            srcs = [values[r] for r in gdef.refs]
            on = tt.bits
            invert_result = False
            if 2 * tt.on_set_size() > tt.num_rows:
                on = tt.complement().bits
                invert_result = True
            acc = 0
            rows = on
            while rows:
                low = rows & -rows
                i = low.bit_length() - 1
                rows ^= low
                term = mask
                for j, src in enumerate(srcs):
                    term &= src if (i >> j) & 1 else ~src
                    if not term:
                        break
                acc |= term
            values[gdef.name] = (acc ^ mask) if invert_result else acc & mask
        return {
            o.name: (values[o.ref] ^ mask) if o.invert else values[o.ref]
            for o in self.outputs
        }

    def truth_tables(self) -> dict[str, TruthTable]:
        """Exhaustive per-output tables over the free inputs, in input order."""
        names = self.free_inputs
        n = len(names)
        if n > MAX_INPUTS:
            raise TooManyInputsError(
                f"{n} inputs exceed the {MAX_INPUTS}-input exhaustive ceiling"
            )
        if n == 0:
            raise NetlistError("netlist has no free inputs")
        width = 1 << n
        patterns = {name: input_pattern(j, n) for j, name in enumerate(names)}
        outs = self.evaluate_patterns(patterns, width)
        return {name: TruthTable(n, bits) for name, bits in outs.items()}


@dataclass(frozen=True)
class Counterexample:
    assignment: dict[str, int]
    output: str
    got: int
    want: int


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    mode: str  # "exhaustive" or "random"
    vectors_checked: int
    counterexample: Counterexample | None = None
    seed: int | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def check_equivalence(
    net: Netlist, spec: Mapping[str, TruthTable]
) -> EquivalenceResult:
    """Exhaustively compare the netlist against per-output truth tables.

    The counterexample, if any, is the lowest disagreeing row index; ties
    across outputs resolve to the earliest output in declaration order.
    """
    out_names = [o.name for o in net.outputs]
    if set(out_names) != set(spec):
        raise NetlistError(
            f"output name mismatch: netlist has {sorted(out_names)}, "
            f"spec has {sorted(spec)}"
        )
    n = len(net.free_inputs)
    for name, tt in spec.items():
        if tt.num_inputs != n:
            raise NetlistError(
                f"spec table for '{name}' has {tt.num_inputs} inputs, "
                f"netlist has {n}"
            )
    got = net.truth_tables()
    best: tuple[int, str, int, int] | None = None
    for name in out_names:
        diff = got[name].bits ^ spec[name].bits
        if diff:
            idx = (diff & -diff).bit_length() - 1
            if best is None or idx < best[0]:
                best = (idx, name, got[name].bit(idx), spec[name].bit(idx))
    if best is None:
        return EquivalenceResult(True, "exhaustive", 1 << n)
    idx, name, g, w = best
    assignment = {
        inp: (idx >> j) & 1 for j, inp in enumerate(net.free_inputs)
    }
    return EquivalenceResult(
        False, "exhaustive", 1 << n, Counterexample(assignment, name, g, w)
    )


def check_equivalence_sampled(
    net: Netlist,
    reference: Callable[[Mapping[str, int], int], Mapping[str, int]],
    seed: int = DEFAULT_SEED,
    num_vectors: int = DEFAULT_SAMPLE_VECTORS,
) -> EquivalenceResult:
    """Seeded random check plus corner vectors, for nets too wide to enumerate.

    ``reference(patterns, width)`` must return expected packed output patterns
    for the same bit-parallel input patterns the netlist sees. The corner
    vectors are all-zeros, all-ones, and each single-hot input.
    """
    names = net.free_inputs
    n = len(names)
    rng = random.Random(seed)
    width = num_vectors + 2 + n
    patterns: dict[str, int] = {}
    for j, name in enumerate(names):
        p = rng.getrandbits(num_vectors)
        # corners: all-zeros at bit num_vectors (no-op), all-ones, single-hot j
        p |= 1 << (num_vectors + 1)
        p |= 1 << (num_vectors + 2 + j)
        patterns[name] = p
    got = net.evaluate_patterns(patterns, width)
    want = reference(patterns, width)
    if set(got) != set(want):
        raise NetlistError("reference output names do not match netlist outputs")
    best: tuple[int, str] | None = None
    for o in net.outputs:
        diff = got[o.name] ^ want[o.name]
        if diff:
            idx = (diff & -diff).bit_length() - 1
            if best is None or idx < best[0]:
                best = (idx, o.name)
    if best is None:
        return EquivalenceResult(True, "random", width, seed=seed)
    idx, name = best
    assignment = {inp: (patterns[inp] >> idx) & 1 for inp in names}
    return EquivalenceResult(
        False,
        "random",
        width,
        Counterexample(
            assignment, name, (got[name] >> idx) & 1, (want[name] >> idx) & 1
        ),
        seed=seed,
    )


@dataclass(frozen=True)
class CostReport:
    gate_count: int
    fanin_sum: int
    max_fanout: int
    depth: int
    inverted_outputs: int
    baseline_count: int
    reduction_percent: Fraction

    def reduction_one_decimal(self) -> str:
        """Reduction percentage rounded half-up to one decimal, e.g. '86.7'."""
        tenths = _round_half_up(self.reduction_percent * 10)
        sign = "-" if tenths < 0 else ""
        tenths = abs(tenths)
        return f"{sign}{tenths // 10}.{tenths % 10}"

    def reduction_rounded(self) -> int:
        """Reduction percentage rounded half-up to an integer, e.g. 87."""
        return _round_half_up(self.reduction_percent)


def _round_half_up(value: Fraction) -> int:
    return int((value + Fraction(1, 2)).__floor__())


def cost_report(net: Netlist, baseline_count: int) -> CostReport:
    """Graph metrics plus the device-count reduction against a baseline."""
    if baseline_count < 1:
        raise NetlistError("baseline_count must be >= 1")
    fanout: dict[str, int] = {}
    depth: dict[str, int] = {name: 0 for name in net.inputs}
    max_depth = 0
    fanin_sum = 0
    for gdef in net.gates:
        fanin_sum += gdef.gate.fan_in
        for ref in gdef.refs:
            fanout[ref] = fanout.get(ref, 0) + 1
        depth[gdef.name] = 1 + max(depth[r] for r in gdef.refs)
        max_depth = max(max_depth, depth[gdef.name])
    for odef in net.outputs:
        fanout[odef.ref] = fanout.get(odef.ref, 0) + 1
    gate_count = net.gate_count
    return CostReport(
        gate_count=gate_count,
        fanin_sum=fanin_sum,
        max_fanout=max(fanout.values(), default=0),
        depth=max((depth[o.ref] for o in net.outputs), default=max_depth),
        inverted_outputs=sum(1 for o in net.outputs if o.invert),
        baseline_count=baseline_count,
        reduction_percent=100 * (1 - Fraction(gate_count, baseline_count)),
    )
