"""Generators for the minority-gate adder circuits and a NAND baseline.

Carry signals ride the chain in inverted form: the minority gate that would
produce carry-out actually holds its complement, and downstream gates absorb
the inversion by flipping the sign of the weight on that reference. Output
inversion is a free flag on the netlist, never a gate.
"""

from __future__ import annotations

from typing import Mapping

from .gates import SpinMinorityGate
from .netlist import CONST_ONE, GateDef, Netlist, OutputDef
from .table import TruthTable, input_pattern

MAX_ADDER_BITS = 64

MIN3 = SpinMinorityGate((-1, -1, -1))


def weighted_sum_gate() -> SpinMinorityGate:
    """Four-input gate, unit pull on three inputs and double pull on the fourth.

    Wired to (a, b, cin, q) with q = MIN3(a, b, cin) it computes the
    complement of the sum bit of a + b + cin.
    """
    return SpinMinorityGate((-1, -1, -1, -2))


def adder_names(n_bits: int) -> tuple[list[str], list[str]]:
    if not 1 <= n_bits <= MAX_ADDER_BITS:
        raise ValueError(f"n_bits must be in 1..{MAX_ADDER_BITS}, got {n_bits}")
    inputs = (
        [f"a{i}" for i in range(n_bits)]
        + [f"b{i}" for i in range(n_bits)]
        + ["cin"]
    )
    outputs = [f"sum{i}" for i in range(n_bits)] + ["cout"]
    return inputs, outputs


def minority_adder(n_bits: int) -> Netlist:
    """Ripple adder from three-gate minority blocks (three gates per bit)."""
    inputs, _ = adder_names(n_bits)
    gates: list[GateDef] = []
    outputs: list[OutputDef] = []
    carry_ref = "cin"
    carry_direct = True  # whether carry_ref holds the carry or its complement
    for i in range(n_bits):
        cw = -1 if carry_direct else 1
        g1 = f"g1_{i}"
        g2 = f"g2_{i}"
        g3 = f"g3_{i}"
        gates.append(
            GateDef(g1, SpinMinorityGate((-1, -1, cw)), (f"a{i}", f"b{i}", carry_ref))
        )
        gates.append(GateDef(g2, MIN3, (f"a{i}", f"b{i}", g1)))
        gates.append(
            GateDef(g3, SpinMinorityGate((cw, -1, 1)), (carry_ref, g1, g2))
        )
        outputs.append(OutputDef(f"sum{i}", g3, invert=True))
        carry_ref = g1  # holds the complement of carry-out
        carry_direct = False
    outputs.append(OutputDef("cout", carry_ref, invert=True))
    return Netlist(tuple(inputs), tuple(gates), tuple(outputs))


def minority_full_adder() -> Netlist:
    """One-bit full adder from three plain-weight minority gates."""
    return minority_adder(1)


def ripple_adder(n_bits: int) -> Netlist:
    """Ripple adder with two gates per bit using the double-weight sum gate."""
    inputs, _ = adder_names(n_bits)
    gates: list[GateDef] = []
    outputs: list[OutputDef] = []
    carry_ref = "cin"
    carry_direct = True
    for i in range(n_bits):
        cw = -1 if carry_direct else 1
        g1 = f"g1_{i}"
        g2 = f"g2_{i}"
        gates.append(
            GateDef(g1, SpinMinorityGate((-1, -1, cw)), (f"a{i}", f"b{i}", carry_ref))
        )
        gates.append(
            GateDef(
                g2,
                SpinMinorityGate((-1, -1, cw, -2)),
                (f"a{i}", f"b{i}", carry_ref, g1),
            )
        )
        outputs.append(OutputDef(f"sum{i}", g2, invert=True))
        carry_ref = g1
        carry_direct = False
    outputs.append(OutputDef("cout", carry_ref, invert=True))
    return Netlist(tuple(inputs), tuple(gates), tuple(outputs))


def nand_adder(n_bits: int) -> Netlist:
    """Textbook nine-NAND-per-bit adder, NAND2 modeled as a minority gate.

    A two-input minority gate would tie, so NAND(x, y) is a fan-in-3 minority
    gate with the third input pinned to the constant-1 netlist input.
    """
    inputs, _ = adder_names(n_bits)
    inputs = inputs + [CONST_ONE]
    gates: list[GateDef] = []
    outputs: list[OutputDef] = []

    def nand(name: str, x: str, y: str) -> str:
        gates.append(GateDef(name, MIN3, (x, y, CONST_ONE)))
        return name

    carry = "cin"
    for i in range(n_bits):
        a, b = f"a{i}", f"b{i}"
        t1 = nand(f"t1_{i}", a, b)
        t2 = nand(f"t2_{i}", a, t1)
        t3 = nand(f"t3_{i}", b, t1)
        t4 = nand(f"t4_{i}", t2, t3)  # a xor b
        t5 = nand(f"t5_{i}", t4, carry)
        t6 = nand(f"t6_{i}", t4, t5)
        t7 = nand(f"t7_{i}", carry, t5)
        t8 = nand(f"t8_{i}", t6, t7)  # sum bit
        t9 = nand(f"t9_{i}", t1, t5)  # carry out
        outputs.append(OutputDef(f"sum{i}", t8))
        carry = t9
    outputs.append(OutputDef("cout", carry))
    return Netlist(tuple(inputs), tuple(gates), tuple(outputs))


def nand_full_adder() -> Netlist:
    return nand_adder(1)


def adder_spec_tables(
    n_bits: int, input_order: tuple[str, ...] | None = None
) -> dict[str, TruthTable]:
    """Per-output truth tables of n-bit addition, by direct integer arithmetic.

    Row ordering follows ``input_order`` (default a0..b0..cin); only feasible
    while 2*n_bits + 1 stays within the table-size ceiling.
    """
    names, out_names = adder_names(n_bits)
    if input_order is None:
        input_order = tuple(names)
    if sorted(input_order) != sorted(names):
        raise ValueError(
            f"input order {input_order} does not cover the adder inputs {names}"
        )
    n = len(input_order)
    pos = {name: j for j, name in enumerate(input_order)}
    bits_per_output = {name: 0 for name in out_names}
    for row in range(1 << n):
        a = sum(((row >> pos[f"a{i}"]) & 1) << i for i in range(n_bits))
        b = sum(((row >> pos[f"b{i}"]) & 1) << i for i in range(n_bits))
        total = a + b + ((row >> pos["cin"]) & 1)
        for i in range(n_bits):
            if (total >> i) & 1:
                bits_per_output[f"sum{i}"] |= 1 << row
        if (total >> n_bits) & 1:
            bits_per_output["cout"] |= 1 << row
    return {name: TruthTable(n, bits) for name, bits in bits_per_output.items()}


def adder_reference_patterns(n_bits: int):
    """Bit-parallel addition oracle for sampled equivalence checks.

    Returns a callable mapping packed input patterns to packed output
    patterns, computed with the carry recurrence sum = a ^ b ^ c,
    c' = majority(a, b, c) rather than any gate machinery.
    """

    def reference(patterns: Mapping[str, int], width: int) -> dict[str, int]:
        mask = (1 << width) - 1
        carry = patterns["cin"] & mask
        outs: dict[str, int] = {}
        for i in range(n_bits):
            a = patterns[f"a{i}"] & mask
            b = patterns[f"b{i}"] & mask
            outs[f"sum{i}"] = a ^ b ^ carry
            carry = (a & b) | (a & carry) | (b & carry)
        outs["cout"] = carry
        return outs

    return reference


def adder_input_patterns(n_bits: int) -> dict[str, int]:
    """Exhaustive input patterns for the canonical adder input order."""
    names, _ = adder_names(n_bits)
    n = len(names)
    return {name: input_pattern(j, n) for j, name in enumerate(names)}
