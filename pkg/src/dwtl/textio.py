"""Line-oriented text format for netlists (.dwtl) and truth-table strings.

Grammar, one statement per line, ``#`` starts a comment:

    input <name>
    gate <name> min <ref> <ref> <ref>          # sugar for weights -1,-1,-1
    gate <name> w=<int>:<ref> [w=<int>:<ref> ...]
    output <name> = [!]<ref>

Names match [A-Za-z_][A-Za-z0-9_]*. Statements must define every reference
before it is used. Canonical printing emits inputs, then gates, then outputs,
single-spaced, newline-terminated, and round-trips bit-exactly.
"""

from __future__ import annotations

import re

from .gates import SpinMinorityGate
from .netlist import GateDef, Netlist, OutputDef
from .table import MAX_INPUTS, TruthTable

NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
WEIGHT_RE = re.compile(r"^w=(-?\d+):([A-Za-z_][A-Za-z0-9_]*)$")
TT_RE = re.compile(r"^\s*(\d+):(?:0[xX])?([0-9a-fA-F]+)\s*$")


class ParseError(ValueError):
    """Rejection of netlist or truth-table text, with a 1-based position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _column_of(raw: str, token: str, occurrence: int = 0) -> int:
    pos = -1
    for _ in range(occurrence + 1):
        pos = raw.find(token, pos + 1)
        if pos < 0:
            return 1
    return pos + 1


def parse_netlist(text: str) -> Netlist:
    inputs: list[str] = []
    gates: list[GateDef] = []
    outputs: list[OutputDef] = []
    defined: set[str] = set()
    out_names: set[str] = set()
    def_lines: dict[str, int] = {}

    def err(lineno: int, raw: str, token: str, message: str) -> ParseError:
        return ParseError(lineno, _column_of(raw, token), message)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]

        if kind == "input":
            if len(tokens) != 2:
                raise err(lineno, raw, kind, "expected: input <name>")
            name = tokens[1]
            if not NAME_RE.match(name):
                raise err(lineno, raw, name, f"invalid name '{name}'")
            if name in defined:
                raise err(lineno, raw, name, f"duplicate name '{name}'")
            inputs.append(name)
            defined.add(name)
            def_lines[name] = lineno

        elif kind == "gate":
            if len(tokens) < 3:
                raise err(lineno, raw, kind, "expected: gate <name> ...")
            name = tokens[1]
            if not NAME_RE.match(name):
                raise err(lineno, raw, name, f"invalid name '{name}'")
            if name in defined:
                raise err(lineno, raw, name, f"duplicate name '{name}'")
            if tokens[2] == "min":
                refs = tokens[3:]
                if len(refs) != 3:
                    raise err(lineno, raw, "min", "min gate takes exactly 3 refs")
                weights = (-1, -1, -1)
            else:
                refs = []
                weights_list = []
                for tok in tokens[2:]:
                    m = WEIGHT_RE.match(tok)
                    if not m:
                        raise err(
                            lineno, raw, tok, f"expected w=<int>:<ref>, got '{tok}'"
                        )
                    w = int(m.group(1))
                    if w == 0:
                        raise err(lineno, raw, tok, "zero weight")
                    weights_list.append(w)
                    refs.append(m.group(2))
                weights = tuple(weights_list)
            for ref in refs:
                if ref not in defined:
                    raise err(lineno, raw, ref, f"unknown reference '{ref}'")
            gates.append(GateDef(name, SpinMinorityGate(weights), tuple(refs)))
            defined.add(name)
            def_lines[name] = lineno

        elif kind == "output":
            if len(tokens) != 4 or tokens[2] != "=":
                raise err(lineno, raw, kind, "expected: output <name> = [!]<ref>")
            name = tokens[1]
            if not NAME_RE.match(name):
                raise err(lineno, raw, name, f"invalid name '{name}'")
            if name in out_names:
                raise err(lineno, raw, name, f"duplicate output name '{name}'")
            target = tokens[3]
            invert = target.startswith("!")
            ref = target[1:] if invert else target
            if not NAME_RE.match(ref):
                raise err(lineno, raw, target, f"invalid reference '{ref}'")
            if ref not in defined:
                raise err(lineno, raw, target, f"unknown reference '{ref}'")
            outputs.append(OutputDef(name, ref, invert))
            out_names.add(name)

        else:
            raise err(lineno, raw, kind, f"unknown statement '{kind}'")

    if not outputs:
        raise ParseError(max(1, text.count("\n") + 1), 1, "netlist has no outputs")

    net = Netlist(tuple(inputs), tuple(gates), tuple(outputs))
    problems = net.validate()
    if problems:
        # map the first problem back to the defining line where possible
        first = problems[0]
        m = re.search(r"'([A-Za-z_][A-Za-z0-9_]*)'", first)
        line = def_lines.get(m.group(1), 1) if m else 1
        raise ParseError(line, 1, first)
    return net


def print_netlist(net: Netlist) -> str:
    lines = [f"input {name}" for name in net.inputs]
    for gdef in net.gates:
        if gdef.gate.weights == (-1, -1, -1):
            lines.append(f"gate {gdef.name} min {' '.join(gdef.refs)}")
        else:
            parts = " ".join(
                f"w={w}:{r}" for w, r in zip(gdef.gate.weights, gdef.refs)
            )
            lines.append(f"gate {gdef.name} {parts}")
    for odef in net.outputs:
        bang = "!" if odef.invert else ""
        lines.append(f"output {odef.name} = {bang}{odef.ref}")
    return "\n".join(lines) + "\n"


def parse_truth_table(text: str) -> TruthTable:
    m = TT_RE.match(text)
    if not m:
        raise ParseError(1, 1, f"expected <n>:<hex>, got {text!r}")
    n = int(m.group(1))
    if not 1 <= n <= MAX_INPUTS:
        raise ParseError(1, 1, f"input count {n} out of range 1..{MAX_INPUTS}")
    value = int(m.group(2), 16)
    if value >= 1 << (1 << n):
        raise ParseError(
            1, _column_of(text, m.group(2)), f"table value out of range for n={n}"
        )
    return TruthTable(n, value)


def format_truth_table(tt: TruthTable) -> str:
    return f"{tt.num_inputs}:0x{tt.bits:x}"
