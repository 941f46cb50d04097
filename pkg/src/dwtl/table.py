"""Bit-packed truth tables for Boolean functions of up to 24 inputs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

MAX_INPUTS = 24


class TooManyInputsError(ValueError):
    """Raised when a table or sweep would exceed the 24-input ceiling."""


def assignment_of(index: int, num_inputs: int) -> tuple[int, ...]:
    """Decode a row index into the input assignment it encodes.

    Input j takes value ``(index >> j) & 1``; input 0 is least significant.
    """
    return tuple((index >> j) & 1 for j in range(num_inputs))


def index_of(assignment: Sequence[int]) -> int:
    idx = 0
    for j, bit in enumerate(assignment):
        idx |= (bit & 1) << j
    return idx


def input_pattern(j: int, num_inputs: int) -> int:
    """Value of input j across all 2^n rows, packed as a 2^n-bit integer.

    Bit i of the result is bit j of the row index i.
    """
    rows = 1 << num_inputs
    block = 1 << j
    return ((1 << rows) - 1) // ((1 << block) + 1) << block


@dataclass(frozen=True)
class TruthTable:
    """Boolean function of ``num_inputs`` variables, rows packed into an int.

    Row i holds the value at the assignment decoded by ``assignment_of(i)``.
    """

    num_inputs: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.num_inputs <= MAX_INPUTS:
            raise TooManyInputsError(
                f"num_inputs must be in 1..{MAX_INPUTS}, got {self.num_inputs}"
            )
        if not 0 <= self.bits < (1 << self.num_rows):
            raise ValueError(
                f"table value 0x{self.bits:x} out of range for {self.num_inputs} inputs"
            )

    @property
    def num_rows(self) -> int:
        return 1 << self.num_inputs

    def bit(self, index: int) -> int:
        if not 0 <= index < self.num_rows:
            raise IndexError(f"row {index} out of range")
        return (self.bits >> index) & 1

    def value(self, assignment: Sequence[int]) -> int:
        if len(assignment) != self.num_inputs:
            raise ValueError(
                f"expected {self.num_inputs} input values, got {len(assignment)}"
            )
        return self.bit(index_of(assignment))

    def complement(self) -> "TruthTable":
        mask = (1 << self.num_rows) - 1
        return TruthTable(self.num_inputs, self.bits ^ mask)

    def on_set(self) -> Iterator[int]:
        """Row indices where the function is 1, in increasing order."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def on_set_size(self) -> int:
        return self.bits.bit_count()

    @classmethod
    def from_rows(cls, num_inputs: int, rows: Iterable[int]) -> "TruthTable":
        bits = 0
        count = 0
        for i, v in enumerate(rows):
            if v:
                bits |= 1 << i
            count += 1
        if count != (1 << num_inputs):
            raise ValueError(f"expected {1 << num_inputs} rows, got {count}")
        return cls(num_inputs, bits)

    @classmethod
    def from_function(cls, num_inputs: int, fn: Callable[[tuple[int, ...]], int]) -> "TruthTable":
        return cls.from_rows(
            num_inputs,
            (fn(assignment_of(i, num_inputs)) for i in range(1 << num_inputs)),
        )
