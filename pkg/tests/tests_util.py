"""Shared helpers for the test suite."""

import random

from dwtl import GateDef, Netlist, OutputDef, SpinMinorityGate


def random_valid_netlist(rng: random.Random) -> Netlist:
    """Small random valid netlist; every gate has odd total weight (no ties)."""
    n_inputs = rng.randint(1, 6)
    inputs = tuple(f"x{i}" for i in range(n_inputs))
    refs_pool = list(inputs)
    gates = []
    for k in range(rng.randint(0, 8)):
        fan_in = rng.randint(1, 4)
        weights = None
        while weights is None or sum(abs(w) for w in weights) % 2 == 0:
            weights = tuple(
                rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(fan_in)
            )
        refs = tuple(rng.choice(refs_pool) for _ in range(fan_in))
        name = f"g{k}"
        gates.append(GateDef(name, SpinMinorityGate(weights), refs))
        refs_pool.append(name)
    outputs = tuple(
        OutputDef(f"y{k}", rng.choice(refs_pool), rng.random() < 0.5)
        for k in range(rng.randint(1, 3))
    )
    return Netlist(inputs, tuple(gates), outputs)
