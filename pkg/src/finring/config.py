"""Engine-wide limits and determinism knobs."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    # Constructors refuse rings larger than this.
    order_cap: int = 1 << 16
    # Exhaustive triple audit up to this order; sampled above.
    audit_cap: int = 256
    # Number of random triples for the sampled audit.
    audit_samples: int = 100_000
    # The strong-nilpotence search refuses rings above this order.
    oracle_cap: int = 64
    # Default order gate for rings derived during suite runs.
    budget: int = 1024
    # Seed mixed into every deterministic sampling step.
    seed: int = 2024


DEFAULT = EngineConfig()
