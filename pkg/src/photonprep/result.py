"""Common result containers shared by the synthesizers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class HeraldPattern:
    """Photon-count signal on dedicated herald modes; sums to n - 2."""

    signal: tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.signal):
            raise ValueError("herald signal entries must be positive")
        object.__setattr__(self, "signal", tuple(int(s) for s in self.signal))

    @property
    def herald_modes(self) -> int:
        return len(self.signal)

    @property
    def total(self) -> int:
        return sum(self.signal)


@dataclass(frozen=True)
class SynthesisResult:
    """Interferometer produced by a synthesizer, plus its bookkeeping.

    ``unitary`` acts on all modes (payload, herald if any, then vacuum
    auxiliaries). ``scale_alpha`` is the positive rescaling absorbed by the
    unitary embedding; ``details`` carries construction internals used by
    the proof-identity checks.
    """

    unitary: np.ndarray
    aux_modes: int
    scale_alpha: float
    success_probability: float
    herald: HeraldPattern | None = None
    details: dict = field(default_factory=dict)

    @property
    def total_modes(self) -> int:
        return self.unitary.shape[0]
