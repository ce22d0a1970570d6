from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..errors import InputError

MAX_MASTER = 2 ** 64


@dataclass(frozen=True)
class Seed:
    """
    Per-trial randomness: a Philox stream keyed by (master, trial_index, *path).
    Streams of different trials never overlap, whatever order they run in.
    """
    master: int
    trial_index: int = 0
    path: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= int(self.master) < MAX_MASTER:
            raise InputError(f"Master seed must be a 64-bit unsigned integer, got {self.master}")
        if int(self.trial_index) < 0:
            raise InputError(f"Trial index must be nonnegative, got {self.trial_index}")

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(entropy=int(self.master),
                                          spawn_key=(int(self.trial_index),) + tuple(self.path))
        return np.random.Generator(np.random.Philox(sequence))

    def child(self, k: int) -> "Seed":
        """An independent sub-stream of this trial."""
        return Seed(self.master, self.trial_index, self.path + (int(k),))

    def for_trial(self, trial_index: int) -> "Seed":
        return Seed(self.master, trial_index)


RandomSource = Union[Seed, np.random.Generator]


def as_generator(source: RandomSource) -> np.random.Generator:
    if isinstance(source, Seed):
        return source.generator()
    if isinstance(source, np.random.Generator):
        return source
    raise InputError(f"Expected a Seed or numpy Generator, got {type(source).__name__}")
