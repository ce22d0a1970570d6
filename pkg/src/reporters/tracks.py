import logging
from typing import Iterable, TextIO, Tuple

import numpy as np


class TracksReporter:
    """
    Columnar text of eigenvalue tracks: one line per sample time holding
    t and the ascending eigenvalues. Blocks of different charts are
    separated by a blank line.
    """

    def __init__(self, output_file: str) -> None:
        self.logger = logging.getLogger(__name__)
        self.output_file = output_file

    def generate(self, blocks: Iterable[Tuple[np.ndarray, np.ndarray]]) -> None:
        self.logger.info(f"Writing eigenvalue tracks to {self.output_file}...")
        with open(self.output_file, 'w', encoding='utf-8') as f:
            for i, (times, values) in enumerate(blocks):
                if i:
                    f.write("\n")
                self._write_block(f, times, values)

    @staticmethod
    def _write_block(f: TextIO, times: np.ndarray, values: np.ndarray) -> None:
        for t, row in zip(times, values):
            f.write(" ".join([f"{t:.12g}"] + [f"{v:.12g}" for v in row]) + "\n")
