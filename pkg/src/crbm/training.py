"""Shared mini-batch training scaffolding for the two energy models."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from .cnormal import SeededRng

__all__ = ["EpochRecord", "TrainingDivergedError", "run_epochs"]

log = logging.getLogger("crbm")


class TrainingDivergedError(RuntimeError):
    """A parameter array went non-finite during training."""

    def __init__(self, param_name: str, epoch: int):
        self.param_name = param_name
        self.epoch = epoch
        super().__init__(f"non-finite values in parameter '{param_name}' at epoch {epoch}")


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    mse: float
    seconds: float
    optimizer: str


def run_epochs(n_samples: int, epochs: int, batch_size: int, shuffle_rng: SeededRng,
               batch_update, epoch_metric, optimizer_name: str,
               log_interval: int = 10) -> list[EpochRecord]:
    """Drive shuffled mini-batch updates and collect one record per epoch.

    batch_update(epoch, indices) applies one parameter update for the given
    sample indices; epoch_metric() evaluates the reconstruction error after
    each epoch.
    """
    records: list[EpochRecord] = []
    for epoch in range(1, epochs + 1):
        start = time.perf_counter()
        perm = shuffle_rng.permutation(n_samples)
        for lo in range(0, n_samples, batch_size):
            batch_update(epoch, perm[lo:lo + batch_size])
        mse = float(epoch_metric())
        rec = EpochRecord(epoch=epoch, mse=mse, seconds=time.perf_counter() - start,
                          optimizer=optimizer_name)
        records.append(rec)
        if log_interval and (epoch % log_interval == 0 or epoch == epochs):
            log.info("epoch %d/%d mse=%.6g", epoch, epochs, mse)
    return records
