"""Seed derivation shared by the generator, the decoders and the Monte Carlo harness"""

import numpy as np

SEED_MASK = (1 << 64) - 1


def derive_seed(master_seed: int, *task_index: int) -> int:
    """
    Derive an independent 64-bit seed for a sub-task (a trial, a restart, a random stream) of ``master_seed``.

    The derivation is numpy's ``SeedSequence`` hash with ``spawn_key=task_index``: the first 64-bit word of its
    state. It depends only on the arguments, so results do not depend on scheduling or on the number of workers.
    """
    spawn_key = tuple(int(i) for i in task_index)
    sequence = np.random.SeedSequence(entropy=int(master_seed) & SEED_MASK, spawn_key=spawn_key)
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """A PCG64 generator; the only bit generator used by the package"""
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))
