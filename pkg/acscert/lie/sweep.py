"""
Seeded sampling sweeps of the ACS quantity over constrained tangent pairs.

The samples are cut into fixed-size chunks, each with its own child seed of the sweep seed,
so the result depends on (seed, samples, chunk size) and not on how many threads ran them.
"""

import concurrent.futures
import logging

import numpy

import acscert
import config
from acscert.errors import InvalidParameter
from .acs import acs_values


class SweepResult(object):

    """ Extremes of ACS over a sample of tangent pairs.

    :param minimum: Smallest sampled value
    :param maximum: Largest sampled value, the one that could contradict ACS < 0
    :param witness: (X, N) attaining the maximum
    :param samples: Number of pairs evaluated
    :param seed: Sweep seed
    :param proven_bound: The family's proven upper bound, None if it has none
    """

    def __init__(self, family, minimum, maximum, witness, samples, seed, proven_bound):
        self.family = family
        self.minimum = minimum
        self.maximum = maximum
        self.witness = witness
        self.samples = samples
        self.seed = seed
        self.proven_bound = proven_bound

    def __repr__(self):
        return 'SweepResult({}, min={!r}, max={!r}, samples={})'.format(self.family.name, self.minimum, self.maximum, self.samples)


def _run_chunk(family, size, seed_sequence, strict):
    sampler = family.sampler(strict=strict)
    X, N = sampler.draw_batch(size, numpy.random.default_rng(seed_sequence))
    values = numpy.atleast_1d(acs_values(family, X, N))
    i, j = int(numpy.argmin(values)), int(numpy.argmax(values))
    return float(values[i]), float(values[j]), (X[j], N[j])


def sample_min_acs(family, samples=10000, seed=0, strict=False, chunk_size=None, threads=None):
    """ Minimum (and maximum) of ACS over samples constrained pairs, deterministic in seed.

    :type family: acscert.lie.EmbeddingFamily
    :param strict: Grassmannians only, enforce the full quaternionic orthogonality
    :param chunk_size: Pairs per work unit, SAMPLING.CHUNK_SIZE if omitted
    :param threads: Worker threads, ACS_CERT_THREADS if omitted
    :rtype: SweepResult
    """
    if samples < 1:
        raise InvalidParameter('need at least one sample, got {}'.format(samples))
    chunk_size = chunk_size or acscert.current_config.APP_SAMPLING_CHUNK_SIZE
    sizes = [chunk_size] * (samples // chunk_size)
    if samples % chunk_size:
        sizes.append(samples % chunk_size)
    children = numpy.random.SeedSequence(seed).spawn(len(sizes))

    workers = min(len(sizes), threads or config.thread_count())
    jobs = [(family, size, child, strict) for size, child in zip(sizes, children)]
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda job: _run_chunk(*job), jobs))
    else:
        chunks = [_run_chunk(*job) for job in jobs]

    minimum = min(c[0] for c in chunks)
    # first chunk wins ties
    top = max(range(len(chunks)), key=lambda k: (chunks[k][1], -k))
    maximum, witness = chunks[top][1], chunks[top][2]

    logging.info('%s: %d samples (seed %d), ACS in [%.9g, %.9g]', family.name, samples, seed, minimum, maximum)
    return SweepResult(family, minimum, maximum, witness, samples, seed, family.proven_bound())
