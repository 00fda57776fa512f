from concurrent.futures import ThreadPoolExecutor, as_completed
from .Counter import Counter
import numpy as np
import logging
import os

log = logging.getLogger(__name__)

THREADS_ENV = "HIERTECT_THREADS"

def resolve_threads(threads = None):
    """
        Number of worker threads: the explicit argument, else the
        HIERTECT_THREADS environment variable, else 1
    """
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        if env is None or env.strip() == "":
            return 1
        try:
            threads = int(env)
        except ValueError:
            msg = f"{THREADS_ENV}={env!r} is not an integer."
            raise ValueError(msg)
    if threads < 1:
        msg = f"Thread count must be at least 1, got {threads:d}."
        raise ValueError(msg)
    return int(threads)

def run_chunked(func, n_items, threads = 1, chunk_size = 256, progress = False,
                label = "Trials"):
    """
        Evaluates 'func(start, stop)' over consecutive blocks of
        range(n_items) and concatenates the returned arrays in block order.

        Blocks are fixed by 'chunk_size' alone, so the output is identical
        for every thread count as long as 'func' derives its randomness from
        the item indices.
    """
    bounds = [(s, min(s + chunk_size, n_items))
              for s in range(0, n_items, chunk_size)]
    results = [None]*len(bounds)
    counter = Counter(n_items, label) if progress else None
    threads = resolve_threads(threads)

    if threads == 1 or len(bounds) <= 1:
        for k,(start, stop) in enumerate(bounds):
            results[k] = func(start, stop)
            if counter is not None:
                counter(stop - start)
    else:
        log.debug("Running %d blocks on %d threads", len(bounds), threads)
        with ThreadPoolExecutor(max_workers = threads) as pool:
            futures = {pool.submit(func, start, stop): k
                       for k,(start, stop) in enumerate(bounds)}
            for future in as_completed(futures):
                k = futures[future]
                results[k] = future.result()
                if counter is not None:
                    counter(bounds[k][1] - bounds[k][0])

    if counter is not None:
        counter.close()

    if len(results) == 0:
        return np.zeros(0)
    return np.concatenate([np.asarray(r) for r in results])
