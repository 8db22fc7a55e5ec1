"""Deterministic chunked range scans with optional worker pools and checkpoints.

A scan partitions [lo, hi] into fixed-size contiguous chunks, runs a
registered per-chunk task, and merges fragments in chunk order. Output is
therefore identical for any worker count, and a run interrupted at a chunk
boundary resumes from its checkpoint to the same result.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
from array import array

from .core import CheckpointError, ScanInterrupted, _divisors_from_spf, build_spf_sieve

CHUNK_SIZE_DEFAULT = 1 << 16
CHECKPOINT_VERSION = 1

# name -> (chunk_fn(lo, hi, spf, params) -> fragment,
#          merge_fn(state, fragment) -> state,
#          empty_fn(params) -> state); fragments and state are JSON-safe
_TASKS: dict[str, tuple] = {}


def register_task(name, chunk_fn, merge_fn, empty_fn):
    _TASKS[name] = (chunk_fn, merge_fn, empty_fn)


_LOCAL_SPF: tuple[int, array] | None = None


def _local_spf(limit: int) -> array:
    """Process-local SPF table, grown on demand and reused across scans."""
    global _LOCAL_SPF
    if _LOCAL_SPF is None or _LOCAL_SPF[0] < limit:
        _LOCAL_SPF = (limit, build_spf_sieve(limit)._table)
    return _LOCAL_SPF[1]


def _init_worker(sieve_limit):
    _local_spf(sieve_limit)


def _run_chunk(args):
    task, lo, hi, sieve_limit, params = args
    chunk_fn = _TASKS[task][0]
    return chunk_fn(lo, hi, _local_spf(sieve_limit), params)


def effective_sieve_limit(hi: int, sieve_limit: int | None) -> int:
    return max(hi, 2) if sieve_limit is None else max(sieve_limit, hi, 2)


def config_digest(task: str, lo: int, hi: int, chunk_size: int, sieve_limit: int, params: dict) -> str:
    blob = json.dumps(
        {"task": task, "lo": lo, "hi": hi, "chunk_size": chunk_size,
         "sieve_limit": sieve_limit, "params": params},
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def save_checkpoint(path, task, config_hash, last_n, state):
    doc = {
        "version": CHECKPOINT_VERSION,
        "task": task,
        "config_hash": config_hash,
        "last_n": last_n,
        "state": state,
    }
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(json.dumps(doc, separators=(",", ":")) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path, task, config_hash):
    """Validated (last_n, state) from a checkpoint written by save_checkpoint."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CheckpointError(f"unreadable checkpoint {path}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != CHECKPOINT_VERSION:
        raise CheckpointError(f"unsupported checkpoint version in {path}")
    if doc.get("task") != task:
        raise CheckpointError(f"checkpoint {path} belongs to task {doc.get('task')!r}, not {task!r}")
    if doc.get("config_hash") != config_hash:
        raise CheckpointError(f"checkpoint {path} was written under a different configuration")
    if "last_n" not in doc or "state" not in doc:
        raise CheckpointError(f"checkpoint {path} is missing fields")
    return doc["last_n"], doc["state"]


def run_scan(task, lo, hi, params=None, *, workers=1, chunk_size=CHUNK_SIZE_DEFAULT,
             sieve_limit=None, checkpoint=None, max_chunks=None):
    """Run a registered task over [lo, hi]; returns the merged final state.

    `max_chunks` bounds the number of chunks processed this call; when the
    budget runs out before hi, state is checkpointed and ScanInterrupted is
    raised. Results are byte-deterministic for any workers/chunk budget split.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    if max_chunks is not None and not checkpoint:
        raise ValueError("max_chunks requires a checkpoint path to resume from")
    params = dict(params or {})
    sieve_limit = effective_sieve_limit(hi, sieve_limit)
    chunk_fn, merge_fn, empty_fn = _TASKS[task]
    digest = config_digest(task, lo, hi, chunk_size, sieve_limit, params)

    state = empty_fn(params)
    start = lo
    if checkpoint and os.path.exists(checkpoint):
        last_n, state = load_checkpoint(checkpoint, task, digest)
        on_boundary = last_n == hi or (last_n - lo + 1) % chunk_size == 0
        if not (lo - 1 <= last_n <= hi and on_boundary):
            raise CheckpointError(f"checkpoint {checkpoint} has last_n={last_n} off any chunk boundary")
        start = last_n + 1
        if start > hi:
            return state

    chunks = [(a, min(a + chunk_size - 1, hi)) for a in range(start, hi + 1, chunk_size)]
    todo = chunks if max_chunks is None else chunks[:max_chunks]
    interrupted = len(todo) < len(chunks)

    if workers <= 1 or len(todo) <= 1:
        spf = _local_spf(sieve_limit)
        for a, b in todo:
            state = merge_fn(state, chunk_fn(a, b, spf, params))
            if checkpoint:
                save_checkpoint(checkpoint, task, digest, b, state)
    else:
        jobs = [(task, a, b, sieve_limit, params) for a, b in todo]
        with multiprocessing.Pool(workers, initializer=_init_worker, initargs=(sieve_limit,)) as pool:
            for (a, b), frag in zip(todo, pool.imap(_run_chunk, jobs)):
                state = merge_fn(state, frag)
                if checkpoint:
                    save_checkpoint(checkpoint, task, digest, b, state)

    if interrupted:
        raise ScanInterrupted(checkpoint, todo[-1][1])
    if checkpoint and os.path.exists(checkpoint):
        os.remove(checkpoint)
    return state


def divisors_from_spf(n: int, spf) -> list[int]:
    """Ascending divisors of n via an SPF table (hot path for chunk tasks)."""
    return _divisors_from_spf(n, spf)
