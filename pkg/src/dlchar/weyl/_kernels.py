"""Hot permutation kernels: group enumeration and conjugacy-class closure.

Two interchangeable implementations live here.  The default compiles the
inner loops with numba; setting the environment variable DLCHAR_NO_NUMBA
(or running without numba installed) selects a batched pure-numpy path with
identical semantics.  benchmarks/bench_weyl.py compares the two.

Permutations are int16 rows of shape (m,); composition (a then b applied
last) is b[a], i.e. rows compose as X[:, s] for right multiplication by s.
Element identity goes through a fixed polynomial row hash; enumeration
verifies the final count against the known group order, which rules out
silent hash collisions, and lookups compare full rows.
"""

from __future__ import annotations

import os

import numpy as np

_HASH_MULT = np.uint64(0x9E3779B97F4A7C15)


def numba_enabled():
    if os.environ.get("DLCHAR_NO_NUMBA"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def hash_powers(m):
    # wrapping uint64 powers, built with Python ints to avoid numpy warnings
    mult = int(_HASH_MULT)
    acc = 1
    pows = np.empty(m, dtype=np.uint64)
    for i in range(m):
        pows[i] = acc
        acc = (acc * mult) % (1 << 64)
    return pows


def row_hash(rows, pows):
    return (rows.astype(np.uint64) + np.uint64(1)) @ pows


class EnumerationCapExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def _np_enumerate(gens, cap, keep_perms):
    m = gens.shape[1]
    pows = hash_powers(m)
    ident = np.arange(m, dtype=np.int16)[None, :]
    seen = np.sort(row_hash(ident, pows))
    levels = [ident] if keep_perms else None
    level_sizes = [1]
    frontier = ident
    total = 1
    while frontier.shape[0]:
        cand = np.concatenate([frontier[:, g] for g in gens])
        h = row_hash(cand, pows)
        order = np.argsort(h, kind="stable")
        h = h[order]
        cand = cand[order]
        first = np.ones(len(h), dtype=bool)
        first[1:] = h[1:] != h[:-1]
        cand = cand[first]
        h = h[first]
        pos = np.searchsorted(seen, h)
        pos_c = np.minimum(pos, len(seen) - 1)
        new_mask = seen[pos_c] != h
        frontier = cand[new_mask]
        hnew = h[new_mask]
        total += frontier.shape[0]
        if total > cap:
            raise EnumerationCapExceeded(f"group exceeds enumeration cap {cap}")
        seen = np.sort(np.concatenate([seen, hnew]))
        if frontier.shape[0]:
            if keep_perms:
                levels.append(frontier)
            level_sizes.append(frontier.shape[0])
    lengths = np.repeat(np.arange(len(level_sizes), dtype=np.int32),
                        level_sizes)
    perms = np.concatenate(levels) if keep_perms else None
    return perms, lengths, total


def _np_class_ids(perms, left_gens, right_gens, sorted_hashes, sorted_to_row):
    n, m = perms.shape
    pows = hash_powers(m)
    class_id = np.full(n, -1, dtype=np.int32)
    next_id = 0
    for seed in range(n):
        if class_id[seed] >= 0:
            continue
        class_id[seed] = next_id
        frontier = np.array([seed], dtype=np.int64)
        while frontier.size:
            rows = perms[frontier]
            images = []
            for lg, rg in zip(left_gens, right_gens):
                # x -> lg o x o rg: (lg o x o rg)(i) = lg[x[rg[i]]]
                images.append(lg[rows[:, rg]])
            allrows = np.concatenate(images)
            idx = _np_lookup(allrows, perms, pows, sorted_hashes, sorted_to_row)
            fresh = idx[class_id[idx] < 0]
            fresh = np.unique(fresh)
            class_id[fresh] = next_id
            frontier = fresh
        next_id += 1
    return class_id


def _np_lookup(rows, perms, pows, sorted_hashes, sorted_to_row):
    h = row_hash(rows, pows)
    pos = np.searchsorted(sorted_hashes, h)
    if np.any(pos >= len(sorted_hashes)) or np.any(sorted_hashes[pos] != h):
        raise KeyError("permutation not in the element store")
    idx = sorted_to_row[pos]
    if not np.array_equal(perms[idx], rows):
        raise KeyError("hash collision against a non-member row")
    return idx


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

_NUMBA_CACHE = {}


def _numba_funcs():
    if _NUMBA_CACHE:
        return _NUMBA_CACHE
    from numba import njit

    @njit(cache=True)
    def nb_enumerate(gens, cap, keep_perms, hash_mult):
        ngen, m = gens.shape
        table_bits = 1
        while (1 << table_bits) < 4 * cap:
            table_bits += 1
        mask = np.uint64((1 << table_bits) - 1)
        table = np.full(1 << table_bits, -1, dtype=np.int64)
        pows = np.empty(m, dtype=np.uint64)
        acc = np.uint64(1)
        for i in range(m):
            pows[i] = acc
            acc = acc * hash_mult
        store_cap = cap if keep_perms else 1
        perms = np.empty((store_cap, m), dtype=np.int16)
        hashes = np.empty(cap, dtype=np.uint64)
        lengths = np.empty(cap, dtype=np.int32)
        for i in range(m):
            perms[0, i] = i
        h0 = np.uint64(0)
        for i in range(m):
            h0 += (np.uint64(i) + np.uint64(1)) * pows[i]
        hashes[0] = h0
        lengths[0] = 0
        slot = h0 & mask
        while table[slot] != -1:
            slot = (slot + np.uint64(1)) & mask
        table[slot] = 0
        total = 1
        frontier = np.empty((1, m), dtype=np.int16)
        for i in range(m):
            frontier[0, i] = i
        level = 0
        scratch = np.empty(m, dtype=np.int16)
        while frontier.shape[0] > 0:
            level += 1
            new_list = np.empty((frontier.shape[0] * ngen, m), dtype=np.int16)
            n_new = 0
            for fi in range(frontier.shape[0]):
                for gi in range(ngen):
                    for i in range(m):
                        scratch[i] = frontier[fi, gens[gi, i]]
                    h = np.uint64(0)
                    for i in range(m):
                        h += (np.uint64(scratch[i]) + np.uint64(1)) * pows[i]
                    slot = h & mask
                    present = False
                    while table[slot] != -1:
                        j = table[slot]
                        if hashes[j] == h:
                            present = True
                            break
                        slot = (slot + np.uint64(1)) & mask
                    if not present:
                        if total >= cap:
                            return perms[:1], lengths[:1], -1
                        table[slot] = total
                        hashes[total] = h
                        lengths[total] = level
                        if keep_perms:
                            for i in range(m):
                                perms[total, i] = scratch[i]
                        for i in range(m):
                            new_list[n_new, i] = scratch[i]
                        n_new += 1
                        total += 1
            frontier = new_list[:n_new].copy()
        return perms[:total] if keep_perms else perms[:1], lengths[:total], total

    @njit(cache=True)
    def nb_class_ids(perms, left_gens, right_gens, sorted_hashes, sorted_to_row,
                     hash_mult):
        n, m = perms.shape
        ngen = left_gens.shape[0]
        pows = np.empty(m, dtype=np.uint64)
        acc = np.uint64(1)
        for i in range(m):
            pows[i] = acc
            acc = acc * hash_mult
        class_id = np.full(n, -1, dtype=np.int32)
        queue = np.empty(n, dtype=np.int64)
        scratch = np.empty(m, dtype=np.int16)
        next_id = 0
        for seed in range(n):
            if class_id[seed] >= 0:
                continue
            class_id[seed] = next_id
            queue[0] = seed
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                for gi in range(ngen):
                    for i in range(m):
                        scratch[i] = left_gens[gi, perms[x, right_gens[gi, i]]]
                    h = np.uint64(0)
                    for i in range(m):
                        h += (np.uint64(scratch[i]) + np.uint64(1)) * pows[i]
                    lo = np.searchsorted(sorted_hashes, h)
                    idx = np.int64(-1)
                    while lo < n and sorted_hashes[lo] == h:
                        j = sorted_to_row[lo]
                        ok = True
                        for i in range(m):
                            if perms[j, i] != scratch[i]:
                                ok = False
                                break
                        if ok:
                            idx = j
                            break
                        lo += 1
                    if idx < 0:
                        return class_id[:0]
                    if class_id[idx] < 0:
                        class_id[idx] = next_id
                        queue[tail] = idx
                        tail += 1
            next_id += 1
        return class_id

    _NUMBA_CACHE["enumerate"] = nb_enumerate
    _NUMBA_CACHE["class_ids"] = nb_class_ids
    return _NUMBA_CACHE


# ---------------------------------------------------------------------------
# dispatchers
# ---------------------------------------------------------------------------

def enumerate_group(gens, cap, keep_perms=True, force=None):
    """BFS closure of the generators; returns (perms, lengths, total).

    perms is None when keep_perms is False.  Lengths are Cayley-graph
    distances, i.e. Coxeter lengths for simple-reflection generators.
    """
    mode = force or ("numba" if numba_enabled() else "numpy")
    if mode == "numba":
        fns = _numba_funcs()
        perms, lengths, total = fns["enumerate"](
            np.ascontiguousarray(gens, dtype=np.int16),
            cap, keep_perms, _HASH_MULT)
        if total < 0:
            raise EnumerationCapExceeded(f"group exceeds enumeration cap {cap}")
        return (perms if keep_perms else None), lengths, total
    return _np_enumerate(np.asarray(gens, dtype=np.int16), cap, keep_perms)


def class_ids(perms, left_gens, right_gens, sorted_hashes, sorted_to_row,
              force=None):
    """Orbit closure ids under x -> l o x o r over generator pairs (l, r)."""
    mode = force or ("numba" if numba_enabled() else "numpy")
    lg = np.ascontiguousarray(left_gens, dtype=np.int16)
    rg = np.ascontiguousarray(right_gens, dtype=np.int16)
    if mode == "numba":
        fns = _numba_funcs()
        out = fns["class_ids"](perms, lg, rg, sorted_hashes, sorted_to_row,
                               _HASH_MULT)
        if out.shape[0] != perms.shape[0]:
            raise KeyError("closure left the element store")
        return out
    return _np_class_ids(perms, lg, rg, sorted_hashes, sorted_to_row)
