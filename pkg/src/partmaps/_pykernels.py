"""Pure-Python twins of the compiled scan kernels.

Same call surface as partmaps._ckernels; used when the extension is not
built or when PARTMAPS_BACKEND=python.  All functions take flat packed
image tables (bytes, degree n per record).
"""

import itertools


def fgf_flags(targets, candidates, n):
    """One flag per record f of ``targets``: is there g among ``candidates``
    with fgf = f?  (fgf = f iff f(g(y)) = y for every y in the image of f.)"""
    tcount = len(targets) // n
    pool = [candidates[j * n : (j + 1) * n] for j in range(len(candidates) // n)]
    flags = bytearray(tcount)
    for i in range(tcount):
        f = targets[i * n : (i + 1) * n]
        image = set(f)
        for g in pool:
            ok = True
            for y in image:
                if f[g[y]] != y:
                    ok = False
                    break
            if ok:
                flags[i] = 1
                break
    return bytes(flags)


def fgf_witness(f, candidates, n):
    """Index of the first g among ``candidates`` with fgf = f, else -1."""
    image = set(f)
    for j in range(len(candidates) // n):
        g = candidates[j * n : (j + 1) * n]
        if all(f[g[y]] == y for y in image):
            return j
    return -1


def idempotent_flags(pool, n):
    """One flag per record: does the map fix its whole image (ff = f)?"""
    count = len(pool) // n
    flags = bytearray(count)
    for i in range(count):
        f = pool[i * n : (i + 1) * n]
        if all(f[f[x]] == f[x] for x in range(n)):
            flags[i] = 1
    return bytes(flags)


def census(n, block_of):
    """Scan all n^n image tables and tally the members of T, Sigma, Gamma,
    the unit group, and the idempotents of Gamma.

    Definition-direct filter over the full map space; serves as the
    independent oracle against the assembly enumerators and the counting
    formulas.
    """
    m = max(block_of) + 1
    blocks = [[] for _ in range(m)]
    for x, b in enumerate(block_of):
        blocks[b].append(x)
    sizes = [len(b) for b in blocks]
    n_t = n_sigma = n_gamma = n_units = n_gamma_idem = 0
    rng = range(n)
    for f in itertools.product(rng, repeat=n):
        targets = []
        ok = True
        for blk in blocks:
            j = block_of[f[blk[0]]]
            for x in blk[1:]:
                if block_of[f[x]] != j:
                    ok = False
                    break
            if not ok:
                break
            targets.append(j)
        if not ok:
            continue
        n_t += 1
        if len({block_of[v] for v in f}) == m:
            n_sigma += 1
        surjective = True
        for bi, blk in enumerate(blocks):
            if len({f[x] for x in blk}) != sizes[targets[bi]]:
                surjective = False
                break
        if surjective:
            n_gamma += 1
            if all(f[f[x]] == f[x] for x in rng):
                n_gamma_idem += 1
        if len(set(f)) == n:
            inv = [0] * n
            for x, y in enumerate(f):
                inv[y] = x
            ok = True
            for blk in blocks:
                j = block_of[inv[blk[0]]]
                for x in blk[1:]:
                    if block_of[inv[x]] != j:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                n_units += 1
    return (n_t, n_sigma, n_gamma, n_units, n_gamma_idem)
