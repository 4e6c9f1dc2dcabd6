# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernels: existential fgf searches, idempotent filters, and
a whole-space membership census.  Mirrors partmaps._pykernels."""

DEF MAXN = 16


def fgf_flags(const unsigned char[::1] targets, const unsigned char[::1] candidates, Py_ssize_t n):
    cdef Py_ssize_t tcount = targets.shape[0] // n
    cdef Py_ssize_t ccount = candidates.shape[0] // n
    cdef bytearray out = bytearray(tcount)
    cdef unsigned char[::1] flags = out
    cdef Py_ssize_t i, j, x
    cdef const unsigned char *f
    cdef const unsigned char *g
    cdef bint ok
    for i in range(tcount):
        f = &targets[i * n]
        for j in range(ccount):
            g = &candidates[j * n]
            ok = 1
            for x in range(n):
                if f[g[f[x]]] != f[x]:
                    ok = 0
                    break
            if ok:
                flags[i] = 1
                break
    return bytes(out)


def fgf_witness(const unsigned char[::1] f, const unsigned char[::1] candidates, Py_ssize_t n):
    cdef Py_ssize_t ccount = candidates.shape[0] // n
    cdef Py_ssize_t j, x
    cdef const unsigned char *g
    cdef bint ok
    for j in range(ccount):
        g = &candidates[j * n]
        ok = 1
        for x in range(n):
            if f[g[f[x]]] != f[x]:
                ok = 0
                break
        if ok:
            return j
    return -1


def idempotent_flags(const unsigned char[::1] pool, Py_ssize_t n):
    cdef Py_ssize_t count = pool.shape[0] // n
    cdef bytearray out = bytearray(count)
    cdef unsigned char[::1] flags = out
    cdef Py_ssize_t i, x
    cdef const unsigned char *f
    cdef bint ok
    for i in range(count):
        f = &pool[i * n]
        ok = 1
        for x in range(n):
            if f[f[x]] != f[x]:
                ok = 0
                break
        if ok:
            flags[i] = 1
    return bytes(out)


def census(Py_ssize_t n, const unsigned char[::1] block_of):
    """Tally (|T|, |Sigma|, |Gamma|, |units|, |idempotents of Gamma|) by
    filtering all n^n image tables."""
    if n < 1 or n > MAXN:
        raise ValueError(f"census supports 1 <= n <= {MAXN}, got {n}")
    cdef int m = 0
    cdef Py_ssize_t x
    for x in range(n):
        if block_of[x] + 1 > m:
            m = block_of[x] + 1

    # group elements by block: belems[bstart[b]:bstart[b+1]]
    cdef int bstart[MAXN + 1]
    cdef int belems[MAXN]
    cdef int bsize[MAXN]
    cdef int b, pos
    pos = 0
    for b in range(m):
        bstart[b] = pos
        for x in range(n):
            if block_of[x] == b:
                belems[pos] = x
                pos += 1
        bsize[b] = pos - bstart[b]
    bstart[m] = pos

    cdef unsigned char f[MAXN]
    cdef unsigned char inv[MAXN]
    cdef unsigned char seen[MAXN]
    cdef unsigned char hit[MAXN]
    cdef int tgt[MAXN]
    cdef unsigned long long n_t = 0, n_sigma = 0, n_gamma = 0, n_units = 0, n_gamma_idem = 0
    cdef Py_ssize_t idx
    cdef int j, cnt
    cdef bint ok, flag

    for x in range(n):
        f[x] = 0

    while True:
        # membership in T, reading each block's target off its first element
        ok = 1
        for b in range(m):
            j = block_of[f[belems[bstart[b]]]]
            tgt[b] = j
            for idx in range(bstart[b] + 1, bstart[b + 1]):
                if block_of[f[belems[idx]]] != j:
                    ok = 0
                    break
            if not ok:
                break
        if ok:
            n_t += 1

            # Sigma: image meets every block
            for b in range(m):
                hit[b] = 0
            for x in range(n):
                hit[block_of[f[x]]] = 1
            flag = 1
            for b in range(m):
                if not hit[b]:
                    flag = 0
                    break
            if flag:
                n_sigma += 1

            # Gamma: each block's image has full target-block size
            flag = 1
            for b in range(m):
                for x in range(n):
                    seen[x] = 0
                cnt = 0
                for idx in range(bstart[b], bstart[b + 1]):
                    if not seen[f[belems[idx]]]:
                        seen[f[belems[idx]]] = 1
                        cnt += 1
                if cnt != bsize[tgt[b]]:
                    flag = 0
                    break
            if flag:
                n_gamma += 1
                flag = 1
                for x in range(n):
                    if f[f[x]] != f[x]:
                        flag = 0
                        break
                if flag:
                    n_gamma_idem += 1

            # units: permutation whose inverse is also in T
            for x in range(n):
                seen[x] = 0
            flag = 1
            for x in range(n):
                if seen[f[x]]:
                    flag = 0
                    break
                seen[f[x]] = 1
            if flag:
                for x in range(n):
                    inv[f[x]] = x
                for b in range(m):
                    j = block_of[inv[belems[bstart[b]]]]
                    for idx in range(bstart[b] + 1, bstart[b + 1]):
                        if block_of[inv[belems[idx]]] != j:
                            flag = 0
                            break
                    if not flag:
                        break
                if flag:
                    n_units += 1

        # odometer step
        x = n - 1
        while x >= 0 and f[x] == n - 1:
            f[x] = 0
            x -= 1
        if x < 0:
            break
        f[x] += 1

    return (n_t, n_sigma, n_gamma, n_units, n_gamma_idem)
