# cython: language_level=3
"""Compiled enumeration and containment kernels.

Same interface and semantics as ``_purekern``; see that module for the
contracts.  ``count_avoiders`` is the hot path and runs entirely on C
arrays; ``iter_fillings`` still yields Python tuples but with compiled
bookkeeping.
"""

from libc.stdlib cimport free, malloc


def conjugate(parts):
    """Column heights of a diagram, i.e. the conjugate partition."""
    if not parts:
        return ()
    heights = [0] * parts[0]
    for length in parts:
        for j in range(length):
            heights[j] += 1
    return tuple(heights)


def iter_fillings(parts, row_sums, col_sums):
    """Yield every filling with the prescribed sums, lexicographically."""
    if sum(row_sums) != sum(col_sums):
        return
    nrows = len(parts)
    if nrows == 0:
        yield ()
        return

    heights = conjugate(parts)
    rem_row = list(row_sums)
    rem_col = list(col_sums)
    grid = [[0] * length for length in parts]
    cells = []
    for i, length in enumerate(parts):
        for j in range(length):
            cells.append((i, j, j == length - 1, i == heights[j] - 1))
    ncells = len(cells)

    def rec(int idx):
        cdef int value, lo, hi
        if idx == ncells:
            yield tuple(tuple(row) for row in grid)
            return
        i, j, last_in_row, last_in_col = cells[idx]
        if last_in_row and last_in_col:
            value = rem_row[i]
            if value != rem_col[j]:
                return
            lo = hi = value
        elif last_in_row:
            value = rem_row[i]
            if value > rem_col[j]:
                return
            lo = hi = value
        elif last_in_col:
            value = rem_col[j]
            if value > rem_row[i]:
                return
            lo = hi = value
        else:
            lo = 0
            hi = min(rem_row[i], rem_col[j])
        for value in range(lo, hi + 1):
            grid[i][j] = value
            rem_row[i] -= value
            rem_col[j] -= value
            yield from rec(idx + 1)
            rem_row[i] += value
            rem_col[j] += value
        grid[i][j] = 0

    yield from rec(0)


cdef bint c_contains(int nrows, int ncols, int *parts, int *grid,
                     int s, int t, int *ones_off, int *ones_flat,
                     int *comb) noexcept:
    """Containment check on a zero-padded row-major grid."""
    cdef int k, kk, j, col, idx, row
    cdef bint ok, feasible
    if s > nrows or t > ncols:
        return False
    for k in range(s):
        comb[k] = k
    while True:
        col = 0
        feasible = True
        for j in range(t):
            col += 1
            while col <= ncols:
                ok = True
                for idx in range(ones_off[j], ones_off[j + 1]):
                    row = comb[ones_flat[idx]]
                    if grid[row * ncols + col - 1] == 0:
                        ok = False
                        break
                if ok:
                    break
                col += 1
            if col > ncols:
                feasible = False
                break
        if feasible and parts[comb[s - 1]] >= col:
            return True
        k = s - 1
        while k >= 0 and comb[k] == nrows - s + k:
            k -= 1
        if k < 0:
            return False
        comb[k] += 1
        for kk in range(k + 1, s):
            comb[kk] = comb[kk - 1] + 1


cdef long c_count(int idx, int ncells, int *cell_i, int *cell_j,
                  unsigned char *cell_flags, int *rem_row, int *rem_col,
                  int nrows, int ncols, int *parts, int *grid,
                  int s, int t, int *ones_off, int *ones_flat,
                  int *comb) noexcept:
    cdef int i, j, value, lo, hi
    cdef unsigned char flags
    cdef long total
    if idx == ncells:
        if c_contains(nrows, ncols, parts, grid, s, t,
                      ones_off, ones_flat, comb):
            return 0
        return 1
    i = cell_i[idx]
    j = cell_j[idx]
    flags = cell_flags[idx]
    if flags == 3:
        value = rem_row[i]
        if value != rem_col[j]:
            return 0
        lo = hi = value
    elif flags == 1:
        value = rem_row[i]
        if value > rem_col[j]:
            return 0
        lo = hi = value
    elif flags == 2:
        value = rem_col[j]
        if value > rem_row[i]:
            return 0
        lo = hi = value
    else:
        lo = 0
        hi = rem_row[i] if rem_row[i] < rem_col[j] else rem_col[j]
    total = 0
    for value in range(lo, hi + 1):
        grid[i * ncols + j] = value
        rem_row[i] -= value
        rem_col[j] -= value
        total += c_count(idx + 1, ncells, cell_i, cell_j, cell_flags,
                         rem_row, rem_col, nrows, ncols, parts, grid,
                         s, t, ones_off, ones_flat, comb)
        rem_row[i] += value
        rem_col[j] += value
    grid[i * ncols + j] = 0
    return total


cdef int *_ints(int n):
    cdef int *p = <int *> malloc(n * sizeof(int) if n > 0 else sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


def contains(parts, grid, pat):
    """Whether the filling contains the 0/1 pattern (see _purekern)."""
    cdef int nrows = len(parts)
    cdef int ncols = parts[0] if nrows else 0
    cdef int s = len(pat)
    cdef int t = len(pat[0]) if s else 0
    if s > nrows or t > ncols:
        return False
    cdef int *c_parts = _ints(nrows)
    cdef int *c_grid = _ints(nrows * ncols)
    cdef int *ones_off = _ints(t + 1)
    cdef int *ones_flat = _ints(s * t)
    cdef int *comb = _ints(s)
    cdef int i, j, k
    cdef bint found
    try:
        for i in range(nrows):
            c_parts[i] = parts[i]
            row = grid[i]
            for j in range(ncols):
                c_grid[i * ncols + j] = row[j] if j < len(row) else 0
        k = 0
        for j in range(t):
            ones_off[j] = k
            for i in range(s):
                if pat[i][j]:
                    ones_flat[k] = i
                    k += 1
        ones_off[t] = k
        found = c_contains(nrows, ncols, c_parts, c_grid, s, t,
                           ones_off, ones_flat, comb)
    finally:
        free(c_parts)
        free(c_grid)
        free(ones_off)
        free(ones_flat)
        free(comb)
    return bool(found)


def count_avoiders(parts, row_sums, col_sums, pat):
    """Number of fillings with the prescribed sums that avoid the pattern."""
    if sum(row_sums) != sum(col_sums):
        return 0
    cdef int nrows = len(parts)
    cdef int ncols = parts[0] if nrows else 0
    cdef int s = len(pat)
    cdef int t = len(pat[0]) if s else 0
    if nrows == 0:
        # The single empty filling avoids every (nonempty) pattern.
        return 1
    heights = conjugate(parts)
    cdef int ncells = 0
    for length in parts:
        ncells += length
    cdef int *c_parts = _ints(nrows)
    cdef int *c_grid = _ints(nrows * ncols)
    cdef int *rem_row = _ints(nrows)
    cdef int *rem_col = _ints(ncols)
    cdef int *cell_i = _ints(ncells)
    cdef int *cell_j = _ints(ncells)
    cdef unsigned char *cell_flags = <unsigned char *> malloc(ncells)
    cdef int *ones_off = _ints(t + 1)
    cdef int *ones_flat = _ints(s * t if s * t > 0 else 1)
    cdef int *comb = _ints(s if s > 0 else 1)
    if cell_flags == NULL:
        raise MemoryError()
    cdef int i, j, k, idx
    cdef long result
    try:
        idx = 0
        for i in range(nrows):
            c_parts[i] = parts[i]
            rem_row[i] = row_sums[i]
            for j in range(ncols):
                c_grid[i * ncols + j] = 0
            for j in range(parts[i]):
                cell_i[idx] = i
                cell_j[idx] = j
                cell_flags[idx] = ((j == parts[i] - 1)
                                   | ((i == heights[j] - 1) << 1))
                idx += 1
        for j in range(ncols):
            rem_col[j] = col_sums[j]
        k = 0
        for j in range(t):
            ones_off[j] = k
            for i in range(s):
                if pat[i][j]:
                    ones_flat[k] = i
                    k += 1
        ones_off[t] = k
        result = c_count(0, ncells, cell_i, cell_j, cell_flags,
                         rem_row, rem_col, nrows, ncols, c_parts, c_grid,
                         s, t, ones_off, ones_flat, comb)
    finally:
        free(c_parts)
        free(c_grid)
        free(rem_row)
        free(rem_col)
        free(cell_i)
        free(cell_j)
        free(cell_flags)
        free(ones_off)
        free(ones_flat)
        free(comb)
    return result
