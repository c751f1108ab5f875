"""Exact matrix rank over a field by Gaussian elimination with
deterministic pivoting (first nonzero entry in column order)."""

from __future__ import annotations


def matrix_rank(rows, field) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    mat = [list(r) for r in rows]
    zero = field.zero
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != zero:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = field.one / mat[rank][col]
        prow = mat[rank]
        for r in range(rank + 1, len(mat)):
            entry = mat[r][col]
            if entry != zero:
                factor = entry * inv
                row = mat[r]
                for c in range(col, ncols):
                    row[c] = row[c] - factor * prow[c]
        rank += 1
        if rank == len(mat):
            break
    return rank


def nullspace_vector(rows, field):
    """One nonzero kernel vector of the matrix (columns as unknowns), or
    None if the kernel is trivial.  Free columns beyond the first are set
    to zero, the first free column to one; deterministic."""
    if not rows:
        return None
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    zero, one = field.zero, field.one
    pivots = {}  # column -> row
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != zero:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = one / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        prow = mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != zero:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], prow)]
        pivots[col] = rank
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    fc = free[0]
    vec = [zero] * ncols
    vec[fc] = one
    for col, r in pivots.items():
        vec[col] = -mat[r][fc]
    return vec
