"""Jordan data of nilpotent matrices."""

from __future__ import annotations

from .matrix import Matrix, extend_basis


class NotNilpotent(ValueError):
    pass


def jordan_blocks(partition) -> Matrix:
    """Block-diagonal nilpotent Jordan form with ones on the superdiagonal."""
    blocks = []
    for k in partition:
        blocks.append(Matrix([[1 if j == i + 1 else 0 for j in range(k)] for i in range(k)]))
    if not blocks:
        return Matrix.zeros(0)
    return Matrix.block_diag(blocks)


def jordan_chains(N: Matrix):
    """Top vectors of Jordan chains, grouped by chain length (longest first).

    Returns a list of (length, v) with N^length v = 0 and N^(length-1) v != 0,
    such that the vectors N^j v form a basis.
    """
    if not N.is_square():
        raise ValueError("jordan data needs a square matrix")
    n = N.rows
    if not N.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    # kernels of N^k
    kernels = [[]]
    P = Matrix.identity(n)
    k = 0
    while len(kernels[-1]) < n:
        P = P @ N
        k += 1
        kernels.append(P.nullspace())
    top = k
    chains = []
    for level in range(top, 0, -1):
        base = list(kernels[level - 1])
        for length, v in chains:
            w = v
            for _ in range(length - level):
                w = N.apply(w)
            base.append(w)
        for v in extend_basis(base, kernels[level]):
            chains.append((level, v))
    return chains


def jordan_data(N: Matrix):
    """Partition of block sizes and g with g N g^-1 in Jordan form."""
    chains = jordan_chains(N)
    partition = tuple(length for length, _ in chains)
    if not chains:
        return (), Matrix.identity(0)
    cols = []
    for length, v in chains:
        seq = [v]
        for _ in range(length - 1):
            seq.append(N.apply(seq[-1]))
        cols.extend(reversed(seq))
    P = Matrix.from_columns(cols)
    g = P.inverse()
    return partition, g


def nilpotent_rank_profile(partition, k: int) -> int:
    """rank(N^k) for a nilpotent with the given block sizes."""
    return sum(max(p - k, 0) for p in partition)
