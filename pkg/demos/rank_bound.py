"""Lower bounds for the holonomic rank from top standard pairs.

At w = (1, ..., 1) the number of top standard pairs of the t-initial monomial
ideal equals the normalized volume of conv(0, columns of A).  Any simplex
spanned by 0 and d columns sits inside that polytope, so its |det| is a
quick floor for the count; the table shows both.
"""

from itertools import combinations

from gkzmod import rank_lower_bound
from gkzmod.lattice import determinant

MATRICES = [
    [[1, 3]],
    [[2, 3]],
    [[1, 1, 1], [0, 1, 2]],
    [[1, 0, 2], [0, 1, 3]],
    [[1, 1, 1, 1], [0, 1, 2, 3]],
    [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]],
]


def simplex_volume_bound(A):
    """Largest |det| over d-subsets of columns."""
    d = len(A)
    cols = list(zip(*A))
    return max(abs(determinant([list(r) for r in zip(*sub)])) for sub in combinations(cols, d))


print(f"{'A':<44} {'top pairs':>9} {'largest simplex':>15}")
for A in MATRICES:
    print(f"{str(A):<44} {rank_lower_bound(A):>9} {simplex_volume_bound(A):>15}")

# in one dimension the polytope is an interval and its volume is its length
A = [[-2, 3, 5]]
print(f"\nA = {A}: bound {rank_lower_bound(A)}, interval length {max(A[0]) - min(A[0])}")
