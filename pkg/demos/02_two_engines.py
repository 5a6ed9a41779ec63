# %% [markdown]
# # Two determinant engines
#
# `det_cofactor` expands along the first column recursively.
# `det_elimination` row-reduces with swaps and row replacements only, and
# reads off (-1)^m times the product of the diagonal.

# %%
from detlab import GF, DetMode, Matrix, det, det_cofactor, det_elimination, reduce_to_diagonal

a = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
print("cofactor   :", det_cofactor(a))
print("elimination:", det_elimination(a))

# %% [markdown]
# The elimination trace records every operation, so the reduction can be
# replayed and checked.

# %%
trace = reduce_to_diagonal(Matrix([[0, 1], [1, 0]]))
print("ops:", trace.ops)
print("swaps:", trace.swap_count, "diagonal:", [str(d) for d in trace.diagonal_entries])
print("replay reproduces diagonal:", trace.replay() == trace.diagonal)

# %% [markdown]
# Crosscheck mode runs both engines and raises if they ever disagree.

# %%
result = det(Matrix([[2, 3], [4, 1]], GF(7)), DetMode.CROSSCHECK)
print("det over GF(7):", result.value, "via", result.algorithm.value)
