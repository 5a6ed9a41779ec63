# %% [markdown]
# # Cramer's rule, rank and independence
#
# Systems are written as x1 * v1 + ... + xn * vn = b. Each x_k is the
# determinant with b in slot k divided by the base determinant.

# %%
from detlab import LinearSystem, Matrix, VecTuple, cramer_solve, is_linearly_independent, rank, spans_ambient
from detlab.errors import SingularSystem

sol = cramer_solve(LinearSystem.from_matrix(Matrix([[2, 0], [0, 3]]), [4, 9]))
print("x =", [str(x) for x in sol.values])
print("numerators =", [str(d) for d in sol.per_coordinate_determinants], "base =", sol.base_determinant)

# %% [markdown]
# A singular system reports its rank and a dependency certificate: the
# coefficients of a vanishing combination of the coefficient vectors.

# %%
try:
    cramer_solve(LinearSystem.from_matrix(Matrix([[1, 2], [2, 4]]), [1, 1]))
except SingularSystem as exc:
    print("rank", exc.rank, "certificate", [str(c) for c in exc.certificate])

# %%
t = VecTuple([[1, 1, 0], [0, 1, 1]])
print("rank", rank(t), "independent", is_linearly_independent(t), "spans F^3", spans_ambient(t))
