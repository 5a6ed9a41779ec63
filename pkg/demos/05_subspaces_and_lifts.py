# %% [markdown]
# # Building determinants
#
# Lifting a determinant on V to F x V expands along the first coordinate.
# Starting from D(x) = x and lifting n - 1 times gives the standard
# determinant on F^n.

# %%
from detlab import Matrix, StandardDet, Vector, VecTuple, extend_to_basis, lift_determinant, subspace_determinant, uniqueness_constant, Scaled

d2 = lift_determinant(2)
print(d2.descriptor(), "on (1,2),(3,4):", d2([[1, 2], [3, 4]]))

d4 = lift_determinant(4)
m = Matrix([[2, 0, 1, 3], [1, 1, 0, 0], [0, 5, 2, 1], [4, 0, 0, 1]])
print("lifted:", d4(m.to_tuple()), "standard:", StandardDet(4)(m.to_tuple()))

# %% [markdown]
# Any multilinear antisymmetric function is a constant multiple of the
# determinant. `uniqueness_constant` recovers the constant and checks the
# ratio on every sampled tuple.

# %%
print(uniqueness_constant(StandardDet(3), Scaled(-7, StandardDet(3))))

# %% [markdown]
# A k-dimensional subspace W of F^n inherits a k-determinant: complete a
# basis of W with standard basis vectors and feed them as the trailing
# arguments.

# %%
w = VecTuple([Vector([1, 1, 0])])
basis = extend_to_basis(w)
print("extension:", basis.extension)
print("D'(1,1,0) =", subspace_determinant(basis, w))
print("D'(3,3,0) =", subspace_determinant(basis, VecTuple([Vector([3, 3, 0])])))
