# %% [markdown]
# # The main equation
#
# For a determinant D on n-tuples in an n-dimensional space,
#
#     D(v1, ..., vn) * b = sum_k D(v1, ..., b, ..., vn) * vk
#
# where the k-th term puts b in slot k. The residual of this identity is
# zero for the standard determinant on every input.

# %%
from detlab import (
    PathologicalXminusY,
    ProductXY,
    StandardDet,
    main_equation_residual,
    multilinearity_residuals,
    verify_antisymmetry,
    verify_main_equation,
    verify_multilinearity,
)

print(main_equation_residual(StandardDet(2), [[1, 0], [0, 1]], [3, 5]))
print(verify_main_equation(StandardDet(4), trials=200, seed=1).passed)

# %% [markdown]
# On the one-dimensional space F, the function D(x, y) = x - y (and 0 when
# either argument is 0) also satisfies the identity, and it is antisymmetric.
# But it is not multilinear. The arity-2 identity alone is not enough; the
# dimension of the space has to match the arity.

# %%
f = PathologicalXminusY()
print("main equation :", verify_main_equation(f, 1000, 0).passed)
print("antisymmetry  :", verify_antisymmetry(f, 1000, 0).passed)
print("multilinearity:", verify_multilinearity(f, 1000, 0).passed)
print("additivity residual at v1=2, w=-2, v2=3:", multilinearity_residuals(f, [2, 3], 0, -2, 1)[0])

# %% [markdown]
# D(x, y) = x * y is bilinear but fails the identity outright.

# %%
print(main_equation_residual(ProductXY(), [1, 1], 2))
