# %% [markdown]
# # Exact scalars over Q and GF(p)
#
# Everything in detlab is exact. A field is chosen once and every scalar
# carries it, so mixing Q with GF(7) is an error instead of a silent cast.

# %%
from fractions import Fraction

from detlab import GF, RATIONAL, parse_scalar

half = RATIONAL(Fraction(1, 2))
third = parse_scalar("1/3", RATIONAL)
print("1/2 + 1/3 =", half + third)

gf7 = GF(7)
print("4 * 5 in GF(7) =", gf7(4) * gf7(5))
print("1/3 in GF(5) =", parse_scalar("1/3", GF(5)))

# %% [markdown]
# Rendering always uses lowest terms, and prime-field values print as
# bare residues, so text output can be parsed straight back.

# %%
x = parse_scalar("-6/4", RATIONAL)
print(x, parse_scalar(str(x), RATIONAL) == x)

try:
    RATIONAL(1) + gf7(1)
except TypeError as exc:
    print("mixing fields:", exc)
