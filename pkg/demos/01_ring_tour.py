"""A tour of R_q = F_2[u_1..u_q]/(u_i^2): elements, units, weights, Gray maps."""

import numpy as np

from rqcodes.ring import (
    elements_iter,
    hom_gray_table,
    hom_weight_closed,
    is_unit,
    lee_gray_table,
    lee_weight,
    make_ring,
    mul,
    render_symbolic,
)

# %% Elements are bitmasks: bit j is the coefficient of the monomial with index set j.
R = make_ring(2)
print(f"R_2 has {R.size} elements; theta = {render_symbolic(R.theta)} (mask {R.theta_mask})")
x, y = R.element("1+u1"), R.element("u2+u1u2")
print(f"({x}) * ({y}) = {mul(x, y)}")

# %% Exactly half of the elements are units: those with constant term 1.
units = [z for z in elements_iter(R) if is_unit(z)]
print(f"{len(units)} units out of {R.size}")

# %% theta absorbs units and is killed by everything else.
print("unit * theta  =", mul(R.element("1+u2"), R.theta))
print("u1 * theta    =", mul(R.u(1), R.theta))

# %% Lee weight is the Hamming weight of the Lee Gray image; on monomials it is 2^|A|.
L = lee_gray_table(2)
for name in ("1", "u1", "u2", "u1u2"):
    e = R.element(name)
    print(f"  {name:5s} -> {''.join(map(str, L[e.mask]))}  w_Lee = {lee_weight(e)}")

# %% The homogeneous weight: 0, gamma on the bulk, 2*gamma on theta.
print("hom weights (gamma = 4):", sorted({int(hom_weight_closed(z)) for z in elements_iter(R)}))
exact = hom_gray_table(2, "weight-exact").sum(axis=1)
print("weight-exact hom Gray image weights:", np.unique(exact))
