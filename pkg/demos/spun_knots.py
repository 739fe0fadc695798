"""Spun classical knots: Alexander polynomials and Fox-Milnor factorizations.

Spinning a classical knot with Seifert matrix V gives a 2-knot with Seifert
pair (V, V^T), so the 2-knot inherits the classical Alexander polynomial.
Run with ``python demos/spun_knots.py``.
"""

from alexkit import alexander, catalog_names, factor, fox_milnor_witness, spun_knot, to_str
from alexkit.classical import CATALOG

# %% The catalog, with the self-checked Alexander polynomial of each spun knot
for name in catalog_names():
    pair = spun_knot(name)
    delta = alexander(pair)
    print(f"{name:13s} V = {CATALOG[name].matrix.to_rows()!s:40s} Delta = {to_str(delta)}")

# %% Factor each polynomial and look for f with Delta ~ f(t) f(t^-1)
print()
for name in catalog_names():
    delta = alexander(spun_knot(name))
    w = fox_milnor_witness(delta)
    print(f"{name:13s} {str(factor(delta)):38s} witness: {to_str(w) if w is not None else 'none'}")

# The figure-eight and trefoil polynomials are irreducible and associate to
# their own reciprocals, with odd multiplicity, so no witness exists.  The
# stevedore knot 6_1 splits as (2t - 1)(t - 2) and the two factors swap under
# t -> t^-1, which gives the witness 2t - 1.
