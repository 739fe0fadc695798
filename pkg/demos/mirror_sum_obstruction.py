"""The spun 6_1 knot is ribbon but does not split as J # mirror(J).

Its Alexander polynomial does factor as f(t) f(t^-1), so the usual
Fox-Milnor test is silent.  The second elementary ideal separates it: for a
block presentation diag(V(t), V(t^-1)) every codimension-one minor is a
multiple of a block determinant.  With the only possible blocks 2t - 1 and
2 - t, that puts the image of E_2 under t -> -1 inside 3Z, while the spun
6_1 presentation has a unit entry.
"""

from alexkit import (
    IntMatrix, LaurentMatrix, ModulePresentation, elementary_ideal, evaluate_ideal,
    from_seifert, mirror, connected_sum, mirror_sum_obstruction, parse, spun_knot, to_str,
)

P = from_seifert(spun_knot("six_one"))
print("t V+ - V- =", [[to_str(x) for x in row] for row in P.matrix.rows])
print("Delta     =", to_str(P.alexander()))

e2 = elementary_ideal(P, 2)
print("E_2 generators:", [to_str(g) for g in e2], "-> image at t=-1:", evaluate_ideal(e2, -1), "Z")

# %% What a genuine J # mirror(J) looks like
A = ModulePresentation(LaurentMatrix([[parse("2*t - 1")]]))
D = connected_sum(A, mirror(A))
e2 = elementary_ideal(D, 2)
print("\ndiag(2t - 1, 2/t - 1): E_2 =", [to_str(g) for g in e2],
      "-> image at t=-1:", evaluate_ideal(e2, -1), "Z")
print("same Delta up to units:", to_str(D.alexander()) == to_str(P.alexander()))

# %% The report
for name, M in (("spun 6_1", P), ("diag block", D), ("spun trefoil", from_seifert(spun_knot("trefoil")))):
    rep = mirror_sum_obstruction(M)
    print(f"\n{name}: {rep.verdict}\n  {rep.explanation}")
