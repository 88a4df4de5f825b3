"""The Koszul resolution of the counit module and its reduction calculus.

Builds the two-step free resolution from the q-commuting pair z1, z-1,
verifies exactness in truncations, reduces monomials modulo the left ideal
B*z-1 two independent ways, and assembles the injective multiplication
matrix on the quotient -- whose actual y0-block entries (diagonal -q,
subdiagonal 0) are pinned down by an explicit two-line witness.
"""

from qsphere import (KoszulComplex, exactness_check, get_algebra,
                     koszul_d2_d1_zero, nu_reduce, nu_reduce_oracle,
                     zeta_matrix)
from qsphere.ncalg import PODLES, podles_word
from qsphere.scalars import Q

B = get_algebra(PODLES)
K = KoszulComplex()

print("== the complex ==")
print("d2(1) feeds d1 the commutation relation, so d1 o d2 = 0:",
      koszul_d2_d1_zero(maxlen=4))
for N in (2, 4, 6):
    r = exactness_check(N)
    print(f"  truncated homology defects at N={N}:",
          (r['H1_defect_dim'], r['H2_defect_dim']))

print()
print("== reduction modulo B*z-1 ==")
print("the quotient has basis nu(y0^k), nu(1), nu(y1^k); trailing y-1")
print("factors collapse with a sign:")
for (i, j) in ((1, -1), (2, -2), (1, 1), (1, 2), (0, 3)):
    red = nu_reduce(B.monomial(podles_word(i, j)))
    pretty = " + ".join(f"({c.render()})*nu({B.render_word(w)})"
                        for w, c in sorted(red.items()))
    print(f"  nu(y0^{i} y({j:+d})^...) = {pretty}")

print()
print("the independent single-step oracle agrees on the whole grid:")
agree = all(nu_reduce(B.monomial(podles_word(i, j))) == nu_reduce_oracle(i, j)
            for i in range(7) for j in range(-(6 - i), 6 - i + 1))
print("  i + |j| <= 6:", agree)

print()
print("== the multiplication matrix on the quotient ==")
tmap, rep = zeta_matrix(3)
print("  full column rank:", rep["full_column_rank"])
print("  y0-block diagonal:", rep["y0_diagonal"])
print("  y0-block subdiagonal:", rep["y0_subdiagonal"])
print("the diagonal is -q, not q: the witness is the exact ideal identity")
z1 = B.gen("y1") + B.gen("y0")
zm1 = B.gen("y-1") + B.gen("y0")
witness = B.gen("y0") * z1 + B.gen("y0").scale(Q) - (B.gen("y1") * zm1).scale(Q ** 2)
print("  y0*z1 + q*y0 - q^2*y1*z-1 =", witness.render())
print("so nu(y0*z1) = -q*nu(y0) exactly, and the zero subdiagonal follows.")
print("injectivity is certified two ways:")
print("  - full column rank above;")
print("  - deleting the nu(1) and top-y0 rows leaves determinant",
      rep["det_rows_without_nu_1_top"])
