"""Building pairs with prescribed K-theory from 1x1 blocks.

Three block types suffice: ((d+1), (2)) puts Z/d into K0, ((2), (d+1))
puts Z/d into K1, and ((2), (1)) puts a copy of Z into both.  Stacking
blocks diagonally adds their K-theories, and every output is re-verified
against the target.  The one obstruction at finite matrix size: K0 and K1
always share their free rank, so targets with different ranks are refused.
"""

from kep import FGAbelianGroup, ktheory, realize

# K0 = Z + Z/6, K1 = Z + Z/10
k0 = FGAbelianGroup(1, (6,))
k1 = FGAbelianGroup(1, (10,))
result = realize(k0, k1)
print("target K0 =", k0, "  K1 =", k1)
print("A =")
print(result.a)
print("B =")
print(result.b)
print("achieved:", result.k0, "and", result.k1)

# Verify independently.
check0, check1 = ktheory(result.a, result.b)
print("re-verified:", check0 == k0 and check1 == k1)

# The empty target still needs a matrix: a single block with trivial K.
trivial = realize(FGAbelianGroup.trivial(), FGAbelianGroup.trivial())
print("\ntrivial target -> A =", trivial.a.to_lists(), " B =", trivial.b.to_lists(),
      " K =", (str(trivial.k0), str(trivial.k1)))

# Torsion chains merge like abelian groups, so composite orders also work.
chain = realize(FGAbelianGroup(0, (2, 4, 8)), FGAbelianGroup(0, (25,)))
print("\nchain target (Z/2 + Z/4 + Z/8, Z/25):")
print("A diag =", [chain.a[i, i] for i in range(chain.a.rows)])
print("B diag =", [chain.b[i, i] for i in range(chain.b.rows)])
print("achieved:", chain.k0, "and", chain.k1)

# Mismatched free ranks cannot come from square integer matrices:
# rank(K0) = nullity(I-A) + nullity(I-B) = rank(K1), always.
refused = realize(FGAbelianGroup(2, ()), FGAbelianGroup(1, ()))
print("\nasking for ranks (2, 1):", refused.reason)
