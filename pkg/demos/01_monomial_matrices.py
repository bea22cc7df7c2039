"""Monomial matrices: exact arithmetic in the reflection group G(e,e,n).

Elements are stored as a permutation plus a vector of root-of-unity
exponents, so every product, inverse and comparison is exact integer
arithmetic.  This script builds the generators of G(3,3,4), checks a few of
their defining relations, and walks through the group order formula.
"""

from geen_garside import (
    Generator,
    GroupParams,
    atoms,
    enumerate_group,
    evaluate_word,
    generator_matrix,
    identity,
    inverse,
    lambda_power,
    multiply,
)


def show(name, w):
    rows = []
    for i in range(1, w.n + 1):
        col, a = w.entry_of_row(i)
        entry = "1" if a == 0 else f"z^{a}"
        rows.append(f"row {i}: {entry} in column {col}")
    print(f"{name}: perm={w.perm} exps={w.exps}")
    for row in rows:
        print("   " + row)


params = GroupParams(3, 4)
print(f"G(3,3,4) has order e^(n-1) * n! = {params.order()}")
print(f"generating reflections: {[str(x) for x in atoms(params)]}\n")

t1 = generator_matrix(Generator("t", 1), params)
s3 = generator_matrix(Generator("s", 3), params)
show("t1", t1)
show("s3", s3)

print("\nGenerators are involutions:")
print("  t1 * t1 = identity:", multiply(t1, t1).is_identity())

print("\nThe dual dihedral relation t_i t_{i-1} = t_j t_{j-1}:")
for i in range(3):
    w = evaluate_word([Generator("t", i), Generator("t", (i - 1) % 3)], params)
    print(f"  t{i} t{(i - 1) % 3} -> perm={w.perm} exps={w.exps}")

lam = lambda_power(params, 1)
show("\nlambda (the future Garside element)", lam)
print("lambda^3 = identity:", lambda_power(params, 3).is_identity())

print("\nInverses are conjugate transposes:")
w = evaluate_word(
    [Generator("t", 0), Generator("s", 3), Generator("t", 1)], params
)
show("w = t0 s3 t1", w)
show("w^(-1)", inverse(w))
print("w * w^(-1) = identity:", multiply(w, inverse(w)).is_identity())

count = len(enumerate_group(params))
print(f"\nfull enumeration: {count} elements, identity present:",
      identity(params) in enumerate_group(params))
