"""The divisibility interval below lambda^k and its lattice structure.

Membership in [1, lambda^k] can be read directly off the matrix: mark the
entries that are strict left-to-right column minima ("bullets"); every other
entry must be 1 or zeta^k.  The interval, ordered by either left or right
divisibility, is a lattice, and the generator lcms have short closed forms.
"""

from geen_garside import (
    Generator,
    GroupElement,
    atom_lcm_table,
    bullet_rows,
    cached_interval,
    format_word,
    in_interval,
    reduced_expression,
    verify_lattice,
)

w = GroupElement(3, (4, 5, 3, 1, 2), (2, 1, 1, 0, 2))
print("entries (column, exponent) by row:", list(zip(w.perm, w.exps)))
print("bullet rows:", bullet_rows(w))
print("below lambda (k=1)?", in_interval(w, 1))
print("below lambda^2 (k=2)?", in_interval(w, 2))

v = GroupElement(3, (4, 5, 3, 1, 2), (0, 0, 1, 0, 2))
print("\nsame permutation, exponents", v.exps)
print("non-bullet entries are 1 or z^2, so below lambda^2:", in_interval(v, 2))

interval = cached_interval(3, 3, 1)
print(f"\n[1, lambda] in G(3,3,3): {len(interval)} members")
by_len = {}
for ell in interval.lengths:
    by_len[ell] = by_len.get(ell, 0) + 1
print("rank sizes by length:", dict(sorted(by_len.items())))

report = verify_lattice(interval)
print("meet/join total and unique on both sides:", report.all_ok)

print("\ngenerator lcms (join in the interval):")
for (x, y), value in atom_lcm_table(interval).items():
    print(f"  {x} v {y} = {format_word(reduced_expression(value))}")

t0 = interval.atom_ordinal[Generator("t", 0)]
t2 = interval.atom_ordinal[Generator("t", 2)]
meet = interval.meet("left", t0, t2)
print("\nmeet(t0, t2) is the identity:",
      interval.element(meet).is_identity())

top = interval.join("left", t0, interval.atom_ordinal[Generator("s", 3)])
print("join(t0, s3) =", format_word(reduced_expression(interval.element(top))))
