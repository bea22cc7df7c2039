"""Minimal words and the length function on G(e,e,n).

The row-reduction loop turns any monomial matrix into a minimal word over
the generating reflections, one block at a time from the bottom row up.
This script reproduces a worked 4x4 reduction, shows the block structure,
and confirms the length function against a breadth-first search of the
Cayley graph.
"""

from geen_garside import (
    GroupElement,
    GroupParams,
    cayley_length_table,
    enumerate_group,
    evaluate_word,
    format_word,
    lambda_power,
    length,
    maximal_length_elements,
    reduced_expression,
    reduced_expression_blockwise,
)

w = GroupElement(3, (4, 2, 3, 1), (0, 2, 1, 0))
print("w has row entries", list(zip(w.perm, w.exps)))
word = reduced_expression(w)
print("reduced word:", format_word(word), f"(length {length(w)})")
print("evaluates back to w:", evaluate_word(word, GroupParams(3, 4)) == w)

blocks = reduced_expression_blockwise(w)
print("\nblock-by-block (concatenated in order 2, 3, 4):")
for i in (2, 3, 4):
    print(f"  block {i}: {format_word(blocks.block_word(i)) or '(empty)'}")

params = GroupParams(3, 3)
lam = lambda_power(params, 1)
print("\nlambda in G(3,3,3):", format_word(reduced_expression(lam)))
print("length(lambda) = n(n-1) =", length(lam))

print("\nmaximal length census in G(3,3,3):")
tops = maximal_length_elements(params)
print(f"  {len(tops)} diagonal matrices of length 6 "
      f"(formula (e-1)^(n-1) = {(3 - 1) ** 2})")

table = cayley_length_table(params)
agreement = all(length(u) == d for u, d in table.items())
print("\nBFS Cayley distance agrees with the word length on all",
      len(table), "elements:", agreement)

by_length = {}
for u in enumerate_group(params):
    by_length[length(u)] = by_length.get(length(u), 0) + 1
print("length distribution:", dict(sorted(by_length.items())))
