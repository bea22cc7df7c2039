"""Presentations of the monoids B^(+k)(e,e,n) and the isomorphism criterion.

For each 1 <= k <= e-1 the monoid is presented by braid and commutation
relations plus the dual family t_i t_{i-k} = t_j t_{j-k}.  The t-generators
form gcd(e,k) cycles under the k-step, and the monoid is isomorphic to the
k = 1 (braid group) monoid exactly when gcd(e,k) = 1.
"""

import math

from geen_garside import (
    GroupParams,
    emit_presentation,
    format_word,
    is_isomorphic_to_CP,
    t_cycle_components,
)

pres = emit_presentation(GroupParams(3, 3, 1))
print("presentation of B^(+1)(3,3,3):")
print("  generators:", [str(x) for x in pres.generators])
for lhs, rhs in pres.relations:
    print(f"  {format_word(lhs)} = {format_word(rhs)}")

print("\npresentation of B^(+2)(8,8,2): the t-cycle splits in two")
pres8 = emit_presentation(GroupParams(8, 2, 2))
for lhs, rhs in pres8.relations:
    print(f"  {format_word(lhs)} = {format_word(rhs)}")
print("  components of the t-graph:", t_cycle_components(8, 2))

print("\nisomorphism with the k=1 monoid (iff gcd(e,k) = 1):")
for e in (5, 6, 8):
    for k in range(1, e):
        ok, witness = is_isomorphic_to_CP(e, k)
        mark = "yes" if ok else "no "
        extra = ""
        if ok and k > 1:
            images = [str(witness[x]) for x in sorted(witness, key=str) if x.kind == "t"]
            extra = f"  witness t-images: {images}"
        print(f"  e={e} k={k}: {mark} (gcd={math.gcd(e, k)}, "
              f"{t_cycle_components(e, k)} cycle(s)){extra}")
