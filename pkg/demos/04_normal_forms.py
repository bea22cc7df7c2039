"""Greedy normal forms and the word problem in the interval Garside groups.

Every signed word over the generators normalizes to Delta^p f_1 ... f_m with
left-weighted simple factors; two words are equal in the group exactly when
their normal forms coincide.  Inverse letters are absorbed through the
balanced Garside element.
"""

from geen_garside import (
    cached_garside,
    format_word,
    reduced_expression,
)

g = cached_garside(3, 3, 1)
interval = g.interval
print(f"B^(1)(3,3,3): {len(interval)} simples, Delta of length",
      interval.lengths[g.delta])


def describe(word):
    nf = g.normal_form(word)
    factors = " | ".join(
        format_word(reduced_expression(interval.element(f))) for f in nf.factors
    )
    print(f"  {word!r:28} -> Delta^{nf.delta_power} [{factors}]")


print("\nnormal forms of some signed words:")
for word in ["t0", "t0 t0^-1", "t1 t0", "t2 t1", "t0 s3 t1^-1",
             "s3 s3 s3", "t0 t1 t2 s3 t0^-1 t1"]:
    describe(word)

print("\nword problem:")
pairs = [("t1 t0", "t2 t1"), ("t0 t2", "t1 t0"), ("t0 t1", "t1 t0"),
         ("s3 t0 s3", "t0 s3 t0")]
for w1, w2 in pairs:
    print(f"  {w1!r} == {w2!r} ?", g.words_equal(w1, w2))

print("\nconjugating a simple by Delta permutes the simples (tau):")
word = "t1 t0 s3 t1 t0 s3 " + "t2 " + "s3^-1 t0^-1 t1^-1 s3^-1 t0^-1 t1^-1"
nf = g.normal_form(word)
print("  Delta t2 Delta^-1 ->",
      format_word(reduced_expression(interval.element(nf.factors[0]))))

g2 = cached_garside(5, 2, 2)
print("\nin B^(2)(5,5,2) the dual relations step by k = 2:")
print("  't0 t3' == 't2 t0' ?", g2.words_equal("t0 t3", "t2 t0"))
print("  't0 t3' == 't3 t0' ?", g2.words_equal("t0 t3", "t3 t0"))
