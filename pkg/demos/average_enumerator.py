"""
Averaging the weight enumerator over a whole code family
========================================================

Every double Toeplitz code of length n over F_q is determined by the
band data (t, a, b), so there are q^(n-1) of them.  Summing the weight
enumerator over all of them has a short closed form; this script
checks it against direct enumeration while the family is still small
enough to enumerate, then uses it to read off an existence guarantee.
"""

from dtcodes import (
    GF,
    average_weight_enumerator,
    average_weight_enumerator_bruteforce,
    existence_bound_holds,
    minimal_guaranteed_length,
)

gf = GF(3)
n = 8

# the closed form needs only binomial coefficients
psi = average_weight_enumerator(gf, n)
print(f"family enumerator over F3, n={n}:")
print(" ", list(psi.coeffs))

# the same coefficients, summed code by code over all 3^7 codes
brute = average_weight_enumerator_bruteforce(gf, n)
print("  matches direct enumeration:", psi == brute)

# coefficient 0 counts the codes themselves, one zero word each
print("  psi_0 = q^(n-1):", psi.coeffs[0] == 3 ** (n - 1))

# Averaging argument: if the words of weight < d spread over fewer
# than (q-1) q^(n-1) slots, some code has minimum weight >= d.  The
# smallest stable such length is the guaranteed threshold.
for d in (5, 6, 7):
    length = minimal_guaranteed_length(gf, d)
    print(f"weight >= {d} over F3 is guaranteed from length {length}")
    assert existence_bound_holds(gf, length, d)
    assert not existence_bound_holds(gf, length - 2, d)
