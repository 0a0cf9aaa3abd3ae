"""
The sextic relation of h over Q(P, Q)
=====================================

R(P, Q, T) has constant leading coefficient 197/4 and kills h.  One
specialization that stays irreducible modulo a small prime is enough to
show that R is irreducible, so h has degree 6 over Q(P, Q).
"""
from pinchukmaps import derive_R, minimal_polynomial
from pinchukmaps.fieldext import verify_R_annihilates_h

R = derive_R()
for k, c in enumerate(R.coeffs):
    print(f"T^{k}:", c)

print("R(P, Q, h) == 0 in Q[x, y]:", verify_R_annihilates_h(R))
print("Q-part of R:", R.q_part())

m = minimal_polynomial()
cert = m.certificate
print("degree:", m.degree)
print(f"4 R({cert.P0}, {cert.Q0}, T) = {(R.specialize(cert.P0, cert.Q0) * 4)}")
print("irreducible mod", cert.prime)
