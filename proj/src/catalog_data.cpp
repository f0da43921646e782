#include "edl/catalog.hpp"

namespace edl {

// Machine-readable symmetric-space table.  Formula fields are expressions in
// the row parameters n, p, q; `highest` is the printed highest-root pattern
// ("1,2..." fills the middle with 2s up to the restricted rank).  `note`
// records places where the printed source is inconsistent and the encoded
// value is the one forced by the dimension arithmetic.
std::string default_catalog_text() {
  return R"CATALOG(# edl-catalog v1

[AI]
g          = A : n
compact    = SU(n+1)
noncompact = SL(n+1,R)
dim_g      = n^2+2*n
center     = Z(n+1)
h          = SO(n+1)
dim_h      = n*(n+1)/2
restricted = A : n
highest    = 1...
ratio_gh   = sqrt(2)
m_lambda   = 1
m_2lambda  = 0
ratio_g_gh = 1
k          = Z2^n
dim_k      = 0
ratio_hk   = -
constraint = n>=1
audit      = n=1; n=2; n=3
special    = n=1 :: H = SO(2) with phase period T = 4*pi; alpha_h is not defined
special    = n=2 :: H = SO(3) has only the short root, so |alpha_G|/|alpha_H| = 2

[AII]
g          = A : 2*n-1
compact    = SU(2n)
noncompact = SU*(2n)
dim_g      = 4*n^2-1
center     = Z(2*n)
h          = USp(2n)
dim_h      = 2*n^2+n
restricted = A : n-1
highest    = 1...
ratio_gh   = 1
m_lambda   = 4
m_2lambda  = 0
ratio_g_gh = sqrt(2)
k          = SU(2)^n
dim_k      = 3*n
ratio_hk   = 1
constraint = n>=2
audit      = n=2; n=3; n=4

[AIII_a]
g          = A : p+q-1
compact    = SU(p+q)
noncompact = SU(p,q)
dim_g      = (p+q)^2-1
center     = Z(p+q)
h          = S(U(p) x U(q))
dim_h      = p^2+q^2-1
restricted = B : p
highest    = 1,2...
ratio_gh   = 1
m_lambda   = 2, 2*(q-p)
m_2lambda  = 0, 1
ratio_g_gh = 1
k          = S(U(1)^p x U(q-p))
dim_k      = p+(q-p)^2-1
ratio_hk   = 1
constraint = p>=2 & q>=p+1
audit      = p=2,q=3; p=2,q=4; p=3,q=5
period     = H : 2*pi*sqrt((p+q)/(p*q))
period     = K i=1..p-1 : (2*pi/j)*sqrt(i*(i+1))
period     = K : 2*pi*sqrt(2*p*(p+q)/(q-p))
note       = printed highest-root coefficients (1,2,...,2) give the reduced B_p form; the doubled short roots make (2,2,...,2) the binding coordinate range, which is derived from the root data
note       = printed K period index j in T_i = (2pi/j)sqrt(i(i+1)) is undeclared (likely i); stored verbatim

[AIII_b]
g          = A : 2*p-1
compact    = SU(2p)
noncompact = SU(p,p)
dim_g      = 4*p^2-1
center     = Z(2*p)
h          = S(U(p) x U(p))
dim_h      = 2*p^2-1
restricted = C : p
highest    = 2...,1
ratio_gh   = 1
m_lambda   = 1, 2
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = S(U(1)^p) x Z2
dim_k      = p-1
ratio_hk   = 1
constraint = p>=2
audit      = p=2; p=3; p=4
period     = H : 2*pi*sqrt(2/p)
period     = K i=1..p-1 : (2*pi/i)*sqrt(i*(i+1))

[AIV]
g          = A : n
compact    = SU(n+1)
noncompact = SU(1,n)
dim_g      = n^2+2*n
center     = Z(n+1)
h          = S(U(1) x U(n))
dim_h      = n^2
restricted = A : 1
highest    = 2
ratio_gh   = 1
m_lambda   = 2*n-2
m_2lambda  = 1
ratio_g_gh = 1
k          = S(U(n-1) x U(1))
dim_k      = (n-1)^2
ratio_hk   = 1
constraint = n>=2
audit      = n=2; n=3; n=4
period     = H : 4*pi*sqrt(n)
period     = K : 4*pi*sqrt(n-1)

[BI_a]
g          = B : n
compact    = SO(2n+1)
noncompact = SO_0(n,n+1)
dim_g      = 2*n^2+n
center     = Z2
h          = SO(n) x SO(n+1)
dim_h      = n^2
restricted = B : n
highest    = 1,2...
ratio_gh   = 1
m_lambda   = 1, 1
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = Z2^n
dim_k      = 0
ratio_hk   = -
constraint = n>=2
audit      = n=4; n=5; n=6
special    = n=2 :: H = SO(2) x SO(3) whose phase factor has period T = 4*pi, and |alpha_G|/|alpha_H| = sqrt(2)
special    = n=3 :: H = SO(3) x SO(4) with |alpha_G|/|alpha_SO(3)| = sqrt(2) and |alpha_G|/|alpha_SO(4)| = 1

[BI_b]
g          = B : (p+q-1)/2
compact    = SO(p+q)
noncompact = SO_0(p,q)
dim_g      = (p+q)*(p+q-1)/2
center     = Z2
h          = SO(p) x SO(q)
dim_h      = p*(p-1)/2+q*(q-1)/2
restricted = B : p
highest    = 1,2...
ratio_gh   = 1
m_lambda   = 1, q-p
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = SO(q-p) x Z2 ⋉ Z2^p
dim_k      = (q-p)*(q-p-1)/2
ratio_hk   = 1
constraint = p>=2 & q>=p+2 & odd(p+q)
audit      = p=2,q=5; p=3,q=6; p=4,q=7
special    = p=2 & q>3 :: H = SO(2) x SO(q) whose phase factor has period T = 4*pi, and |alpha_G|/|alpha_SO(q)| = 1
special    = p=3 & q>5 :: H = SO(3) x SO(q) with |alpha_G|/|alpha_SO(3)| = sqrt(2) and |alpha_G|/|alpha_SO(q)| = 1

[BII]
g          = B : n
compact    = SO(2n+1)
noncompact = SO_0(1,2n)
dim_g      = 2*n^2+n
center     = Z2
h          = SO(2n)
dim_h      = n*(2*n-1)
restricted = A : 1
highest    = 1
ratio_gh   = 1
m_lambda   = 2*n-1
m_2lambda  = 0
ratio_g_gh = sqrt(2)
k          = SO(2n-1)
dim_k      = (n-1)*(2*n-1)
ratio_hk   = 1
constraint = n>=1
audit      = n=2; n=3; n=4
special    = n=1 :: same as AI with n=1: H = SO(2) with phase period T = 4*pi
note       = printed K = SO(2n) fails the multiplicity sum; dim H - dim K = 2n-1 forces K = SO(2n-1)
note       = ratio |alpha_G|/|alpha_G/H| = sqrt(2) accepted as printed

[CI]
g          = C : n
compact    = USp(2n)
noncompact = Sp(2n,R)
dim_g      = 2*n^2+n
center     = Z2
h          = U(n)
dim_h      = n^2
restricted = C : n
highest    = 2...,1
ratio_gh   = sqrt(2)
m_lambda   = 1, 1
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = Z2^n
dim_k      = 0
ratio_hk   = -
constraint = n>=3
audit      = n=3; n=4; n=5
period     = H : 4*pi*sqrt(n)

[CII_a]
g          = C : p+q
compact    = USp(2p+2q)
noncompact = USp(2p,2q)
dim_g      = (p+q)*(2*p+2*q+1)
center     = Z2
h          = USp(2p) x USp(2q)
dim_h      = 2*p^2+p+2*q^2+q
restricted = B : p
highest    = 2...
ratio_gh   = 1
m_lambda   = 4, 4*(q-p)
m_2lambda  = 0, 3
ratio_g_gh = 1
k          = USp(2(q-p)) x SU(2)^p
dim_k      = (q-p)*(2*(q-p)+1)+3*p
ratio_hk   = 1
constraint = p>=1 & q>=p+1
audit      = p=1,q=2; p=1,q=3; p=2,q=3
note       = printed K = USp(2q-2q) x SU(2)^p; dimension arithmetic forces USp(2(q-p)) x SU(2)^p
note       = m_2lambda = (0,3) accepted as printed; it passes the dimension audit

[CII_b]
g          = C : 2*n
compact    = USp(4n)
noncompact = USp(2n,2n)
dim_g      = 8*n^2+2*n
center     = Z2
h          = USp(2n) x USp(2n)
dim_h      = 4*n^2+2*n
restricted = C : n
highest    = 2...,1
ratio_gh   = 1
m_lambda   = 3, 4
m_2lambda  = 0, 0
ratio_g_gh = sqrt(2)
k          = SU(2)^n
dim_k      = 3*n
ratio_hk   = sqrt(2)
constraint = n>=1
audit      = n=1; n=2; n=3

[DI_a]
g          = D : n
compact    = SO(2n)
noncompact = SO(n,n)
dim_g      = n*(2*n-1)
center     = spin(2*n)
h          = SO(n) x SO(n)
dim_h      = n*(n-1)
restricted = D : n
highest    = 1,2...,1,1
ratio_gh   = 1
m_lambda   = 1
m_2lambda  = 0
ratio_g_gh = 1
k          = Z2^n
dim_k      = 0
ratio_hk   = -
constraint = n>=2
audit      = n=4; n=5; n=6
special    = n=2 :: H = SO(2) x SO(2) whose phase factors both have period T = 4*pi
note       = multiplicities printed (1), (0) only; encoded as multiplicity 1 on every root

[DI_b]
g          = D : n
compact    = SO(2n)
noncompact = SO(n-1,n+1)
dim_g      = n*(2*n-1)
center     = spin(2*n)
h          = SO(n-1) x SO(n+1)
dim_h      = n^2-n+1
restricted = B : n-1
highest    = 1,2...
ratio_gh   = 1
m_lambda   = 1, 2
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = U(1) x Z2 ⋉ Z2^(n-1)
dim_k      = 1
ratio_hk   = 1
constraint = n>=3
audit      = n=3; n=4; n=5
period     = K : 4*pi
special    = n=3 :: H = SO(2) x SO(4) whose phase factor has period T = 4*pi

[DI_c]
g          = D : (p+q)/2
compact    = SO(p+q)
noncompact = SO(p,q)
dim_g      = (p+q)*(p+q-1)/2
center     = spin(p+q)
h          = SO(p) x SO(q)
dim_h      = p*(p-1)/2+q*(q-1)/2
restricted = B : p
highest    = 1,2...
ratio_gh   = 1
m_lambda   = 1, q-p
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = SO(q-p) x Z2 ⋉ Z2^p
dim_k      = (q-p)*(q-p-1)/2
ratio_hk   = 1
constraint = p>=2 & q>=p+4 & even(p+q)
audit      = p=2,q=6; p=3,q=7; p=2,q=8
special    = p=2 & q>3 :: H = SO(2) x SO(q) whose phase factor has period T = 4*pi
special    = p=3 & q>4 :: H = SO(3) x SO(q) with |alpha_G|/|alpha_SO(3)| = sqrt(2) and |alpha_G|/|alpha_SO(q)| = 1

[DII]
g          = D : n
compact    = SO(2n)
noncompact = SO(1,2n-1)
dim_g      = n*(2*n-1)
center     = spin(2*n)
h          = SO(2n-1)
dim_h      = (2*n-1)*(n-1)
restricted = A : 1
highest    = 1
ratio_gh   = 1
m_lambda   = 2*n-2
m_2lambda  = 0
ratio_g_gh = 1
k          = SO(2n-2)
dim_k      = (n-1)*(2*n-3)
ratio_hk   = 1
constraint = n>=2
audit      = n=2; n=3; n=4
special    = n=2 :: H = SO(3) and |alpha_G|/|alpha_SO(3)| = sqrt(2)

[DIII_a]
g          = D : 2*n+1
compact    = SO(4n+2)
noncompact = SO*(4n+2)
dim_g      = (2*n+1)*(4*n+1)
center     = Z4
h          = U(2n+1)
dim_h      = (2*n+1)^2
restricted = B : n
highest    = 2...
ratio_gh   = 1
m_lambda   = 4, 4
m_2lambda  = 0, 1
ratio_g_gh = 1
k          = SU(2)^n x SO(2)
dim_k      = 3*n+1
ratio_hk   = 2
constraint = n>=2
audit      = n=2; n=3; n=4
period     = H : 4*pi*sqrt(2*n+1)
period     = K : 4*pi
note       = H = U(2n+1), isomorphic to SU(2n+1) x U(1) / Z(2n+1)

[DIII_b]
g          = D : 2*n
compact    = SO(4n)
noncompact = SO*(4n)
dim_g      = 2*n*(4*n-1)
center     = Z2xZ2
h          = U(2n)
dim_h      = 4*n^2
restricted = C : n
highest    = 2...,1
ratio_gh   = 1
m_lambda   = 1, 4
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = SU(2)^n
dim_k      = 3*n
ratio_hk   = 1
constraint = n>=2
audit      = n=2; n=3; n=4
period     = H : 4*pi*sqrt(2*n)
note       = H = U(2n), isomorphic to SU(2n) x U(1) / Z(2n)

[EI]
g          = E : 6
compact    = E6(-78)
noncompact = E6(6)
dim_g      = 78
center     = Z3
h          = USp(8)/Z2
dim_h      = 36
restricted = E : 6
highest    = 1,2,2,3,2,1
ratio_gh   = 1
m_lambda   = 1
m_2lambda  = 0
ratio_g_gh = 1
k          = Z2^6
dim_k      = 0
ratio_hk   = -

[EII]
g          = E : 6
compact    = E6(-78)
noncompact = E6(2)
dim_g      = 78
center     = Z3
h          = (USp(2) x SU(6))/Z2
dim_h      = 38
restricted = F : 4
highest    = 2,3,4,2
ratio_gh   = 1
m_lambda   = 1, 2
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = U(1)^2 x Z2
dim_k      = 2
ratio_hk   = 1
period     = K : 4*pi
period     = K : 4*pi*sqrt(3)

[EIII]
g          = E : 6
compact    = E6(-78)
noncompact = E6(-14)
dim_g      = 78
center     = Z3
h          = (U(1) x SO(10))/Z4
dim_h      = 46
restricted = B : 2
highest    = 2,2
ratio_gh   = 1
m_lambda   = 6, 8
m_2lambda  = 0, 1
ratio_g_gh = 1
k          = (SO(6) x U(1))/Z2
dim_k      = 16
ratio_hk   = 1
period     = H : 4*pi*sqrt(3)
period     = K : 4*pi*sqrt(3)

[EIV]
g          = E : 6
compact    = E6(-78)
noncompact = E6(-26)
dim_g      = 78
center     = Z3
h          = F4
dim_h      = 52
restricted = A : 2
highest    = 1,1
ratio_gh   = 1
m_lambda   = 8
m_2lambda  = 0
ratio_g_gh = sqrt(2)
k          = SO(8)
dim_k      = 28
ratio_hk   = 1

[EV]
g          = E : 7
compact    = E7(-133)
noncompact = E7(7)
dim_g      = 133
center     = Z2
h          = SU(8)/Z2
dim_h      = 63
restricted = E : 7
highest    = 2,2,3,4,3,2,1
ratio_gh   = 1
m_lambda   = 1
m_2lambda  = 0
ratio_g_gh = 1
k          = Z2^7
dim_k      = 0
ratio_hk   = -

[EVI]
g          = E : 7
compact    = E7(-133)
noncompact = E7(-5)
dim_g      = 133
center     = Z2
h          = (SU(2) x SO(12))/Z2
dim_h      = 69
restricted = F : 4
highest    = 2,3,4,2
ratio_gh   = 1
m_lambda   = 1, 4
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = SU(2)^3 x Z2 x Z2
dim_k      = 9
ratio_hk   = 1

[EVII]
g          = E : 7
compact    = E7(-133)
noncompact = E7(-25)
dim_g      = 133
center     = Z2
h          = (U(1) x E6)/Z3
dim_h      = 79
restricted = C : 3
highest    = 2,2,1
ratio_gh   = 1
m_lambda   = 1, 8
m_2lambda  = 0, 0
ratio_g_gh = sqrt(2)
k          = SO(8)
dim_k      = 28
ratio_hk   = 1
period     = H : 2*pi*sqrt(3/2)

[EVIII]
g          = E : 8
compact    = E8(-248)
noncompact = E8(8)
dim_g      = 248
center     = 1
h          = Ss(16)
dim_h      = 120
restricted = E : 8
highest    = 2,3,4,6,5,4,3,2
ratio_gh   = 1
m_lambda   = 1
m_2lambda  = 0
ratio_g_gh = 1
k          = Z2^8
dim_k      = 0
ratio_hk   = -

[EIX]
g          = E : 8
compact    = E8(-248)
noncompact = E8(-24)
dim_g      = 248
center     = 1
h          = (SU(2) x E7)/Z2
dim_h      = 136
restricted = F : 4
highest    = 2,3,4,2
ratio_gh   = 1
m_lambda   = 1, 8
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = SO(8) x Z2 x Z2
dim_k      = 28
ratio_hk   = 1

[FI]
g          = F : 4
compact    = F4(-52)
noncompact = F4(4)
dim_g      = 52
center     = 1
h          = USp(6) x USp(2)
dim_h      = 24
restricted = F : 4
highest    = 2,3,4,2
ratio_gh   = 1
m_lambda   = 1, 1
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = Z2^4
dim_k      = 0
ratio_hk   = -

[FII]
g          = F : 4
compact    = F4(-52)
noncompact = F4(-20)
dim_g      = 52
center     = 1
h          = SO(9)
dim_h      = 36
restricted = A : 1
highest    = 2
ratio_gh   = 1
m_lambda   = 8
m_2lambda  = 7
ratio_g_gh = 2*sqrt(2)
k          = SO(7)
dim_k      = 21
ratio_hk   = 1

[G]
g          = G : 2
compact    = G2(-14)
noncompact = G2(2)
dim_g      = 14
center     = 1
h          = SO(4)
dim_h      = 6
restricted = G : 2
highest    = 3,2
ratio_gh   = 1
m_lambda   = 1, 1
m_2lambda  = 0, 0
ratio_g_gh = 1
k          = Z2^2
dim_k      = 0
ratio_hk   = -
)CATALOG";
}

}  // namespace edl
