#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp243 = {
    243,
    0xf6c1d7a41dad8541ULL,
    R"CATALOG(
# Operator 243: five singular points, basis recipe built on squared infinity loops.
id 243
class 243
theta T*(T-2)*(T-1)^2 - 1/6*t*T*(T-1)*(19*T^2-19*T+9) + 1/3*t^2*T^2*(11*T^2+4) - 1/24*t^3*(11*T^2+11*T+5)*(2*T+1)^2 + 1/48*t^4*(2*T+3)^2*(2*T+1)^2
point 2 exponents 0 1 1 2
point 3/2 exponents 0 1 1 2
point 1 exponents 0 1/2 1/2 1
point 0 exponents 0 1 1 2
point oo exponents 1/2 1/2 3/2 3/2
recipe 1 nested M_oo^2 M_3/2 M_oo^2
matrix 1
-1 -204 360 -14880
0 43/4 -65/2 650
0 9/10 -2 60
0 -21/160 7/16 -31/4
matrix 2
-2 -12 -120 -1440
-9/16 -5/4 -45/2 -270
3/40 3/10 4 36
3/640 3/160 3/16 13/4
matrix 3/2
1 0 0 0
0 1 0 0
1/20 1 1 88
0 0 0 1
matrix oo
-1 0 0 0
-1/2 -1 0 0
0 0 -1 0
0 0 -1/2 -1
unpublished 0
# published powers: M_1^(2^3), M_oo^(2^5*3)
h M_1^8 M_2 M_3/2^3 M_oo^96
transition
-5120 -1920 -480 3200
0 -360 120 -160
128 48 0 -48
0 3 0 0
witness_word M_oo M_2^-1 M_1 M_1 M_oo^-1 M_1^-1 M_1^-1
witness_outer 1
witness
-578 167628 -597720 11175840
-5937/16 430453/4 -767385/2 7174590
87/8 -31539/10 11248 -210276
783/128 -283851/160 101223/16 -473117/4
product_order 1 3/2 2
suspect matrix 2 3 1 printed 3/49 stored 3/40
note the conifold matrix at 0 is not published
)CATALOG"};

}  // namespace fuchsmon::catalog_data
