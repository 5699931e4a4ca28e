#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp250 = {
    250,
    0x628f6268d04d6207ULL,
    R"CATALOG(
# Operator 250: the arithmetic entry: full monodromy realizes inside Sp(4,Z).
id 250
class 250 258
theta T*(T-1)*(T-1/2)^2 + 1/8*t*T*(44*T^3-96*T^2+65*T-12) + t^2*(19/2*T^4-23*T^3+131/8*T^2-47/8*T-1/4) + t^3*(5/2*T^4-20*T^3-23/4*T-17/32) - 1/32*t^4*(68*T^2+100*T+53)*(2*T+1)^2 - 1/4*t^5*(8*T^2+14*T+9)*(2*T+1)^2 - 1/8*t^6*(2*T+3)^2*(2*T+1)^2
point 1 exponents 0 1 1 2
point 0 exponents 0 1/2 1/2 1
point -1/2 exponents 0 1 3 4
point -1 exponents 0 1/2 1/2 1
point -2 exponents 0 1 1 2
point oo exponents 1/2 1/2 3/2 3/2
recipe 1 nested M_oo M_-2 M_oo
matrix 1
1 -8 64 -128
0 1 0 0
0 0 1 0
0 0 0 1
matrix oo
1 -4 0 0
1 -3 0 0
0 0 1 -4
0 0 1 -3
matrix -1
-1 24 -80 224
0 7 -24 80
3/8 3/4 -5 28
1/16 -3/8 1 -1
matrix -2
1 0 0 0
0 1 0 0
-1/2 1 1 -8
0 0 0 1
unpublished 0 -1/2
h M_1 M_oo M_-1 M_-2
transition
32 -16 0 0
16 0 0 16
0 0 -2 0
-1 0 -1 0
witness_word M_-1^-1 M_-2^-1 M_-2^-1 M_-1^-1 M_1
witness_outer 1
witness
-175 1592 -10560 16256
-28 257 -1696 2624
9/2 -40 269 -408
15/4 -34 226 -347
product_order -2 -1 1
note the point -1/2 is an apparent singularity with trivial monodromy; the conifold matrix at 0 is not published
)CATALOG"};

}  // namespace fuchsmon::catalog_data
