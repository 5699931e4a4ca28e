#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp152 = {
    152,
    0x1b963a558538ba21ULL,
    R"CATALOG(
# Operator 152: degree-five leading coefficient, two half-integer conifolds.
id 152
class 152 198
theta T*(T-1)*(T-1/2)^2 + 1/2*t*T*(2*T^3-8*T^2+6*T-1) + t^2*(-2*T^4-4*T^3-11/4*T^2-17/4*T-11/16) + t^3*(-2*T^4+1/4*T^2+7/2*T+9/8) + 1/16*t^4*(2*T+1)*(8*T^3+44*T^2+62*T+25) + 1/4*t^5*(2*T+3)*(2*T+1)*(T+1)^2
point 1 exponents 0 1/2 1/2 1
point 0 exponents 0 1/2 1/2 1
point -1 exponents 0 0 2 2
point oo exponents 1/2 1 1 3/2
recipe 0 nested M_-1 M_1 M_-1
matrix 0
-1 -4 32 -64
0 1 0 0
0 1/2 -1 0
0 1/8 -1/2 1
matrix 1
-3 0 0 -128
1 1 0 32
-1/4 1 -1 -16
1/16 0 0 3
matrix -1
1 0 0 0
1 1 0 0
0 0 1 0
0 0 1 1
unpublished oo
h M_0^2 M_1^2 M_-1
transition
0 32 0 0
4 0 0 4
1 0 0 0
0 0 1 0
witness_word M_1^-1 M_1^-1 M_-1^-1 M_1 M_1 M_0 M_0 M_-1
witness_outer -1
witness
-1031 -8 -992 -32768
1032 9 992 32768
-32 0 -31 -1024
33 0 32 1057
product_order 1 0 -1
suspect witness_word printed M_1^-1 M_-1 M_-1^-1 M_1 M_1 M_0 M_0 M_-1
)CATALOG"};

}  // namespace fuchsmon::catalog_data
