#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp33 = {
    33,
    0x491a4d3df0eedc7bULL,
    R"CATALOG(
# Operator 33: two conifold points and a pair of half-integer K points.
id 33
class 33 70
theta T^2*(T-1)^2 - 1/8*t*T^2*(20*T^2+3) + 1/16*t^2*(8*T^2+8*T+3)*(2*T+1)^2 - 1/32*t^3*(2*T+3)^2*(2*T+1)^2
point 0 exponents 0 0 1 1
point 1 exponents 0 1/2 1/2 1
point 2 exponents 0 1 1 2
point oo exponents 1/2 1/2 3/2 3/2
recipe 1 nested M_0 M_2 M_0
matrix 1
-1 -4 -24 16
0 2 2 4
0 -1 -1 -4
0 -1/4 -1/2 0
matrix 0
1 0 0 0
1 1 0 0
0 0 1 0
0 0 1 1
matrix 2
1 0 0 0
0 1 0 0
-1/2 1 1 12
0 0 0 1
unpublished oo
# the M_0 power is published as 2^3
h M_1^2 M_0^8 M_2
transition
-4 0 192 -16
-2 0 0 0
1 8 -16 0
0 0 8 0
witness_word M_2 M_0 M_1^-1
witness_outer -2
witness
81 -184 240 -2848
34 -77 92 -1128
-23 52 -63 768
-2 9/2 -5 63
product_order 2 1 0
)CATALOG"};

}  // namespace fuchsmon::catalog_data
