#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp35 = {
    35,
    0x75e7c12959f3ba93ULL,
    R"CATALOG(
# Operator 35: the one entry with no known maximally unipotent element.
id 35
class 35 71 247 252
theta T*(T-1)*(T-1/2)^2 - 1/4*t*T^2*(4*T^2+3) - 1/4*t^2*(T^2+T+1)*(2*T+1)^2 + 1/4*t^3*(2*T+3)*(2*T+1)*(T+1)^2
point 1 exponents 0 0 1 1
point 0 exponents 0 1/2 1/2 1
point -1 exponents 0 1 1 2
point oo exponents 1/2 1 1 3/2
recipe 0 nested M_1 M_-1 M_1
matrix 0
-1 -24 32 -512
0 3 -8 32
0 1/2 -1 8
0 -1/8 1/2 -1
matrix 1
1 0 0 0
1 1 0 0
0 0 1 0
0 0 1 1
matrix -1
1 0 0 0
0 1 0 0
1/4 1 1 32
0 0 0 1
unpublished oo
h M_0^2 M_1 M_-1
transition
16 0 80 -16
-4 0 12 0
-1 -4 -1 0
0 0 -1 0
product_order 1 0 -1
suspect matrix 0 1 3 printed -32 stored 32
suspect transition_row 1 printed 4 0 20 -4
note no maximally unipotent element is known in this monodromy group
)CATALOG"};

}  // namespace fuchsmon::catalog_data
