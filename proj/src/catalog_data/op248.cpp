#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp248 = {
    248,
    0xda5f0e8fc39d0d28ULL,
    R"CATALOG(
# Operator 248: six singular points, five published generator matrices.
id 248
class 248
theta T*(T-2)*(T-1)^2 + 1/6*t*T*(T-1)*(37*T^2-61*T+36) + 1/6*t^2*T*(91*T^3-124*T^2+121*T-36) + t^3*(115/6*T^4-5/3*T^3+107/6*T^2+2/3*T+1/2) + t^4*(79/6*T^4+16*T^3+113/6*T^2+8*T+3/2) + 1/6*t^5*(2*T+1)*(14*T^3+29*T^2+27*T+9) + 1/6*t^6*(2*T+3)*(2*T+1)*(T+1)^2
point 0 exponents 0 1 1 2
point -1/2 exponents 0 1 1 2
point -1 exponents 0 0 2 2
point -3/2 exponents 0 1 1 2
point -2 exponents 0 1 1 2
point oo exponents 1/2 1 1 3/2
recipe -1/2 nested M_-1 M_0 M_-1
matrix 0
1 0 0 0
0 1 0 0
-1/2 1 1 16
0 0 0 1
matrix -1/2
1 4 16 32
0 1 0 0
0 0 1 0
0 0 0 1
matrix -1
1 0 0 0
1 1 0 0
0 0 1 0
0 0 1 1
matrix -3/2
3 4 32 32
-1 -1 -16 -16
0 0 1 0
0 0 0 1
matrix -2
17 16 128 0
-8 -7 -64 0
-1 -1 -7 0
1/2 1/2 4 1
unpublished oo
# published powers: M_-1^(2^3), M_-2^(2^2)
h M_0 M_-1/2 M_-1^8 M_-3/2^2 M_-2^4
transition
-8 0 256 -16
-4 0 0 0
1 8 -16 0
0 0 8 0
witness_word M_-3/2^-1 M_0 M_-1/2 M_-3/2^-1
witness_outer -1
witness
-23 -28 -304 -96
-6 -7 -80 -64
5/2 3 33 16
0 0 0 1
product_order 0 -1/2 -1 -3/2 -2
)CATALOG"};

}  // namespace fuchsmon::catalog_data
