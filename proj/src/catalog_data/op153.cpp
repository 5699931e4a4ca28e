#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp153 = {
    153,
    0x3c156deedb86f227ULL,
    R"CATALOG(
# Operator 153: the entry whose unipotently generated subgroup is thin.
id 153
class 153 197
theta T*(T-1)*(T-1/2)^2 + 1/8*t*T*(28*T^3-16*T^2+17*T-2) + t^2*(19/4*T^4+7/2*T^3+39/8*T^2+13/8*T+19/64) + t^3*(25/8*T^4+6*T^3+109/16*T^2+7/2*T+89/128) + 1/64*t^4*(2*T+1)*(32*T^3+80*T^2+82*T+29) + 1/32*t^5*(2*T+3)*(2*T+1)*(T+1)^2
point 0 exponents 0 1/2 1/2 1
point -1 exponents 0 1/2 1/2 1
point -2 exponents 0 1/2 3/2 2
point oo exponents 1/2 1 1 3/2
recipe -1 nested M_0 M_-2 M_0
matrix -1
1 0 0 0
1 1 0 32
0 0 1 0
0 -1/8 1 -3
matrix 0
-1 -68 448 -2368
0 -91/3 470/3 -3008/3
0 4/3 -17/3 128/3
0 9/8 -45/8 37
matrix -2
-9 0 0 -512
-25/6 1 0 -640/3
1/6 1 -1 112/3
5/32 0 0 9
unpublished oo
h M_-1 M_0 M_-2
transition
0 96 -96 0
40 0 -96 24
8 0 0 0
0 0 3 0
witness_word M_-1^-1 M_0 M_-2 M_0^-1 M_0^-1 M_-1^-1 M_0^-1 M_-2
witness_outer -1
witness
2673 -14016 75072 -315392
3496/3 -5759 32576 -129024
-196/3 352 -1839 7936
-89/2 220 -1244 4929
product_order 0 -1 -2
suspect matrix 0 4 3 printed -45/3 stored -45/8
)CATALOG"};

}  // namespace fuchsmon::catalog_data
