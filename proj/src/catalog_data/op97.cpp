#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp97 = {
    97,
    0x43df5662b7732ab7ULL,
    R"CATALOG(
# Operator 97: mirror-image twin of the first entry's singularity pattern.
id 97
class 97 98
theta T*(T-1)*(T-1/2)^2 + 1/8*t*T^2*(20*T^2+7) + 1/32*t^2*(16*T^2+16*T+7)*(2*T+1)^2 + 1/32*t^3*(2*T+3)^2*(2*T+1)^2
point 0 exponents 0 1/2 1/2 1
point -1 exponents 0 0 1 1
point -2 exponents 0 1 1 2
point oo exponents 1/2 1/2 3/2 3/2
recipe -2 nested M_-1 M_0 M_-1
matrix 0
-3 0 0 -32
2 1 0 16
-1/2 1 -1 -8
1/4 0 0 3
matrix -2
1 4 -16 0
0 1 0 0
0 0 1 0
0 0 0 1
matrix -1
1 0 0 0
1 1 0 0
0 0 1 0
0 0 1 1
unpublished oo
h M_0^2 M_-2 M_-1
transition
0 16 0 0
8 0 0 4
2 0 0 0
0 0 1 0
witness_word M_-2 M_0^-1 M_-2^-1 M_-1^-1 M_-2 M_-1 M_0
witness_outer -1
witness
157 -772 2704 1920
-36 181 -624 -448
-10 52 -175 -128
-13 64 -224 -159
product_order 0 -2 -1
suspect witness_word printed M_-2 M_0^-1 M_-2^-1 M_-1^-1 M_-2 M_-2 M_0
)CATALOG"};

}  // namespace fuchsmon::catalog_data
