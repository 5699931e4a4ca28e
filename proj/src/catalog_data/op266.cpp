#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kOp266 = {
    266,
    0x22e6c369569fe5dcULL,
    R"CATALOG(
# Operator 266: nine singular points including a complex conjugate quadratic pair.
id 266
class 266 273
theta T*(T-1)*(T-1/2)^2 + 1/4*t*T*(44*T^3-48*T^2+37*T-6) + t^2*(50*T^4-56*T^3+40*T^2-5/2*T+3/8) + t^3*(120*T^4-288*T^3-75*T^2-105*T-21) + t^4*(112*T^4-1008*T^3-718*T^2-720*T-303/2) + t^5*(-224*T^4-2464*T^3-1924*T^2-1628*T-324) + t^6*(-960*T^4-4224*T^3-4296*T^2-2448*T-450) + t^7*(-1600*T^4-4992*T^3-6368*T^2-3504*T-696) - 32*t^8*(2*T+1)*(22*T^3+57*T^2+59*T+21) - 128*t^9*(2*T+3)*(2*T+1)*(T+1)^2
point 1/2 exponents 0 1 1 2
point 0 exponents 0 1/2 1/2 1
point -1/4 exponents 0 1 1 2
point -1/2 exponents 0 1/2 1/2 1
point -1 exponents 0 1 1 2
point cplus exponents 0 1 3 4
point cminus exponents 0 1 3 4
point oo exponents 1/2 1 1 3/2
recipe -1 direct M_-1/2 M_-1/4 M_0
matrix -1/4
1 0 0 0
0 1 0 0
1 -6 1 -3
0 0 0 1
matrix -1/2
1 -12/5 24/5 12/5
1 -11/5 -8/5 -24/5
0 3/5 -1/5 -3/5
0 -2/5 4/5 7/5
matrix -1
1 12 -16 0
0 1 0 0
0 0 1 0
0 0 0 1
matrix 0
1 96/5 -48/5 0
0 13/5 -4/5 0
0 36/5 -13/5 0
1 16/5 -28/5 -1
matrix 1/2
5 -12 -16 -12
0 1 0 0
1 -3 -3 -3
0 0 0 1
unpublished cplus cminus oo
# published powers: M_-1/2^(2^2*3*5^2), M_0^(2*3)
h M_-1/4 M_-1/2^300 M_-1 M_0^6 M_1/2
transition
45 0 -24 15
0 0 -4 0
0 15 -3 0
15 0 0 0
witness_word M_-1^-1 M_0 M_1/2^-1 M_-1 M_-1/2^-1
witness_outer 1
witness
-2927/5 624 19208/5 23544/5
-61/5 13 404/5 492/5
-197/5 42 1293/5 1584/5
-197/5 42 1288/5 1589/5
product_order 1/2 -1 -1/2 -1/4 0
suspect matrix -1/2 3 3 printed 1/5 stored -1/5
suspect witness_word printed M_-1/4 M_0 M_1/2 M_-1/4 M_-1/2
note the quadratic point pair carries no published monodromy; both are apparent singularities, derivable numerically only
)CATALOG"};

}  // namespace fuchsmon::catalog_data
