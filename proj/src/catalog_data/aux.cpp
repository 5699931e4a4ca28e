#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon::catalog_data {

// FNV-1a 64 checksum of the embedded text; the loader refuses the entry on
// any mismatch, so edits here must update both together.
const EmbeddedText kAux = {
    0,
    0xa309ecd15c1136dcULL,
    R"CATALOG(
# Shared published data that is not tied to a single catalog entry.
# A, B and the C_n pattern generate the nested test subgroups G_n.
gn_a
0 12 -17 4
0 -3 4 -1
1 4 2 0
4 32 -12 5
gn_b
1 0 0 0
0 1 0 1
0 0 1 0
0 0 0 1
# C_n = identity + n * E(r,c) with the published slot below (1-indexed)
gn_c_slot 4 2
# conjugator W taking the operator-35 generators to the A/B/C shape;
# identical to the stored transition matrix of entry 35
op35_conjugator
16 0 80 -16
-4 0 12 0
-1 -4 -1 0
0 0 -1 0
op35_new_gen 0
1 -2 0 0
0 -1 0 0
0 2 1 0
-2 16 -2 -1
op35_new_gen 1
0 12 -17 4
0 -3 4 -1
1 4 2 0
4 32 -12 5
op35_new_gen -1
1 0 0 0
0 1 0 1
0 0 1 0
0 0 0 1
op250_symplectic_gen 1
1 0 0 0
0 1 0 8
0 0 1 0
0 0 0 1
op250_symplectic_gen oo
-1 0 0 0
0 1 0 4
-2 0 -1 0
0 -1 0 -3
op250_symplectic_gen -1
1 -2 -8 12
-6 -5 -12 0
2 3 9 -6
1 2 6 -5
op250_symplectic_gen -2
5 4 4 8
8 9 8 16
-4 -4 -3 -8
-4 -4 -4 -7
known_index G1 122880
known_index G2 11796480
known_index G4 1509949440
known_index op250 23592960
# published pairing constants of the two rank-1 unipotent generators
op153_pairing 1 128
note op153 subgroup shape: block diag(A, Id2) with A in Gamma0(128)
note op153 Zariski closure: block diag(A, Id2) with A in SL(2,Z)
)CATALOG"};

}  // namespace fuchsmon::catalog_data
