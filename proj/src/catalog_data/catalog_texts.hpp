// Embedded catalog source text, one block per operator plus one shared
// auxiliary block.  Each block carries the FNV-1a 64 checksum of its exact
// text; the loader verifies it before parsing.

#ifndef FUCHSMON_CATALOG_TEXTS_HPP
#define FUCHSMON_CATALOG_TEXTS_HPP

#include <array>
#include <cstdint>

namespace fuchsmon::catalog_data {

struct EmbeddedText {
    int id;  // operator number, 0 for the auxiliary block
    std::uint64_t fnv;
    const char* text;
};

extern const EmbeddedText kOp33;
extern const EmbeddedText kOp35;
extern const EmbeddedText kOp97;
extern const EmbeddedText kOp152;
extern const EmbeddedText kOp153;
extern const EmbeddedText kOp243;
extern const EmbeddedText kOp248;
extern const EmbeddedText kOp250;
extern const EmbeddedText kOp266;
extern const EmbeddedText kAux;

inline const std::array<const EmbeddedText*, 9>& operator_texts() {
    static const std::array<const EmbeddedText*, 9> all = {
        &kOp33, &kOp35, &kOp97, &kOp152, &kOp153, &kOp243, &kOp248, &kOp250, &kOp266};
    return all;
}

}  // namespace fuchsmon::catalog_data

#endif
