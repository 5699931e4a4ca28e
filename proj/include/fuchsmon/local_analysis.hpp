#ifndef FUCHSMON_LOCAL_ANALYSIS_HPP
#define FUCHSMON_LOCAL_ANALYSIS_HPP

#include "fuchsmon/theta_op.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fuchsmon {

// Four local exponents, ascending.
using ExponentList = std::array<Rational, 4>;

// Local monodromy class read off the exponent pattern:
//   MUM       (a,a,a,a)                one 4-block
//   K(n)      (a,a,b,b), a<b           two 2-blocks, n = order of e^{2pi i (b-a)}
//   C(n)      (a,b,b,c), a+c=2b        one 2-block between fixed directions
//   F(n1,n2)  four distinct            semisimple, n1 = order from b-a, n2 from d-c
//   Apparent  distinct integers        trivial local monodromy expected
//   Ordinary  (c,c+1,c+2,c+3)          not singular at all
struct SingularityKind {
    enum class Type { MUM, K, C, F, Apparent, Ordinary };
    Type type = Type::Ordinary;
    long n = 0;             // K(n), C(n)
    long n1 = 0, n2 = 0;    // F(n1,n2)
    bool sum_ok = true;     // F only: whether a+d = b+c holds

    std::string str() const;

    friend bool operator==(const SingularityKind& x, const SingularityKind& y) {
        return x.type == y.type && x.n == y.n && x.n1 == y.n1 && x.n2 == y.n2;
    }
    friend bool operator!=(const SingularityKind& x, const SingularityKind& y) { return !(x == y); }
};

struct RiemannEntry {
    SingularPoint point;
    ExponentList exponents;
    SingularityKind kind;
};

struct RiemannSymbol {
    std::vector<RiemannEntry> entries;

    const RiemannEntry* find(const SingularPoint& p) const {
        for (const auto& e : entries)
            if (e.point == p) return &e;
        return nullptr;
    }
};

// Exact local exponents: the four roots of the degree-4 indicial polynomial
// at the point. Throws on irregular points (indicial degree < 4), on roots
// outside Q, and on indicial data outside Q at quadratic points.
ExponentList indicial_exponents(const ThetaOperator& op, const SingularPoint& point);

// Pattern classification of an exponent multiset (input need not be sorted).
SingularityKind classify(ExponentList exps);

// All singular points with exponents and kinds, in SingularPoint order.
RiemannSymbol riemann_symbol(const ThetaOperator& op);

// Sum over all singular points of (exponent sum - 6); an order-4 Fuchsian
// operator with polynomial coefficients satisfies defect = -12.
Rational fuchs_defect(const RiemannSymbol& rs);

// Expected Jordan form of the local monodromy as turn exponents: an engaged
// entry r stands for the value e^{2 pi i r}, an empty entry for 0. Rows and
// columns follow the ascending exponent order. Ordinary points are rejected.
using JordanTurns = std::array<std::array<std::optional<Rational>, 4>, 4>;
JordanTurns expected_local_jordan(const SingularityKind& kind, const ExponentList& exps);

}  // namespace fuchsmon

#endif
