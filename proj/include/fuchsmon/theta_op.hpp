#ifndef FUCHSMON_THETA_OP_HPP
#define FUCHSMON_THETA_OP_HPP

#include "fuchsmon/poly.hpp"
#include "fuchsmon/quad.hpp"
#include "fuchsmon/ratfun.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuchsmon {

// Error carrying the offset into the source text where parsing failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Rational(z);
}

// theta(g) = t * g'(t) on polynomials.
inline Poly theta_poly(const Poly& g) { return Poly::t_power(1) * g.derivative(); }

// Polynomial in the Euler operator T = t*d/dt with coefficients in Q[t].
// The algebra is non-commutative: moving T across a coefficient costs a
// derivative, T^a * g = sum_m binom(a,m) * theta^m(g) * T^(a-m).
class OpPoly {
  public:
    OpPoly() = default;
    static OpPoly constant(const Rational& c) {
        OpPoly p;
        if (c != 0) p.c_.push_back(Poly(c));
        return p;
    }
    static OpPoly variable() {
        OpPoly p;
        p.c_.push_back(Poly::t_power(1));
        return p;
    }
    static OpPoly theta() {
        OpPoly p;
        p.c_.push_back(Poly());
        p.c_.push_back(Poly(Rational(1)));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree in T; -1 for the zero operator.
    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Poly& coefficient(std::size_t i) const {
        static const Poly zero;
        return i < c_.size() ? c_[i] : zero;
    }

    friend OpPoly operator+(const OpPoly& a, const OpPoly& b) {
        OpPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coefficient(i) + b.coefficient(i);
        r.trim();
        return r;
    }
    friend OpPoly operator-(const OpPoly& a, const OpPoly& b) {
        OpPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coefficient(i) - b.coefficient(i);
        r.trim();
        return r;
    }
    OpPoly operator-() const {
        OpPoly r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }
    friend OpPoly operator*(const OpPoly& a, const OpPoly& b) {
        OpPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const Poly& f = a.c_[i];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                Poly g = b.c_[j];
                for (std::size_t m = 0; m <= i; ++m) {
                    if (!g.is_zero()) r.c_[i - m + j] += binomial(i, m) * (f * g);
                    if (m < i) g = theta_poly(g);
                }
            }
        }
        r.trim();
        return r;
    }
    OpPoly& operator+=(const OpPoly& o) { return *this = *this + o; }
    OpPoly& operator-=(const OpPoly& o) { return *this = *this - o; }
    OpPoly& operator*=(const OpPoly& o) { return *this = *this * o; }
    friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const OpPoly& a, const OpPoly& b) { return !(a == b); }

    OpPoly pow(unsigned long e) const {
        OpPoly acc = constant(1), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Poly> c_;  // coefficient of T^i at index i
};

// A singular-point location: a rational number, an element of a quadratic
// extension (kept with its minimal polynomial), or the point at infinity.
struct SingularPoint {
    enum class Type { Rational, Quadratic, Infinity };

    Type type = Type::Infinity;
    Rational r;     // Type::Rational
    QuadExt q;      // Type::Quadratic, b != 0, squarefree radicand
    Poly min_poly;  // Type::Quadratic: primitive integer quadratic vanishing at q

    static SingularPoint rational(const Rational& x) {
        SingularPoint p;
        p.type = Type::Rational;
        p.r = x;
        return p;
    }
    static SingularPoint quadratic(const QuadExt& x, const Poly& mp) {
        SingularPoint p;
        p.type = Type::Quadratic;
        p.q = x;
        p.min_poly = mp;
        return p;
    }
    static SingularPoint infinity() { return SingularPoint{}; }

    bool is_infinity() const { return type == Type::Infinity; }
    bool is_rational() const { return type == Type::Rational; }
    bool is_quadratic() const { return type == Type::Quadratic; }

    // Double-precision approximation isolating the point (planning only;
    // exact or high-precision values are recomputed from r / q when needed).
    std::complex<double> approx() const {
        if (is_infinity()) throw std::domain_error("no finite approximation of infinity");
        if (is_rational()) return {r.get_d(), 0.0};
        double a = q.a().get_d(), b = q.b().get_d(), d = q.d().get_d();
        if (d < 0) return {a, b * std::sqrt(-d)};
        return {a + b * std::sqrt(d), 0.0};
    }

    std::string str() const {
        if (is_infinity()) return "oo";
        if (is_rational()) return to_string(r);
        return q.str();
    }

    friend bool operator==(const SingularPoint& x, const SingularPoint& y) {
        if (x.type != y.type) return false;
        switch (x.type) {
            case Type::Rational: return x.r == y.r;
            case Type::Quadratic: return x.q == y.q;
            default: return true;
        }
    }
    friend bool operator!=(const SingularPoint& x, const SingularPoint& y) { return !(x == y); }

    // Total order: rationals ascending, then quadratic points, then infinity.
    friend bool operator<(const SingularPoint& x, const SingularPoint& y) {
        if (x.type != y.type) return static_cast<int>(x.type) < static_cast<int>(y.type);
        if (x.is_rational()) return x.r < y.r;
        if (x.is_quadratic()) {
            if (x.q.d() != y.q.d()) return x.q.d() < y.q.d();
            if (x.q.a() != y.q.a()) return x.q.a() < y.q.a();
            return x.q.b() < y.q.b();
        }
        return false;
    }
};

// An order-4 operator sum q_i(t) T^i in canonical cleared form: the q_i are
// integer polynomials with no common factor and q_4 has positive leading
// coefficient. Construction normalizes; equality is literal on coefficients.
class ThetaOperator {
  public:
    ThetaOperator() = default;
    explicit ThetaOperator(const OpPoly& p, std::string label = "");
    explicit ThetaOperator(std::array<Poly, 5> q, std::string label = "");

    const Poly& q(int i) const { return q_.at(static_cast<std::size_t>(i)); }
    RatFun p(int i) const { return RatFun(q_.at(static_cast<std::size_t>(i))); }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    long t_degree() const {
        long d = -1;
        for (const auto& p : q_) d = std::max(d, p.degree());
        return d;
    }

    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ThetaOperator& a, const ThetaOperator& b) { return !(a == b); }

  private:
    void canonicalize();
    std::array<Poly, 5> q_{};
    std::string label_;
};

// Coefficients a_i of the same operator written as sum a_i(t) * (d/dt)^i,
// using T^j = sum_i S(j,i) t^i (d/dt)^i with Stirling numbers of the second
// kind. This is the form the series recurrence and finite-point indicial
// computations work from.
std::array<Poly, 5> d_form(const ThetaOperator& op);

// Parse the operator grammar: atoms T, t and integer literals combined with
// + - * / ^ and parentheses; '/' only by nonzero rational constants, '^' only
// by nonnegative integer literals. The result must have order exactly 4.
ThetaOperator parse_operator(const std::string& text);

// Canonical text form, T-descending; parse(print(op)) == op.
std::string print_operator(const ThetaOperator& op);

// Rational roots with multiplicities, plus the unfactored remainder.
struct RationalRootSplit {
    std::vector<std::pair<Rational, int>> roots;
    Poly remainder;
};
RationalRootSplit split_rational_roots(const Poly& p);

// All distinct complex roots of p as exact points; rational roots and
// quadratic-irrational conjugate pairs are supported, anything needing a
// higher-degree field is an error.
std::vector<SingularPoint> polynomial_roots(const Poly& p);

// Singular points of the operator: candidates are 0, the roots of q_4 and
// infinity; a candidate is kept unless its local exponents are exactly
// {0,1,2,3}. Sorted by the SingularPoint order.
std::vector<SingularPoint> singular_locus(const ThetaOperator& op);

// Change of variable sending the locus through t -> (a*t+b)/(c*t+d).
ThetaOperator apply_moebius(const ThetaOperator& op, const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d);

// Conjugation by t^sigma: local exponents at 0 all increase by sigma, those
// at other finite points are unchanged.
ThetaOperator shift_exponents(const ThetaOperator& op, const Rational& sigma);

}  // namespace fuchsmon

#endif
