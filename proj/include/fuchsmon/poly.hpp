#ifndef FUCHSMON_POLY_HPP
#define FUCHSMON_POLY_HPP

#include "fuchsmon/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsmon {

// Dense univariate polynomial over Q, coefficients ascending in t.
// The zero polynomial is the empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) coef_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coef) : coef_(std::move(coef)) { trim(); }

    static Poly t_power(std::size_t k, const Rational& c = Rational(1)) {
        if (c == 0) return Poly();
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coef_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    const Rational& operator[](std::size_t i) const {
        static const Rational zero(0);
        return i < coef_.size() ? coef_[i] : zero;
    }
    const std::vector<Rational>& coefficients() const { return coef_; }
    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coef_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) v[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) v[i] += b.coef_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) v[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) v[i] -= b.coef_[i];
        return Poly(std::move(v));
    }
    Poly operator-() const {
        std::vector<Rational> v = coef_;
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.coef_.size() + b.coef_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rational& c, const Poly& a) {
        if (c == 0) return Poly();
        std::vector<Rational> v = a.coef_;
        for (auto& x : v) x *= c;
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned long e) const {
        Poly acc(Rational(1)), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    // Evaluation over any field with Rational-convertible scalars (Horner).
    template <typename F>
    F eval(const F& x) const {
        F acc = F(Rational(0));
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + F(coef_[i]);
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
        return acc;
    }

    Poly derivative() const {
        if (coef_.size() <= 1) return Poly();
        std::vector<Rational> v(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * coef_[i];
        return Poly(std::move(v));
    }

    // Quotient and remainder by a nonzero divisor.
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
        std::vector<Rational> r = coef_;
        long dd = d.degree();
        if (degree() < dd) return {Poly(), *this};
        std::vector<Rational> q(coef_.size() - d.coef_.size() + 1, Rational(0));
        for (long i = degree(); i >= dd; --i) {
            if (r[i] == 0) continue;
            Rational f = r[i] / d.leading();
            q[i - dd] = f;
            for (long j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.coef_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    // Multiplicity of the root x (0 if not a root).
    int root_multiplicity(const Rational& x) const {
        if (is_zero()) throw std::logic_error("root multiplicity in zero polynomial");
        Poly p = *this;
        Poly lin(std::vector<Rational>{-x, Rational(1)});
        int m = 0;
        while (p.eval(x) == 0) {
            p = p.divrem(lin).first;
            ++m;
        }
        return m;
    }

    // Valuation at t = 0 (index of lowest nonzero coefficient); -1 for zero poly.
    long valuation() const {
        for (std::size_t i = 0; i < coef_.size(); ++i)
            if (coef_[i] != 0) return static_cast<long>(i);
        return -1;
    }

    // Substitute t -> t + a (Taylor shift).
    Poly shift(const Rational& a) const {
        Poly res;
        Poly base(Rational(1));
        Poly lin(std::vector<Rational>{a, Rational(1)});
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] != 0) res += coef_[i] * base;
            if (i + 1 < coef_.size()) base *= lin;
        }
        return res;
    }

    // Substitute t -> p(t).
    Poly compose(const Poly& p) const {
        Poly acc;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * p + Poly(coef_[i]);
        return acc;
    }

    // Reverse coefficients against a fixed degree bound: t^n * P(1/t) for n >= deg.
    Poly reverse(std::size_t n) const {
        if (degree() > static_cast<long>(n)) throw std::invalid_argument("reverse bound below degree");
        std::vector<Rational> v(n + 1, Rational(0));
        for (std::size_t i = 0; i < coef_.size(); ++i) v[n - i] = coef_[i];
        return Poly(std::move(v));
    }

    // gcd of integer content and lcm of denominators: the rational c with
    // (1/c) * P integer-primitive.
    Rational content() const {
        if (is_zero()) return Rational(0);
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& c : coef_) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational c(num_gcd, den_lcm);
        c.canonicalize();
        if (leading() < 0) c = -c;
        return c;
    }

    // Monic normalization (divides by the leading coefficient).
    Poly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading()) * *this;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divrem(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    // Human-readable form, ascending powers suppressed to the usual notation.
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coef_.size(); i-- > 0;) {
            const Rational& c = coef_[i];
            if (c == 0) continue;
            std::string term;
            Rational a = abs(c);
            if (i == 0)
                term = to_string(a);
            else {
                if (a != 1) term = to_string(a) + "*";
                term += var;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (s.empty())
                s = (c < 0 ? "-" : "") + term;
            else
                s += (c < 0 ? " - " : " + ") + term;
        }
        return s;
    }

  private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<Rational> coef_;
};

}  // namespace fuchsmon

#endif
