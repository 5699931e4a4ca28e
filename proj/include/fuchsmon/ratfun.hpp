#ifndef FUCHSMON_RATFUN_HPP
#define FUCHSMON_RATFUN_HPP

#include "fuchsmon/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fuchsmon {

// Rational function over Q(t): numerator / monic denominator, coprime.
class RatFun {
  public:
    RatFun() : num_(), den_(Rational(1)) {}
    explicit RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFun(Poly n) : num_(std::move(n)), den_(Rational(1)) {}
    RatFun(Poly n, Poly d) {
        if (d.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        Poly g = Poly::gcd(n, d);
        if (!g.is_zero() && g.degree() > 0) {
            n = n.divrem(g).first;
            d = d.divrem(g).first;
        }
        Rational lead = d.leading();
        num_ = (Rational(1) / lead) * n;
        den_ = d.monic();
        if (num_.is_zero()) den_ = Poly(Rational(1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) {
        if (y.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(x.num_ * y.den_, x.den_ * y.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    friend bool operator==(const RatFun& x, const RatFun& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
    friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }

    // theta(f) = t * f'(t).
    RatFun theta() const {
        Poly t = Poly::t_power(1);
        return RatFun(t * (num_.derivative() * den_ - num_ * den_.derivative()), den_ * den_);
    }

    template <typename F>
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d == F(Rational(0))) throw std::domain_error("rational function pole");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    Poly num_, den_;
};

}  // namespace fuchsmon

#endif
