#ifndef FUCHSMON_QUAD_HPP
#define FUCHSMON_QUAD_HPP

#include "fuchsmon/rational.hpp"

#include <stdexcept>
#include <string>

namespace fuchsmon {

// Element a + b*sqrt(d) of a quadratic extension Q(sqrt(d)), d a non-square
// rational carried by value. Only used for the handful of quadratic singular
// points; operations between mismatched fields throw.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    explicit QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_ == 0) d_ = 0;
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rational d = merge(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Rational d = merge(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational d = merge(x, y);
        return QuadExt(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("division by zero in quadratic field");
        Rational n = y.norm();
        QuadExt num = x * y.conj();
        return QuadExt(num.a_ / n, num.b_ / n, num.d_);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s = to_string(a_);
        s += (b_ < 0 ? " - " : " + ");
        Rational ab = abs(b_);
        if (ab != 1) s += to_string(ab) + "*";
        s += "sqrt(" + to_string(d_) + ")";
        return s;
    }

  private:
    static Rational merge(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("mixed quadratic fields");
        return x.d_;
    }
    Rational a_, b_, d_;
};

}  // namespace fuchsmon

#endif
