#ifndef FUCHSMON_RATIONAL_HPP
#define FUCHSMON_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsmon {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Parse "p", "-p/q" etc.; throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc = 1;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Fractional part in [0,1): q - floor(q).
inline Rational frac_part(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rational(fl);
}

inline Integer floor_int(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return fl;
}

// All positive divisors of |n| (trial division; intended for small catalog values).
inline std::vector<Integer> divisors(const Integer& n_in) {
    Integer n = abs(n_in);
    std::vector<Integer> out;
    if (n == 0) return out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace fuchsmon

#endif
