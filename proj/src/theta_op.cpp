#include "fuchsmon/theta_op.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fuchsmon {

namespace {

// Scalar making all five polynomials integral with collective content 1 and
// the T^4 coefficient's leading entry positive.
Rational family_content(const std::array<Poly, 5>& q) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& p : q) {
        for (const auto& c : p.coefficients()) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
    }
    Rational g(num_gcd, den_lcm);
    g.canonicalize();
    if (q[4].leading() < 0) g = -g;
    return g;
}

}  // namespace

void ThetaOperator::canonicalize() {
    if (q_[4].is_zero()) throw std::invalid_argument("operator must have order exactly 4");
    Poly g = q_[4];
    for (int i = 0; i < 4; ++i)
        if (!q_[static_cast<std::size_t>(i)].is_zero()) g = Poly::gcd(g, q_[static_cast<std::size_t>(i)]);
    if (g.degree() > 0)
        for (auto& p : q_)
            if (!p.is_zero()) p = p.divrem(g).first;
    Rational inv = Rational(1) / family_content(q_);
    for (auto& p : q_) p = inv * p;
}

ThetaOperator::ThetaOperator(const OpPoly& p, std::string label) : label_(std::move(label)) {
    if (p.order() != 4)
        throw std::invalid_argument("operator has T-degree " + std::to_string(p.order()) +
                                    ", expected 4");
    for (int i = 0; i <= 4; ++i) q_[static_cast<std::size_t>(i)] = p.coefficient(static_cast<std::size_t>(i));
    canonicalize();
}

ThetaOperator::ThetaOperator(std::array<Poly, 5> q, std::string label)
    : q_(std::move(q)), label_(std::move(label)) {
    canonicalize();
}

std::array<Poly, 5> d_form(const ThetaOperator& op) {
    // Stirling numbers of the second kind S(j,i) for j,i <= 4.
    static const int S2[5][5] = {
        {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 3, 1, 0}, {0, 1, 7, 6, 1}};
    std::array<Poly, 5> a;
    for (int i = 0; i <= 4; ++i) {
        Poly s;
        for (int j = 0; j <= 4; ++j)
            if (S2[j][i] != 0) s += Rational(S2[j][i]) * op.q(j);
        a[static_cast<std::size_t>(i)] = Poly::t_power(static_cast<std::size_t>(i)) * s;
    }
    return a;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    OpPoly parse_expr() {
        OpPoly acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    OpPoly parse_term() {
        OpPoly acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                acc *= parse_factor();
            } else if (eat('/')) {
                std::size_t at = i;
                OpPoly d = parse_factor();
                if (d.order() > 0 || d.coefficient(0).degree() > 0) {
                    i = at;
                    fail("division is only defined by rational constants");
                }
                if (d.is_zero()) {
                    i = at;
                    fail("division by zero");
                }
                Rational c = d.coefficient(0)[0];
                acc *= OpPoly::constant(Rational(1) / c);
            } else {
                return acc;
            }
        }
    }

    OpPoly parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        OpPoly base = parse_base();
        if (eat('^')) {
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected a nonnegative integer exponent");
            unsigned long e = std::stoul(s.substr(start, i - start));
            return base.pow(e);
        }
        return base;
    }

    OpPoly parse_base() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            OpPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'T') {
            ++i;
            return OpPoly::theta();
        }
        if (c == 't') {
            ++i;
            return OpPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return OpPoly::constant(Rational(Integer(s.substr(start, i - start))));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

// Render a nonzero monomial |c|*t^k without its sign.
std::string abs_monomial(const Rational& c, std::size_t k) {
    Rational a = abs(c);
    std::string out;
    if (a != 1 || k == 0) out = to_string(a);
    if (k > 0) {
        if (!out.empty()) out += "*";
        out += "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

ThetaOperator parse_operator(const std::string& text) {
    Parser p(text);
    OpPoly op = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("unexpected trailing input");
    return ThetaOperator(op);
}

std::string print_operator(const ThetaOperator& op) {
    std::string out;
    for (int i = 4; i >= 0; --i) {
        const Poly& c = op.q(i);
        if (c.is_zero()) continue;
        std::size_t nterms = 0, last = 0;
        for (std::size_t k = 0; k < c.coefficients().size(); ++k)
            if (c[k] != 0) {
                ++nterms;
                last = k;
            }
        bool neg = false;
        std::string body;
        if (nterms == 1) {
            neg = c[last] < 0;
            body = abs_monomial(c[last], last);
            if (body == "1" && i > 0) body.clear();
        } else {
            body = "(" + c.str() + ")";
        }
        std::string piece = body;
        if (i > 0) {
            std::string tp = i > 1 ? "T^" + std::to_string(i) : "T";
            piece = body.empty() ? tp : body + "*" + tp;
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

RationalRootSplit split_rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::logic_error("roots of the zero polynomial");
    RationalRootSplit out;
    Poly w = p;
    long v = w.valuation();
    if (v > 0) {
        out.roots.emplace_back(Rational(0), static_cast<int>(v));
        w = w.divrem(Poly::t_power(static_cast<std::size_t>(v))).first;
    }
    if (w.degree() <= 0) {
        out.remainder = w;
        return out;
    }
    w = (Rational(1) / w.content()) * w;
    Integer a0 = numer(w[0]);
    Integer an = numer(w.leading());
    std::set<Rational> tried;
    for (const Integer& pd : divisors(a0)) {
        for (const Integer& qd : divisors(an)) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand(sign ? -pd : pd, qd);
                cand.canonicalize();
                if (!tried.insert(cand).second) continue;
                int m = w.root_multiplicity(cand);
                if (m == 0) continue;
                out.roots.emplace_back(cand, m);
                Poly lin(std::vector<Rational>{-cand, Rational(1)});
                for (int k = 0; k < m; ++k) w = w.divrem(lin).first;
                if (w.degree() <= 0) {
                    out.remainder = w;
                    return out;
                }
            }
        }
    }
    out.remainder = w;
    return out;
}

namespace {

// Write |n| = s^2 * m with m squarefree (trial division).
void square_split(const Integer& n, Integer& s, Integer& m) {
    s = 1;
    m = abs(n);
    for (Integer f = 2; f * f <= m; ++f) {
        Integer ff = f * f;
        while (m % ff == 0) {
            m /= ff;
            s *= f;
        }
    }
}

}  // namespace

std::vector<SingularPoint> polynomial_roots(const Poly& p) {
    RationalRootSplit split = split_rational_roots(p);
    std::vector<SingularPoint> out;
    for (const auto& [r, m] : split.roots) out.push_back(SingularPoint::rational(r));
    Poly rem = split.remainder;
    if (rem.degree() > 0) {
        Poly sf = rem.divrem(Poly::gcd(rem, rem.derivative())).first;
        if (sf.degree() != 2)
            throw std::domain_error("roots beyond quadratic extensions are not supported (factor degree " +
                                    std::to_string(sf.degree()) + ")");
        Rational A = sf[2], B = sf[1], C = sf[0];
        Rational disc = B * B - 4 * A * C;
        Integer n = numer(disc) * denom(disc);
        Integer s, m;
        square_split(n, s, m);
        if (m <= 1) throw std::logic_error("quadratic factor with rational roots survived deflation");
        Rational d(n < 0 ? -m : m);
        Rational mid = -B / (2 * A);
        Rational half = Rational(s, denom(disc)) / (2 * A);
        Poly mp = (Rational(1) / sf.content()) * sf;
        out.push_back(SingularPoint::quadratic(QuadExt(mid, half, d), mp));
        out.push_back(SingularPoint::quadratic(QuadExt(mid, -half, d), mp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The same operator calculus with rational-function coefficients; only used
// to push an operator through a change of variable.
struct OpRat {
    std::vector<RatFun> c;

    static OpRat mult(const RatFun& f) {
        OpRat r;
        if (!f.is_zero()) r.c.push_back(f);
        return r;
    }
    static OpRat theta_times(const RatFun& f) {
        OpRat r;
        r.c.push_back(RatFun());
        r.c.push_back(f);
        return r;
    }
    RatFun at(std::size_t i) const { return i < c.size() ? c[i] : RatFun(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend OpRat operator+(const OpRat& a, const OpRat& b) {
        OpRat r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
        r.trim();
        return r;
    }
    friend OpRat operator*(const OpRat& a, const OpRat& b) {
        OpRat r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.resize(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                RatFun g = b.c[j];
                for (std::size_t m = 0; m <= i; ++m) {
                    if (!g.is_zero()) r.c[i - m + j] += RatFun(binomial(i, m)) * a.c[i] * g;
                    if (m < i) g = g.theta();
                }
            }
        }
        r.trim();
        return r;
    }
};

Poly poly_lcm(const Poly& a, const Poly& b) {
    Poly g = Poly::gcd(a, b);
    return (a * b).divrem(g).first.monic();
}

}  // namespace

ThetaOperator apply_moebius(const ThetaOperator& op, const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d) {
    if (a * d - b * c == 0) throw std::invalid_argument("degenerate moebius map");
    // New variable s with t = (d*s - b)/(-c*s + a), the inverse of the map.
    RatFun phi(Poly(std::vector<Rational>{-b, d}), Poly(std::vector<Rational>{a, -c}));
    RatFun r = phi / phi.theta();
    OpRat R = OpRat::theta_times(r);
    OpRat total;
    OpRat Rpow = OpRat::mult(RatFun(Rational(1)));
    for (int i = 0; i <= 4; ++i) {
        if (!op.q(i).is_zero()) total = total + OpRat::mult(op.q(i).eval(phi)) * Rpow;
        if (i < 4) Rpow = Rpow * R;
    }
    Poly L(Rational(1));
    for (const auto& f : total.c) L = poly_lcm(L, f.den());
    std::array<Poly, 5> q{};
    for (std::size_t i = 0; i < total.c.size() && i < 5; ++i) {
        RatFun cleared = total.c[i] * RatFun(L);
        if (!cleared.is_polynomial()) throw std::logic_error("denominator clearing failed");
        q[i] = cleared.num();
    }
    if (total.c.size() != 5) throw std::logic_error("change of variable did not preserve the order");
    return ThetaOperator(q);
}

ThetaOperator shift_exponents(const ThetaOperator& op, const Rational& sigma) {
    // Substitute T -> T - sigma; solutions pick up a factor t^sigma, so the
    // exponents at 0 increase by sigma.
    std::array<Poly, 5> q{};
    for (int k = 0; k <= 4; ++k)
        for (int i = k; i <= 4; ++i)
            q[static_cast<std::size_t>(k)] +=
                (binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k)) *
                 pow_rat(-sigma, i - k)) *
                op.q(i);
    return ThetaOperator(q, op.label());
}

}  // namespace fuchsmon
