#include "fuchsmon/local_analysis.hpp"

#include <algorithm>

namespace fuchsmon {

namespace {

// Polynomial with coefficients in a quadratic extension, ascending.
using QPoly = std::vector<QuadExt>;

QPoly to_qpoly(const Poly& p) {
    QPoly q;
    q.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) q.push_back(QuadExt(c));
    return q;
}

QuadExt qpoly_eval(const QPoly& p, const QuadExt& x) {
    QuadExt acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Synthetic division by (t - sigma): returns the quotient, assuming the
// remainder (= value at sigma) is known to be zero.
QPoly qpoly_deflate(const QPoly& p, const QuadExt& sigma) {
    QPoly q(p.size() - 1);
    QuadExt carry;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * sigma;
        q[i - 1] = carry;
    }
    return q;
}

// Multiplicity of sigma as a root, deflating p down to a polynomial with
// nonzero value there.
int qpoly_mult(QPoly& p, const QuadExt& sigma) {
    int m = 0;
    while (!p.empty() && qpoly_eval(p, sigma).is_zero() && p.size() > 1) {
        p = qpoly_deflate(p, sigma);
        ++m;
    }
    return m;
}

// Falling factorial x(x-1)...(x-i+1) as a polynomial in x.
Poly falling_factorial(int i) {
    Poly f(Rational(1));
    for (int k = 0; k < i; ++k) f *= Poly(std::vector<Rational>{Rational(-k), Rational(1)});
    return f;
}

std::array<Rational, 4> solve_rational_quartic(const Poly& ind) {
    if (ind.degree() != 4) throw std::domain_error("indicial polynomial must have degree 4");
    RationalRootSplit split = split_rational_roots(ind);
    std::array<Rational, 4> out;
    std::size_t k = 0;
    for (const auto& [r, m] : split.roots)
        for (int j = 0; j < m && k < 4; ++j) out[k++] = r;
    if (k != 4) throw std::domain_error("indicial exponents are not all rational");
    std::sort(out.begin(), out.end());
    return out;
}

ExponentList exponents_at_zero(const ThetaOperator& op) {
    long v = -1;
    for (int j = 0; j <= 4; ++j) {
        if (op.q(j).is_zero()) continue;
        long vj = op.q(j).valuation();
        if (v < 0 || vj < v) v = vj;
    }
    std::vector<Rational> ind(5, Rational(0));
    for (int j = 0; j <= 4; ++j) ind[static_cast<std::size_t>(j)] = op.q(j)[static_cast<std::size_t>(v)];
    Poly indicial(std::move(ind));
    if (indicial.degree() < 4) throw std::domain_error("irregular singularity at 0");
    return solve_rational_quartic(indicial);
}

ExponentList exponents_at_infinity(const ThetaOperator& op) {
    std::size_t dmax = static_cast<std::size_t>(op.t_degree());
    std::array<Poly, 5> rev;
    long v = -1;
    for (int j = 0; j <= 4; ++j) {
        if (op.q(j).is_zero()) continue;
        rev[static_cast<std::size_t>(j)] = op.q(j).reverse(dmax);
        long vj = rev[static_cast<std::size_t>(j)].valuation();
        if (v < 0 || vj < v) v = vj;
    }
    std::vector<Rational> ind(5, Rational(0));
    for (int j = 0; j <= 4; ++j) {
        Rational c = rev[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
        ind[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : -c;
    }
    Poly indicial(std::move(ind));
    if (indicial.degree() < 4) throw std::domain_error("irregular singularity at infinity");
    return solve_rational_quartic(indicial);
}

// Frobenius indicial polynomial at a finite nonzero point sigma, which may
// lie in a quadratic extension. Writing the operator as sum a_i(t) (d/dt)^i
// with a_i = x^{v_i} u_i(x) in the local coordinate x = t - sigma, the terms
// with v_i + (4-i) - v_4 = 0 contribute u_i(sigma) times a falling factorial.
ExponentList exponents_at_finite(const ThetaOperator& op, const QuadExt& sigma) {
    std::array<Poly, 5> a = d_form(op);
    std::array<QuadExt, 5> lead;
    std::array<int, 5> v{};
    std::array<bool, 5> nonzero{};
    for (int i = 0; i <= 4; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        nonzero[static_cast<std::size_t>(i)] = true;
        QPoly q = to_qpoly(a[static_cast<std::size_t>(i)]);
        v[static_cast<std::size_t>(i)] = qpoly_mult(q, sigma);
        lead[static_cast<std::size_t>(i)] = qpoly_eval(q, sigma);
    }
    if (!nonzero[4]) throw std::logic_error("leading coefficient vanished");
    QPoly ind(5);
    for (int i = 0; i <= 4; ++i) {
        if (!nonzero[static_cast<std::size_t>(i)]) continue;
        long L = v[static_cast<std::size_t>(i)] + (4 - i) - v[4];
        if (L < 0) throw std::domain_error("irregular singular point at " + sigma.str());
        if (L > 0) continue;
        QuadExt ci = lead[static_cast<std::size_t>(i)] / lead[4];
        Poly ff = falling_factorial(i);
        for (std::size_t k = 0; k < ff.coefficients().size(); ++k)
            ind[k] += ci * QuadExt(ff[k]);
    }
    std::vector<Rational> rat(5);
    for (std::size_t k = 0; k < 5; ++k) {
        if (!ind[k].is_rational())
            throw std::domain_error("indicial polynomial leaves the rational field at " + sigma.str());
        rat[k] = ind[k].a();
    }
    return solve_rational_quartic(Poly(std::move(rat)));
}

}  // namespace

ExponentList indicial_exponents(const ThetaOperator& op, const SingularPoint& point) {
    if (point.is_infinity()) return exponents_at_infinity(op);
    if (point.is_rational()) {
        if (point.r == 0) return exponents_at_zero(op);
        return exponents_at_finite(op, QuadExt(point.r));
    }
    return exponents_at_finite(op, point.q);
}

SingularityKind classify(ExponentList e) {
    std::sort(e.begin(), e.end());
    SingularityKind k;
    auto order_of = [](const Rational& x) { return static_cast<long>(denom(x).get_si()); };
    if (e[0] == e[3]) {
        k.type = SingularityKind::Type::MUM;
        return k;
    }
    if (e[0] == e[1] && e[2] == e[3] && e[1] != e[2]) {
        k.type = SingularityKind::Type::K;
        k.n = order_of(e[2] - e[0]);
        return k;
    }
    if (e[1] == e[2] && e[0] != e[1] && e[2] != e[3]) {
        if (e[0] + e[3] != 2 * e[1])
            throw std::invalid_argument("exponent pattern (a,b,b,c) requires a+c = 2b");
        k.type = SingularityKind::Type::C;
        k.n = order_of(e[1] - e[0]);
        return k;
    }
    if (e[0] != e[1] && e[1] != e[2] && e[2] != e[3]) {
        bool integral = true;
        for (const auto& x : e) integral = integral && is_integer(x);
        if (integral) {
            bool consecutive = e[1] == e[0] + 1 && e[2] == e[0] + 2 && e[3] == e[0] + 3;
            k.type = consecutive ? SingularityKind::Type::Ordinary : SingularityKind::Type::Apparent;
            return k;
        }
        k.type = SingularityKind::Type::F;
        k.n1 = order_of(e[1] - e[0]);
        k.n2 = order_of(e[3] - e[2]);
        k.sum_ok = e[0] + e[3] == e[1] + e[2];
        return k;
    }
    throw std::invalid_argument("exponent pattern matches no classification row");
}

std::string SingularityKind::str() const {
    switch (type) {
        case Type::MUM: return "MUM";
        case Type::K: return "K(" + std::to_string(n) + ")";
        case Type::C: return "C(" + std::to_string(n) + ")";
        case Type::F:
            return "F(" + std::to_string(n1) + "," + std::to_string(n2) + ")" + (sum_ok ? "" : "!");
        case Type::Apparent: return "Apparent";
        default: return "Ordinary";
    }
}

std::vector<SingularPoint> singular_locus(const ThetaOperator& op) {
    auto genuinely_singular = [&](const SingularPoint& pt) {
        try {
            ExponentList e = indicial_exponents(op, pt);
            return !(e[0] == 0 && e[1] == 1 && e[2] == 2 && e[3] == 3);
        } catch (const std::exception&) {
            return true;  // irregular or non-rational exponents: singular for sure
        }
    };
    std::vector<SingularPoint> out;
    SingularPoint zero = SingularPoint::rational(Rational(0));
    if (genuinely_singular(zero)) out.push_back(zero);
    for (const auto& pt : polynomial_roots(op.q(4))) {
        if (pt.is_rational() && pt.r == 0) continue;
        if (genuinely_singular(pt)) out.push_back(pt);
    }
    SingularPoint inf = SingularPoint::infinity();
    if (genuinely_singular(inf)) out.push_back(inf);
    std::sort(out.begin(), out.end());
    return out;
}

RiemannSymbol riemann_symbol(const ThetaOperator& op) {
    RiemannSymbol rs;
    for (const auto& pt : singular_locus(op)) {
        ExponentList e = indicial_exponents(op, pt);
        rs.entries.push_back(RiemannEntry{pt, e, classify(e)});
    }
    return rs;
}

Rational fuchs_defect(const RiemannSymbol& rs) {
    Rational total = 0;
    for (const auto& entry : rs.entries) {
        Rational s = 0;
        for (const auto& x : entry.exponents) s += x;
        total += s - 6;
    }
    return total;
}

JordanTurns expected_local_jordan(const SingularityKind& kind, const ExponentList& exps) {
    ExponentList e = exps;
    std::sort(e.begin(), e.end());
    JordanTurns j{};
    auto turn = [](const Rational& x) { return frac_part(x); };
    using T = SingularityKind::Type;
    switch (kind.type) {
        case T::MUM:
            for (int i = 0; i < 4; ++i) j[i][i] = turn(e[0]);
            for (int i = 0; i < 3; ++i) j[i][i + 1] = Rational(0);
            break;
        case T::K:
            j[0][0] = j[1][1] = turn(e[0]);
            j[2][2] = j[3][3] = turn(e[2]);
            j[0][1] = j[2][3] = Rational(0);
            break;
        case T::C:
            j[0][0] = turn(e[0]);
            j[1][1] = j[2][2] = turn(e[1]);
            j[1][2] = Rational(0);
            j[3][3] = turn(e[3]);
            break;
        case T::F:
        case T::Apparent:
            for (int i = 0; i < 4; ++i) j[i][i] = turn(e[static_cast<std::size_t>(i)]);
            break;
        default:
            throw std::invalid_argument("ordinary points have no local monodromy");
    }
    return j;
}

}  // namespace fuchsmon
