#ifndef FUCHSMON_QMAT_HPP
#define FUCHSMON_QMAT_HPP

#include "fuchsmon/poly.hpp"
#include "fuchsmon/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsmon {

using QVec4 = std::array<Rational, 4>;

// Exact 4x4 matrix over Q.
class QMat4 {
  public:
    QMat4() {
        for (auto& row : e_)
            for (auto& x : row) x = 0;
    }
    static QMat4 identity() {
        QMat4 m;
        for (int i = 0; i < 4; ++i) m.e_[i][i] = 1;
        return m;
    }
    static QMat4 from_rows(const std::array<std::array<Rational, 4>, 4>& rows) {
        QMat4 m;
        m.e_ = rows;
        return m;
    }

    Rational& operator()(int i, int j) { return e_[i][j]; }
    const Rational& operator()(int i, int j) const { return e_[i][j]; }

    friend QMat4 operator*(const QMat4& a, const QMat4& b) {
        QMat4 c;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                if (a.e_[i][k] == 0) continue;
                for (int j = 0; j < 4; ++j) c.e_[i][j] += a.e_[i][k] * b.e_[k][j];
            }
        return c;
    }
    friend QVec4 operator*(const QMat4& a, const QVec4& v) {
        QVec4 w{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) w[i] += a.e_[i][j] * v[j];
        return w;
    }
    friend QMat4 operator+(const QMat4& a, const QMat4& b) {
        QMat4 c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c.e_[i][j] = a.e_[i][j] + b.e_[i][j];
        return c;
    }
    friend QMat4 operator-(const QMat4& a, const QMat4& b) {
        QMat4 c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c.e_[i][j] = a.e_[i][j] - b.e_[i][j];
        return c;
    }
    friend QMat4 operator*(const Rational& s, const QMat4& a) {
        QMat4 c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c.e_[i][j] = s * a.e_[i][j];
        return c;
    }
    friend bool operator==(const QMat4& a, const QMat4& b) { return a.e_ == b.e_; }
    friend bool operator!=(const QMat4& a, const QMat4& b) { return !(a == b); }

    QMat4 transpose() const {
        QMat4 c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c.e_[i][j] = e_[j][i];
        return c;
    }

    bool is_zero() const {
        for (const auto& row : e_)
            for (const auto& x : row)
                if (x != 0) return false;
        return true;
    }
    bool is_identity() const { return *this == identity(); }
    bool is_integral() const {
        for (const auto& row : e_)
            for (const auto& x : row)
                if (!is_integer(x)) return false;
        return true;
    }

    Rational trace() const { return e_[0][0] + e_[1][1] + e_[2][2] + e_[3][3]; }

    Rational det() const {
        QMat4 a = *this;
        Rational d = 1;
        for (int c = 0; c < 4; ++c) {
            int p = -1;
            for (int r = c; r < 4; ++r)
                if (a.e_[r][c] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            if (p != c) {
                std::swap(a.e_[p], a.e_[c]);
                d = -d;
            }
            d *= a.e_[c][c];
            for (int r = c + 1; r < 4; ++r) {
                if (a.e_[r][c] == 0) continue;
                Rational f = a.e_[r][c] / a.e_[c][c];
                for (int j = c; j < 4; ++j) a.e_[r][j] -= f * a.e_[c][j];
            }
        }
        return d;
    }

    int rank() const {
        QMat4 a = *this;
        int rk = 0;
        for (int c = 0; c < 4 && rk < 4; ++c) {
            int p = -1;
            for (int r = rk; r < 4; ++r)
                if (a.e_[r][c] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            std::swap(a.e_[p], a.e_[rk]);
            for (int r = rk + 1; r < 4; ++r) {
                if (a.e_[r][c] == 0) continue;
                Rational f = a.e_[r][c] / a.e_[rk][c];
                for (int j = c; j < 4; ++j) a.e_[r][j] -= f * a.e_[rk][j];
            }
            ++rk;
        }
        return rk;
    }

    QMat4 inverse() const {
        QMat4 a = *this, inv = identity();
        for (int c = 0; c < 4; ++c) {
            int p = -1;
            for (int r = c; r < 4; ++r)
                if (a.e_[r][c] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) throw std::domain_error("singular matrix has no inverse");
            std::swap(a.e_[p], a.e_[c]);
            std::swap(inv.e_[p], inv.e_[c]);
            Rational piv = a.e_[c][c];
            for (int j = 0; j < 4; ++j) {
                a.e_[c][j] /= piv;
                inv.e_[c][j] /= piv;
            }
            for (int r = 0; r < 4; ++r) {
                if (r == c || a.e_[r][c] == 0) continue;
                Rational f = a.e_[r][c];
                for (int j = 0; j < 4; ++j) {
                    a.e_[r][j] -= f * a.e_[c][j];
                    inv.e_[r][j] -= f * inv.e_[c][j];
                }
            }
        }
        return inv;
    }

    // Integer power, negative exponents via the inverse.
    QMat4 pow(long k) const {
        QMat4 base = k >= 0 ? *this : inverse();
        unsigned long n = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        QMat4 acc = identity();
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    // Characteristic polynomial det(X*I - M), exact, ascending coefficients.
    Poly charpoly() const {
        // Faddeev-LeVerrier: c_n = 1; M_1 = M; c_{n-k} from traces.
        std::array<Rational, 5> c;
        c[4] = 1;
        QMat4 Mk = *this;
        QMat4 I = identity();
        for (int k = 1; k <= 4; ++k) {
            Rational ck = -Mk.trace() / Rational(k);
            c[4 - k] = ck;
            if (k < 4) Mk = *this * (Mk + ck * I);
        }
        return Poly(std::vector<Rational>(c.begin(), c.end()));
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            s += "[";
            for (int j = 0; j < 4; ++j) {
                s += to_string(e_[i][j]);
                if (j < 3) s += ", ";
            }
            s += "]\n";
        }
        return s;
    }

  private:
    std::array<std::array<Rational, 4>, 4> e_;
};

// Dense rational matrix of arbitrary shape; used for the stacked linear
// systems (invariant-form and simultaneous-conjugacy solves).
class RatMat {
  public:
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            Rational piv = at(r, c);
            for (std::size_t j = c; j < cols_; ++j) at(r, j) /= piv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Rational f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    // Basis of the right nullspace (one vector per free column).
    std::vector<std::vector<Rational>> nullspace() const {
        RatMat m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[fc] = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, fc);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t rank() const {
        RatMat m = *this;
        return m.rref().size();
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

// Scale a rational vector to a primitive integer vector with positive first
// nonzero entry. Throws on the zero vector.
inline std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
    Integer den_lcm = 1, num_gcd = 0;
    bool all_zero = true;
    for (const auto& x : v) {
        if (x == 0) continue;
        all_zero = false;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (all_zero) throw std::invalid_argument("primitive scaling of the zero vector");
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational y = v[i] * Rational(den_lcm);
        w[i] = numer(y);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), w[i].get_mpz_t());
    }
    int sign = 0;
    for (auto& x : w) {
        x /= num_gcd;
        if (sign == 0 && x != 0) sign = (x > 0) ? 1 : -1;
    }
    if (sign < 0)
        for (auto& x : w) x = -x;
    return w;
}

// The standard symplectic form [[0, I2], [I2*-1, 0]] pairing e1<->e3, e2<->e4.
inline QMat4 standard_omega() {
    QMat4 w;
    w(0, 2) = 1;
    w(1, 3) = 1;
    w(2, 0) = -1;
    w(3, 1) = -1;
    return w;
}

inline bool is_symplectic(const QMat4& m) {
    QMat4 om = standard_omega();
    return m.transpose() * om * m == om;
}

}  // namespace fuchsmon

#endif
