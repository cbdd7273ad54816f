#include "rootarr/exact.hpp"

#include <numeric>
#include <sstream>

namespace rootarr {

Fraction::Fraction(ZZ n, ZZ d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Fraction: zero denominator");
    normalize();
}

void Fraction::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    ZZ g = boost::multiprecision::gcd(num_ < 0 ? ZZ(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::mod1() const {
    // Floor division: representative r with 0 <= r < 1 on the same denominator.
    ZZ r = num_ % den_;
    if (r < 0) r += den_;
    return Fraction(r, den_);
}

Fraction Fraction::operator-() const {
    Fraction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

Fraction& Fraction::operator+=(const Fraction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
    if (o.num_ == 0) throw std::domain_error("Fraction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Fraction::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
}

long long UnityRoot::order() const {
    // exponent num/den is reduced, so q^n = 1 iff den | n.
    return exp_.den().convert_to<long long>();
}

std::string UnityRoot::str() const { return "e(" + exp_.str() + ")"; }

long long ord(const UnityRoot& q) { return q.order(); }

IntMat IntMat::identity(int n) {
    IntMat m;
    m.rows.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    const int n = a.size();
    if (n != b.size()) throw std::invalid_argument("IntMat: size mismatch");
    IntMat c;
    c.rows.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Coord aik = a.rows[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c.rows[i][j] += aik * b.rows[k][j];
        }
    return c;
}

IntVec operator*(const IntMat& m, const IntVec& v) {
    const int n = m.size();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("IntMat: size mismatch");
    IntVec w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] += m.rows[i][j] * v[j];
    return w;
}

IntMat inverse_unimodular(const IntMat& m) {
    // Exact Gauss-Jordan over Fraction; the results we invert (changes of
    // basis between chambers) always have determinant +-1, so the inverse
    // must come out integral.
    const int n = m.size();
    std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(2 * n, Fraction(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Fraction(ZZ(m.rows[i][j]));
        a[i][n + i] = Fraction(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse_unimodular: singular matrix");
        std::swap(a[piv], a[col]);
        const Fraction inv_p = Fraction(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv_p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Fraction f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    IntMat out;
    out.rows.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Fraction& f = a[i][n + j];
            if (!f.is_integer())
                throw std::domain_error("inverse_unimodular: inverse is not integral");
            out.rows[i][j] = f.num().convert_to<Coord>();
        }
    return out;
}

bool is_permutation_matrix(const IntMat& m) {
    const int n = m.size();
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        int ones = 0, at = -1;
        for (int j = 0; j < n; ++j) {
            const Coord e = m.rows[i][j];
            if (e == 1) {
                ++ones;
                at = j;
            } else if (e != 0) {
                return false;
            }
        }
        if (ones != 1 || used[at]) return false;
        used[at] = true;
    }
    return true;
}

std::pair<IntVec, Coord> primitive(const IntVec& v) {
    Coord g = 0;
    for (Coord x : v) g = std::gcd(g, x);
    if (g == 0) throw std::domain_error("zero functional");
    IntVec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return {p, g};
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string to_string(const IntMat& m) {
    std::string s = "[";
    for (int i = 0; i < m.size(); ++i) {
        if (i) s += ", ";
        s += to_string(m.rows[i]);
    }
    return s + "]";
}

}  // namespace rootarr
