/// @file exact.hpp
/// @brief Exact arithmetic: big integers, reduced fractions, roots of unity,
///        and small integer vectors/matrices used for root coordinates.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rootarr {

/// Arbitrary-precision integer.  Used wherever values can grow without a
/// structural bound (Hilbert series coefficients, dimensions).
using ZZ = boost::multiprecision::cpp_int;

/// Root coordinates and change-of-basis matrices are small by nature
/// (entries of finite crystallographic data), so they live in a fixed-width
/// type for speed.  All unbounded quantities use ZZ.
using Coord = std::int64_t;
using IntVec = std::vector<Coord>;

/// Reduced fraction over ZZ.  Invariants: den >= 1, gcd(|num|, den) == 1.
class Fraction {
public:
    Fraction() = default;
    Fraction(long long n) : num_(n) {}  // NOLINT: implicit by design
    Fraction(ZZ n) : num_(std::move(n)) {}
    Fraction(ZZ n, ZZ d);

    const ZZ& num() const { return num_; }
    const ZZ& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Representative of this fraction modulo 1, in [0, 1).
    Fraction mod1() const;

    Fraction operator-() const;
    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    Fraction& operator*=(const Fraction& o);
    Fraction& operator/=(const Fraction& o);

    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const;

private:
    void normalize();

    ZZ num_{0};
    ZZ den_{1};
};

/// Root of unity, stored as its exponent e in Q/Z with representative in
/// [0, 1): the value is exp(2*pi*i*e).  Multiplication adds exponents, and
/// the multiplicative order is exactly the denominator of e.
class UnityRoot {
public:
    UnityRoot() = default;  // the unit 1
    explicit UnityRoot(const Fraction& exponent) : exp_(exponent.mod1()) {}

    static UnityRoot from_exponent(long long num, long long den) {
        return UnityRoot(Fraction(ZZ(num), ZZ(den)));
    }

    const Fraction& exponent() const { return exp_; }

    /// Smallest n >= 1 with q^n == 1.
    long long order() const;

    bool is_one() const { return exp_.is_zero(); }

    UnityRoot inverse() const { return UnityRoot(-exp_); }
    UnityRoot pow(long long k) const { return UnityRoot(exp_ * Fraction(k)); }

    friend UnityRoot operator*(const UnityRoot& a, const UnityRoot& b) {
        return UnityRoot(a.exp_ + b.exp_);
    }
    UnityRoot& operator*=(const UnityRoot& o) { return *this = *this * o; }

    friend bool operator==(const UnityRoot& a, const UnityRoot& b) {
        return a.exp_ == b.exp_;
    }
    friend bool operator!=(const UnityRoot& a, const UnityRoot& b) { return !(a == b); }
    friend bool operator<(const UnityRoot& a, const UnityRoot& b) {
        return a.exp_ < b.exp_;
    }

    std::string str() const;

private:
    Fraction exp_{0};
};

/// Multiplicative order of a root of unity.
long long ord(const UnityRoot& q);

/// Square integer matrix, stored row-major.
struct IntMat {
    std::vector<IntVec> rows;

    static IntMat identity(int n);
    int size() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const IntMat& a, const IntMat& b) { return a.rows == b.rows; }
    friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& m, const IntVec& v);

/// Exact inverse of an integer matrix with determinant +-1.
/// Throws std::domain_error if the matrix is singular or the inverse is not
/// integral.
IntMat inverse_unimodular(const IntMat& m);

bool is_permutation_matrix(const IntMat& m);

/// Primitive vector on the same ray: v == k * p with p primitive
/// (gcd of entries 1, first nonzero entry positive is NOT enforced; the sign
/// of v is kept, k >= 1).  Throws std::domain_error("zero functional") on the
/// zero vector.
std::pair<IntVec, Coord> primitive(const IntVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);

}  // namespace rootarr
