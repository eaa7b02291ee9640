#pragma once

// Exact rationals and the group Q/Z.
//
// Every Brauer invariant in this library is a QZ: a reduced fraction
// num/den with 0 <= num < den.  Rat is an ordinary reduced rational used
// for derived quantities (special vectors, t_w) that are not taken mod Z.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace csa_embed {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Integer num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(-num_, den_, Canonical{}); }

    friend bool operator==(const Rat& a, const Rat& b) = default;
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

    /// "a/b", or "a" when the denominator is 1.
    std::string str() const;

private:
    struct Canonical {};
    Rat(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_;
    Integer den_;
};

/// Class of a rational number in Q/Z, canonical representative in [0, 1).
class QZ {
public:
    QZ() : num_(0), den_(1) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const QZ& a, const QZ& b) = default;
    /// Ordering by value of the representative in [0, 1).
    friend bool operator<(const QZ& a, const QZ& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

    std::string str() const;

private:
    friend QZ qz_reduce(const Integer& n, const Integer& d);
    QZ(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_;
    Integer den_;
};

/// Class of n/d mod Z.  Throws InputError when d == 0.
QZ qz_reduce(const Integer& n, const Integer& d);
QZ qz_add(const QZ& a, const QZ& b);
QZ qz_neg(const QZ& a);
/// Least m >= 1 with m*a == 0, i.e. the reduced denominator.
Integer qz_order(const QZ& a);
/// Class of m*a.  Restriction of a local Brauer class along a degree-m extension.
QZ qz_scale(const QZ& a, const Integer& m);
/// Fractional part of a rational, as a class in Q/Z.
QZ qz_class(const Rat& r);

inline QZ operator+(const QZ& a, const QZ& b) { return qz_add(a, b); }
inline QZ operator-(const QZ& a) { return qz_neg(a); }

std::ostream& operator<<(std::ostream& os, const Rat& r);
std::ostream& operator<<(std::ostream& os, const QZ& q);

/// Narrowing conversion that throws InputError if the value is outside uint64.
std::uint64_t to_u64(const Integer& v);

}  // namespace csa_embed
