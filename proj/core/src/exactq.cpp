#include "csa_embed/exactq.hpp"

#include "csa_embed/error.hpp"

#include <ostream>

namespace csa_embed {

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    Integer g = gcd(a, b);
    Integer r = a / g * b;
    return r < 0 ? Integer(-r) : r;
}

Rat::Rat(Integer num, Integer den)
{
    if (den == 0)
        throw Error(ErrorKind::invalid_argument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Rat operator+(const Rat& a, const Rat& b)
{
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b)
{
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b)
{
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b)
{
    if (b.num_ == 0)
        throw Error(ErrorKind::invalid_argument, "division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rat::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string QZ::str() const
{
    if (num_ == 0)
        return "0";
    return num_.str() + "/" + den_.str();
}

QZ qz_reduce(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw Error(ErrorKind::invalid_argument, "zero denominator");
    Integer num = n;
    Integer den = d;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;  // truncating; may be negative
    if (num < 0)
        num += den;
    if (num == 0)
        return QZ(0, 1);
    Integer g = gcd(num, den);
    return QZ(num / g, den / g);
}

QZ qz_add(const QZ& a, const QZ& b)
{
    return qz_reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

QZ qz_neg(const QZ& a)
{
    return qz_reduce(-a.num(), a.den());
}

Integer qz_order(const QZ& a)
{
    return a.den();
}

QZ qz_scale(const QZ& a, const Integer& m)
{
    return qz_reduce(a.num() * m, a.den());
}

QZ qz_class(const Rat& r)
{
    return qz_reduce(r.num(), r.den());
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

std::ostream& operator<<(std::ostream& os, const QZ& q)
{
    return os << q.str();
}

std::uint64_t to_u64(const Integer& v)
{
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorKind::invalid_argument, "value " + v.str() + " outside 64-bit range");
    return static_cast<std::uint64_t>(v);
}

}  // namespace csa_embed
