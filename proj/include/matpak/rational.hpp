#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matpak::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always reduced: den >= 1, gcd(|num|, den) = 1,
/// zero stored as 0/1. Arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Exact value of a finite double: every finite binary float is a dyadic
    /// rational. 0.1 lifts to 3602879701896397/2^55, not 1/10.
    static Rational from_double(double v) {
        if (v == 0.0) return Rational();
        int exp = 0;
        const double frac = std::frexp(v, &exp); // |frac| in [0.5, 1)
        const auto sig = static_cast<std::int64_t>(std::ldexp(frac, 53));
        Rational r;
        r.num_ = sig;
        r.den_ = 1;
        const int e = exp - 53;
        if (e >= 0) {
            r.num_ <<= e;
        } else {
            r.den_ <<= -e;
        }
        r.normalize();
        return r;
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational abs() const {
        Rational r = *this;
        if (r.num_ < 0) r.num_ = -r.num_;
        return r;
    }

    /// Nearest double (round half to even), exact through the full range
    /// including subnormals. Inverse of from_double on every finite value.
    double to_double() const {
        if (num_ == 0) return 0.0;
        const bool neg = num_ < 0;
        const BigInt a = neg ? BigInt(-num_) : num_;
        const BigInt& b = den_;

        // e = floor(log2(a/b)), determined exactly from bit lengths.
        const auto abits = static_cast<std::int64_t>(boost::multiprecision::msb(a)) + 1;
        const auto bbits = static_cast<std::int64_t>(boost::multiprecision::msb(b)) + 1;
        std::int64_t e = abits - bbits;
        {
            BigInt scaled = b;
            if (e >= 0) {
                scaled <<= static_cast<unsigned>(e);
                if (a < scaled) --e;
            } else {
                BigInt a2 = a;
                a2 <<= static_cast<unsigned>(-e);
                if (a2 < b) --e;
            }
        }

        if (e > 1023) return neg ? -HUGE_VAL : HUGE_VAL;

        // Mantissa quantum is 2^(e-52) for normals, 2^-1074 below that.
        const std::int64_t q_exp = (e >= -1022) ? e - 52 : -1074;
        BigInt n2 = a;
        BigInt d2 = b;
        if (q_exp <= 0) {
            n2 <<= static_cast<unsigned>(-q_exp);
        } else {
            d2 <<= static_cast<unsigned>(q_exp);
        }
        BigInt q, r;
        boost::multiprecision::divide_qr(n2, d2, q, r);
        const BigInt r2 = r << 1;
        if (r2 > d2 || (r2 == d2 && boost::multiprecision::bit_test(q, 0))) ++q;

        const double mag = std::ldexp(q.convert_to<double>(), static_cast<int>(q_exp));
        return neg ? -mag : mag;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace matpak::oracle
