#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "umbral/errors.hpp"

namespace umbral {

/// Arbitrary-precision rational number, always reduced with positive denominator.
///
/// Thin value wrapper around GMP's mpq_class that adds the canonical text form
/// used throughout the library ("5/7", "-3", "0") and division-by-zero checking.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars embed integers
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string text() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow(unsigned e) const;

private:
    mpq_class v_;
};

Rational gcd(const Rational& a, const Rational& b);  // of integers, by value
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace umbral
