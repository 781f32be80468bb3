#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial in the deformation parameter q over Rational.
///
/// Canonical form: ascending coefficients with no trailing zeros; the zero
/// polynomial is the empty list (degree -1).
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& constant);  // NOLINT: implicit by design
    QPoly(long constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly variable();  // the polynomial q
    static QPoly monomial(int deg, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& lc() const;  // leading coefficient; polynomial must be nonzero

    Rational eval(const Rational& q0) const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const Rational& s);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Division with remainder over the rationals (b must be nonzero).
    static void divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
    /// Exact division; throws Inconsistent if the remainder is nonzero.
    QPoly divided_exactly_by(const QPoly& d) const;

    /// Positive rational c such that (*this)/c has coprime integer coefficients.
    Rational content() const;  // content of zero polynomial is 0
    QPoly primitive() const;   // (*this)/content(), sign preserved

    /// Primitive gcd over Q[q], positive leading coefficient (primitive PRS).
    static QPoly gcd(const QPoly& a, const QPoly& b);

    std::string text() const;
    static QPoly parse(std::string_view text);

private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace umbral
