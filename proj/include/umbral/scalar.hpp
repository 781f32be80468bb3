#pragma once

#include <string>
#include <string_view>

#include "umbral/qpoly.hpp"

namespace umbral {

/// Element of the field F = Q(q): a reduced ratio of integer-coefficient
/// polynomials in q.
///
/// Canonical form (enforced on every construction): numerator and denominator
/// are coprime over Q[q], have integer coefficients with coprime contents, and
/// the denominator has positive leading coefficient. Equal field values have
/// identical representations, so identity checks are plain equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(Rational(n)), den_(1) {}  // NOLINT: implicit by design
    Scalar(const Rational& r);                      // NOLINT: implicit by design
    explicit Scalar(const QPoly& p) : num_(p), den_(1) { normalize(); }
    Scalar(QPoly num, QPoly den);

    static Scalar q() { return Scalar(QPoly::variable()); }
    static Scalar parse(std::string_view text);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Exact value at q = q0; throws PoleAtPoint if the reduced denominator vanishes.
    Rational eval(const Rational& q0) const;
    /// Value at q = 1 after full reduction (the classical limit of every
    /// quantity arising here is evaluation after cancellation).
    Rational limit_q1() const { return eval(Rational(1)); }

    std::string text() const;

    Scalar operator-() const;
    Scalar inverse() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Largest q-degree seen in any canonicalized value, for diagnostics.
    static long max_degree_seen();
    static void reset_degree_stat();

private:
    QPoly num_, den_;
    void normalize();
    // Content/sign normalization only, for results already coprime over Q[q].
    static Scalar make_reduced(QPoly num, QPoly den);
    static Scalar add_impl(const Scalar& a, const Scalar& b, bool sub);
};

}  // namespace umbral
