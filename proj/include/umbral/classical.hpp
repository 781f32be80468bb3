#pragma once

#include "umbral/poly.hpp"

namespace umbral {

/// q -> 1 limit of a symbolic polynomial, coefficientwise.
/// Every coefficient arising from the calculus is a rational function whose
/// value at 1 exists after reduction; a genuine pole raises PoleAtPoint.
inline Poly<Rational> poly_limit_q1(const Poly<Scalar>& p) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).limit_q1());
    return Poly<Rational>(std::move(c));
}

/// Evaluation of a symbolic polynomial's coefficients at an exact q0.
inline Poly<Rational> poly_eval_q(const Poly<Scalar>& p, const Rational& q0) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).eval(q0));
    return Poly<Rational>(std::move(c));
}

}  // namespace umbral
