#pragma once

#include <concepts>
#include <string>

#include "umbral/rational.hpp"
#include "umbral/scalar.hpp"

namespace umbral {

/// Requirements on the coefficient field of the whole calculus.
///
/// Two models ship with the library: Scalar (exact rational functions of q,
/// the symbolic mode) and Rational (q fixed to an exact rational, the numeric
/// cross-check mode).
template <class K>
concept ExactField = std::regular<K> && requires(const K& a, const K& b) {
    K(0L);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.text() } -> std::convertible_to<std::string>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<Scalar>);

/// Simple deterministic check-outcome record used by all verification routines.
struct CheckResult {
    bool pass = true;
    std::string witness;  // first counterexample, empty when pass

    explicit operator bool() const { return pass; }
    static CheckResult ok() { return {}; }
    static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

}  // namespace umbral
