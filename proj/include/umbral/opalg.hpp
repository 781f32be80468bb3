#pragma once

#include <functional>
#include <vector>

#include "umbral/poly.hpp"

namespace umbral {

/// Truncated indicator of a partial_psi-shift-invariant operator.
///
/// The operator T = sum_k (a_k / k_psi!) partial_psi^k is stored through its
/// normalized coefficients t_k = a_k / k_psi! up to the truncation order N.
/// In this normalization the psi-binomial convolution of the a-coefficients
/// (the product of the isomorphic psi-exponential series) becomes the plain
/// Cauchy product, which is what multiply() computes; the equivalence of the
/// two convolutions is itself asserted in the test suite.
///
/// Truncation limits scope, never accuracy: the action on any polynomial of
/// degree <= N is exact because higher powers of partial_psi annihilate it.
template <ExactField K>
class Indicator {
public:
    Indicator(PsiPtr<K> psi, int order, std::vector<K> normalized)
        : psi_(std::move(psi)), t_(std::move(normalized)) {
        if (order < 0) throw InvalidParams("negative truncation order");
        t_.resize(static_cast<size_t>(order) + 1, K(0));
    }

    static Indicator zero(PsiPtr<K> psi, int order) { return {std::move(psi), order, {}}; }
    static Indicator identity(PsiPtr<K> psi, int order) { return {std::move(psi), order, {K(1)}}; }
    /// The operator partial_psi itself: t = (0, 1, 0, ...).
    static Indicator partial(PsiPtr<K> psi, int order) {
        return {std::move(psi), order, {K(0), K(1)}};
    }
    /// E^a(partial_psi) = sum a^k/k_psi! partial_psi^k.
    static Indicator translation(PsiPtr<K> psi, const K& a, int order) {
        std::vector<K> t(static_cast<size_t>(order) + 1);
        K ak(1);
        for (int k = 0; k <= order; ++k) {
            t[static_cast<size_t>(k)] = ak / psi->factorial(k);
            ak = ak * a;
        }
        return {std::move(psi), order, std::move(t)};
    }
    /// From the a_k coefficient convention: t_k = a_k / k_psi!.
    static Indicator from_exp_coeffs(PsiPtr<K> psi, const std::vector<K>& a, int order) {
        std::vector<K> t(static_cast<size_t>(order) + 1, K(0));
        for (int k = 0; k <= order && k < static_cast<int>(a.size()); ++k)
            t[static_cast<size_t>(k)] = a[static_cast<size_t>(k)] / psi->factorial(k);
        return {std::move(psi), order, std::move(t)};
    }

    const PsiPtr<K>& psi() const { return psi_; }
    int order() const { return static_cast<int>(t_.size()) - 1; }
    K normalized(int k) const {
        if (k < 0 || k > order()) return K(0);
        return t_[static_cast<size_t>(k)];
    }
    /// a_k = t_k * k_psi!.
    std::vector<K> exp_coeffs() const {
        std::vector<K> a;
        a.reserve(t_.size());
        for (int k = 0; k <= order(); ++k) a.push_back(t_[static_cast<size_t>(k)] * psi_->factorial(k));
        return a;
    }

    bool is_zero() const {
        for (const auto& c : t_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Copy at a different truncation order. Dropping coefficients is exact
    /// for every action on polynomials within the new budget.
    Indicator truncated(int new_order) const {
        std::vector<K> t(t_.begin(),
                         t_.begin() + std::min<size_t>(t_.size(), static_cast<size_t>(new_order) + 1));
        return {psi_, new_order, std::move(t)};
    }

    /// Exact action on polynomials of degree <= N.
    Poly<K> apply(const Poly<K>& p) const {
        if (p.degree() > order())
            throw TruncationExceeded("apply: degree " + std::to_string(p.degree()) +
                                     " exceeds order " + std::to_string(order()));
        Poly<K> acc = normalized(0) * p;
        Poly<K> dk = p;
        for (int k = 1; k <= p.degree(); ++k) {
            dk = psi_derivative(*psi_, dk);
            if (!normalized(k).is_zero()) acc += normalized(k) * dk;
        }
        return acc;
    }

    friend bool operator==(const Indicator& a, const Indicator& b) {
        return a.order() == b.order() && a.t_ == b.t_ && a.psi_->same_family(*b.psi_);
    }
    friend bool operator!=(const Indicator& a, const Indicator& b) { return !(a == b); }

    friend Indicator operator+(const Indicator& a, const Indicator& b) {
        a.check_context(b);
        std::vector<K> t(a.t_);
        for (size_t i = 0; i < t.size(); ++i) t[i] += b.t_[i];
        return {a.psi_, a.order(), std::move(t)};
    }
    friend Indicator operator-(const Indicator& a, const Indicator& b) {
        a.check_context(b);
        std::vector<K> t(a.t_);
        for (size_t i = 0; i < t.size(); ++i) t[i] = t[i] - b.t_[i];
        return {a.psi_, a.order(), std::move(t)};
    }
    friend Indicator operator*(const K& s, const Indicator& a) {
        std::vector<K> t(a.t_);
        for (auto& c : t) c = s * c;
        return {a.psi_, a.order(), std::move(t)};
    }

    void check_context(const Indicator& o) const {
        if (order() != o.order())
            throw MismatchedContext("orders " + std::to_string(order()) + " vs " +
                                    std::to_string(o.order()));
        if (!psi_->same_family(*o.psi_)) throw MismatchedContext("different psi families");
    }

private:
    PsiPtr<K> psi_;
    std::vector<K> t_;
};

/// Product in Sigma_psi: plain Cauchy product of normalized coefficients,
/// truncated at the common order. Commutative.
template <ExactField K>
Indicator<K> multiply(const Indicator<K>& a, const Indicator<K>& b) {
    a.check_context(b);
    int n = a.order();
    std::vector<K> t(static_cast<size_t>(n) + 1, K(0));
    for (int i = 0; i <= n; ++i) {
        K ai = a.normalized(i);
        if (ai.is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) t[static_cast<size_t>(i + j)] += ai * b.normalized(j);
    }
    return {a.psi(), n, std::move(t)};
}

template <ExactField K>
Indicator<K> power(const Indicator<K>& a, int e) {
    Indicator<K> acc = Indicator<K>::identity(a.psi(), a.order());
    for (int i = 0; i < e; ++i) acc = multiply(acc, a);
    return acc;
}

/// Inverse up to order N; exists iff the constant term is nonzero.
template <ExactField K>
Indicator<K> invert(const Indicator<K>& a) {
    K t0 = a.normalized(0);
    if (t0.is_zero()) throw NotInvertible();
    int n = a.order();
    std::vector<K> u(static_cast<size_t>(n) + 1, K(0));
    u[0] = K(1) / t0;
    for (int m = 1; m <= n; ++m) {
        K acc(0);
        for (int k = 1; k <= m; ++k) acc += a.normalized(k) * u[static_cast<size_t>(m - k)];
        u[static_cast<size_t>(m)] = -acc / t0;
    }
    return {a.psi(), n, std::move(u)};
}

/// Delta characterization: zero constant term, invertible linear term.
template <ExactField K>
bool is_delta(const Indicator<K>& a) {
    return a.normalized(0).is_zero() && !a.normalized(1).is_zero();
}

/// Pincherle derivative via the indicator formula: t'_j = (j+1) t_{j+1}.
/// The result is exact to order N-1 (the top coefficient is padding).
template <ExactField K>
Indicator<K> pincherle(const Indicator<K>& a) {
    int n = a.order();
    std::vector<K> t(static_cast<size_t>(n) + 1, K(0));
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(j)] = K(j + 1) * a.normalized(j + 1);
    return {a.psi(), n, std::move(t)};
}

/// The commutator route to the same derivative: p -> T(x_hat p) - x_hat(T p).
/// Valid for deg p <= budget <= N-1; must agree with apply(pincherle(T), .).
template <ExactField K>
std::function<Poly<K>(const Poly<K>&)> pincherle_commutator(const Indicator<K>& a, int budget) {
    if (budget > a.order() - 1)
        throw TruncationExceeded("commutator budget " + std::to_string(budget) + " needs order > " +
                                 std::to_string(a.order()));
    return [a, budget](const Poly<K>& p) {
        if (p.degree() > budget)
            throw TruncationExceeded("commutator input degree " + std::to_string(p.degree()));
        const auto& psi = *a.psi();
        return a.apply(x_hat_psi(psi, p)) - x_hat_psi(psi, a.apply(p));
    };
}

/// Divide a delta operator by partial_psi: the invertible S with Q = partial_psi * S.
/// In normalized coefficients this is a plain shift down by one.
template <ExactField K>
Indicator<K> shift_down(const Indicator<K>& q) {
    if (!q.normalized(0).is_zero()) throw NotInRange("shift_down needs zero constant term");
    int n = q.order();
    std::vector<K> t(static_cast<size_t>(n) + 1, K(0));
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(j)] = q.normalized(j + 1);
    return {q.psi(), n, std::move(t)};
}

/// Composition sum_n (r_n / n_psi!) inner^n with r given in the a-coefficient
/// convention. Requires the inner series to have zero constant term, so that
/// the n-th power has valuation n and the truncated sum is exact.
template <ExactField K>
Indicator<K> psi_compose(const std::vector<K>& outer_exp_coeffs, const Indicator<K>& inner) {
    if (!inner.normalized(0).is_zero()) throw CompositionDiverges();
    const auto& psi = *inner.psi();
    int n = inner.order();
    Indicator<K> acc = Indicator<K>::zero(inner.psi(), n);
    Indicator<K> pw = Indicator<K>::identity(inner.psi(), n);
    int top = std::min<int>(n, static_cast<int>(outer_exp_coeffs.size()) - 1);
    for (int k = 0; k <= top; ++k) {
        if (k > 0) pw = multiply(pw, inner);
        const K& r = outer_exp_coeffs[static_cast<size_t>(k)];
        if (!r.is_zero()) acc = acc + (r / psi.factorial(k)) * pw;
    }
    return acc;
}

/// Compositional inverse of a delta operator: the coefficient sequence q~ with
/// psi_compose(q~, Q) = partial_psi up to order N, found by a triangular solve
/// (solvable because the linear coefficient of Q is invertible).
template <ExactField K>
Indicator<K> comp_inverse(const Indicator<K>& q) {
    if (!is_delta(q)) throw NotDelta();
    int n = q.order();
    // powers[k] = Q^k, valuation k
    std::vector<Indicator<K>> powers;
    powers.reserve(static_cast<size_t>(n) + 1);
    powers.push_back(Indicator<K>::identity(q.psi(), n));
    for (int k = 1; k <= n; ++k) powers.push_back(multiply(powers.back(), q));

    std::vector<K> c(static_cast<size_t>(n) + 1, K(0));  // normalized outer coefficients
    // target: partial_psi, normalized coefficients (0, 1, 0, ...)
    for (int m = 1; m <= n; ++m) {
        K rhs = (m == 1) ? K(1) : K(0);
        for (int k = 1; k < m; ++k) rhs -= c[static_cast<size_t>(k)] * powers[static_cast<size_t>(k)].normalized(m);
        c[static_cast<size_t>(m)] = rhs / powers[static_cast<size_t>(m)].normalized(m);
    }
    return {q.psi(), n, std::move(c)};
}

/// (log S)' computed as S' * S^{-1}; log S itself is never materialized
/// (its constant term need not lie in the field).
template <ExactField K>
Indicator<K> log_pincherle(const Indicator<K>& s) {
    if (s.normalized(0).is_zero()) throw NotInvertible();
    return multiply(pincherle(s), invert(s));
}

/// First expansion coefficients a_k = [T p_k](0) of a shift-invariant action T
/// in powers of the delta operator with basic sequence {p_k}.
template <ExactField K>
std::vector<K> first_expansion(const std::function<Poly<K>(const Poly<K>&)>& t_action,
                               const std::vector<Poly<K>>& basic, int n) {
    if (n >= static_cast<int>(basic.size()))
        throw TruncationExceeded("first_expansion needs basic sequence up to index " +
                                 std::to_string(n));
    std::vector<K> a;
    a.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) a.push_back(t_action(basic[static_cast<size_t>(k)]).at0());
    return a;
}

/// Check [T, E^a] = 0 on monomials up to degree_budget for each sampled a.
template <ExactField K>
CheckResult shift_invariance_check(const PsiSequence<K>& psi,
                                   const std::function<Poly<K>(const Poly<K>&)>& t_action,
                                   const std::vector<K>& a_samples, int degree_budget) {
    for (const K& a : a_samples)
        for (int m = 0; m <= degree_budget; ++m) {
            Poly<K> xm = Poly<K>::monomial(m);
            Poly<K> lhs = t_action(translate(psi, a, xm));
            Poly<K> rhs = translate(psi, a, t_action(xm));
            if (lhs != rhs)
                return CheckResult::fail("a = " + a.text() + ", x^" + std::to_string(m) + ": " +
                                         lhs.text() + " vs " + rhs.text());
        }
    return CheckResult::ok();
}

}  // namespace umbral
