#pragma once

#include <memory>
#include <string>
#include <vector>

#include "umbral/field.hpp"

namespace umbral {

/// A psi-sequence family, exposed only through its deformed integers
/// n_psi = psi_{n-1}/psi_n (every formula of the calculus consumes n_psi,
/// n_psi! and the binomials, never psi_n itself).
///
/// Values are computed eagerly up to a working limit at construction and are
/// immutable afterwards, so concurrent reads are safe. The conventions
/// 0_psi = 0 (so the psi-derivative kills constants) and n_psi = 0 for n < 0
/// (psi_{-n} = 0) are built in.
template <ExactField K>
class PsiSequence {
public:
    enum class Family { Classical, QNatural, RDeformed, Custom };

    static constexpr int kDefaultLimit = 64;

    /// n_psi = n.
    static PsiSequence classical(int limit = kDefaultLimit) {
        PsiSequence p(Family::Classical, "classical", K(0), limit);
        for (int n = 1; n <= limit; ++n) p.push_number(K(n), n);
        return p;
    }

    /// n_psi = 1 + q + ... + q^{n-1}; q is the field's deformation value
    /// (the generator of Q(q) in symbolic mode, a fixed rational otherwise).
    static PsiSequence q_natural(K q, int limit = kDefaultLimit) {
        PsiSequence p(Family::QNatural, "q", q, limit);
        K cur(0);
        for (int n = 1; n <= limit; ++n) {
            cur = cur * q + K(1);
            p.push_number(cur, n);
        }
        return p;
    }

    /// n_psi = R(q^n) for a user-supplied rational function R = rnum/rden
    /// (coefficient lists in ascending order of the formal argument).
    static PsiSequence r_deformed(std::vector<K> rnum, std::vector<K> rden, K q,
                                  int limit = kDefaultLimit) {
        PsiSequence p(Family::RDeformed, "r", q, limit);
        p.rnum_ = std::move(rnum);
        p.rden_ = std::move(rden);
        K qn(1);
        for (int n = 1; n <= limit; ++n) {
            qn = qn * q;
            K den = horner(p.rden_, qn);
            if (den.is_zero()) throw InvalidPsi("R denominator vanishes at q^" + std::to_string(n));
            p.push_number(horner(p.rnum_, qn) / den, n);
        }
        return p;
    }

    /// n_psi read from a list: values[i] = (i+1)_psi.
    static PsiSequence custom(std::vector<K> values) {
        int limit = static_cast<int>(values.size());
        PsiSequence p(Family::Custom, "custom", K(0), limit);
        for (int n = 1; n <= limit; ++n) p.push_number(values[static_cast<size_t>(n - 1)], n);
        return p;
    }

    Family family() const { return fam_; }
    const std::string& tag() const { return tag_; }
    const K& q_value() const { return q_; }
    int limit() const { return static_cast<int>(nums_.size()) - 1; }

    /// n_psi; zero for n <= 0.
    K number(long n) const {
        if (n <= 0) return K(0);
        if (n > limit())
            throw TruncationExceeded("psi index " + std::to_string(n) + " beyond working limit " +
                                     std::to_string(limit()));
        return nums_[static_cast<size_t>(n)];
    }

    /// n_psi! = 1_psi * 2_psi * ... * n_psi, with 0_psi! = 1.
    const K& factorial(int n) const {
        if (n < 0 || n > limit())
            throw TruncationExceeded("psi factorial index " + std::to_string(n));
        return facts_[static_cast<size_t>(n)];
    }

    /// Falling factorial n_psi^(k): k-term product, zero when an index <= 0 occurs.
    K falling(long n, int k) const {
        K acc(1);
        for (int i = 0; i < k; ++i) {
            K f = number(n - i);
            if (f.is_zero()) return K(0);
            acc = acc * f;
        }
        return acc;
    }

    /// Psi-binomial n over k: falling(n, k) / k_psi!; zero when k > n >= 0.
    K binomial(long n, int k) const {
        if (k < 0) return K(0);
        K top = falling(n, k);
        if (top.is_zero()) return K(0);
        return top / factorial(k);
    }

    /// Same underlying deformed integers (used for operator-context checks).
    bool same_family(const PsiSequence& o) const {
        int m = std::min(limit(), o.limit());
        for (int n = 1; n <= m; ++n)
            if (nums_[static_cast<size_t>(n)] != o.nums_[static_cast<size_t>(n)]) return false;
        return true;
    }

private:
    PsiSequence(Family f, std::string tag, K q, int limit) : fam_(f), tag_(std::move(tag)), q_(q) {
        if (limit < 1) throw InvalidPsi("working limit must be >= 1");
        nums_.reserve(static_cast<size_t>(limit) + 1);
        facts_.reserve(static_cast<size_t>(limit) + 1);
        nums_.push_back(K(0));  // 0_psi = 0
        facts_.push_back(K(1)); // 0_psi! = 1
    }

    void push_number(K v, int n) {
        if (v.is_zero()) throw InvalidPsi(std::to_string(n) + "_psi = 0");
        facts_.push_back(facts_.back() * v);
        nums_.push_back(std::move(v));
    }

    static K horner(const std::vector<K>& coeffs, const K& x) {
        K acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Family fam_;
    std::string tag_;
    K q_;
    std::vector<K> nums_;   // nums_[n] = n_psi
    std::vector<K> facts_;  // facts_[n] = n_psi!
    std::vector<K> rnum_, rden_;
};

template <ExactField K>
using PsiPtr = std::shared_ptr<const PsiSequence<K>>;

template <ExactField K>
PsiPtr<K> share(PsiSequence<K> p) {
    return std::make_shared<const PsiSequence<K>>(std::move(p));
}

}  // namespace umbral
