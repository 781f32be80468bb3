#pragma once

#include "umbral/psi.hpp"

namespace umbral {

/// Boolean lattice of subsets of {1..m}, the desk-scale poset whose reduced
/// incidence algebra is checked against series convolution. Enumeration is
/// literal, so the ground size is capped.
struct BooleanLattice {
    int m;
    explicit BooleanLattice(int ground_size) : m(ground_size) {
        if (m < 0 || m > 12) throw GroundTooLarge(ground_size);
    }
};

/// Incidence function on segment types: the value on [A, B] depends only on
/// n = |B - A| and is values[n].
template <ExactField K>
struct TypeFunction {
    std::vector<K> values;  // index 0..m

    int top() const { return static_cast<int>(values.size()) - 1; }
    const K& at(int n) const { return values.at(static_cast<size_t>(n)); }

    static TypeFunction zeta(int m) { return {std::vector<K>(static_cast<size_t>(m) + 1, K(1))}; }
    static TypeFunction delta(int m) {
        std::vector<K> v(static_cast<size_t>(m) + 1, K(0));
        v[0] = K(1);
        return {std::move(v)};
    }
    static TypeFunction mobius(int m) {
        std::vector<K> v(static_cast<size_t>(m) + 1);
        for (int n = 0; n <= m; ++n) v[static_cast<size_t>(n)] = n % 2 == 0 ? K(1) : K(-1);
        return {std::move(v)};
    }

    friend bool operator==(const TypeFunction& a, const TypeFunction& b) {
        return a.values == b.values;
    }
};

/// Convolution by literal enumeration of intermediate subsets on a
/// representative segment of each size (well defined by symmetry).
template <ExactField K>
TypeFunction<K> enum_convolve(const BooleanLattice& l, const TypeFunction<K>& f,
                              const TypeFunction<K>& g) {
    if (f.top() < l.m || g.top() < l.m)
        throw InvalidParams("type functions shorter than the ground size");
    TypeFunction<K> h{std::vector<K>(static_cast<size_t>(l.m) + 1, K(0))};
    for (int n = 0; n <= l.m; ++n) {
        K acc(0);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int k = __builtin_popcount(mask);
            acc += f.at(k) * g.at(n - k);
        }
        h.values[static_cast<size_t>(n)] = acc;
    }
    return h;
}

/// The psi-binomial convolution of type-function values,
/// c_n = sum_k binom_psi(n,k) a_k b_{n-k}.
template <ExactField K>
TypeFunction<K> series_convolve(const PsiSequence<K>& psi, const TypeFunction<K>& f,
                                const TypeFunction<K>& g) {
    int top = std::min(f.top(), g.top());
    TypeFunction<K> h{std::vector<K>(static_cast<size_t>(top) + 1, K(0))};
    for (int n = 0; n <= top; ++n) {
        K acc(0);
        for (int k = 0; k <= n; ++k) acc += psi.binomial(n, k) * f.at(k) * g.at(n - k);
        h.values[static_cast<size_t>(n)] = acc;
    }
    return h;
}

/// Mobius inversion round trip on the full lattice: g(A) = sum_{B <= A} f(B),
/// then f recovered through sum_{B <= A} g(B) mu(B, A) with mu = (-1)^{|A-B|}.
template <ExactField K>
CheckResult mobius_inversion_roundtrip(const BooleanLattice& l, const TypeFunction<K>& f) {
    if (f.top() < l.m) throw InvalidParams("type function shorter than the ground size");
    const unsigned full = 1u << l.m;
    std::vector<K> g(full, K(0));
    for (unsigned a = 0; a < full; ++a) {
        K acc(0);
        unsigned sub = a;
        while (true) {
            acc += f.at(__builtin_popcount(sub));
            if (sub == 0) break;
            sub = (sub - 1) & a;
        }
        g[a] = acc;
    }
    for (unsigned a = 0; a < full; ++a) {
        K acc(0);
        int ca = __builtin_popcount(a);
        unsigned sub = a;
        while (true) {
            int cb = __builtin_popcount(sub);
            K term = g[sub];
            if ((ca - cb) % 2 == 1) term = -term;
            acc += term;
            if (sub == 0) break;
            sub = (sub - 1) & a;
        }
        if (!(acc == f.at(ca)))
            return CheckResult::fail("element mask " + std::to_string(a) + ": " + acc.text() +
                                     " vs " + f.at(ca).text());
    }
    return CheckResult::ok();
}

/// Upper-triangular Toeplitz face of the series algebra: with entries
/// t_{j-i} = a_{j-i}/(j-i)_psi!, the matrix product realizes exactly the
/// psi-binomial convolution of the a-coefficients.
template <ExactField K>
CheckResult matrix_iso_check(const PsiSequence<K>& psi, const TypeFunction<K>& f,
                             const TypeFunction<K>& g, int n) {
    auto entry = [&psi](const TypeFunction<K>& t, int band) {
        return band > t.top() ? K(0) : t.at(band) / psi.factorial(band);
    };
    TypeFunction<K> conv = series_convolve(psi, f, g);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            K acc(0);
            for (int k = i; k <= j; ++k) acc += entry(f, k - i) * entry(g, j - k);
            K expected = entry(conv, j - i);
            if (!(acc == expected))
                return CheckResult::fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         "): " + acc.text() + " vs " + expected.text());
        }
    return CheckResult::ok();
}

}  // namespace umbral
