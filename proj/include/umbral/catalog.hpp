#pragma once

#include "umbral/sequences.hpp"

namespace umbral {

enum class DeltaName { PartialPsi, DeltaFwd, NablaBwd, Abel, Laguerre };

inline const char* delta_tag(DeltaName n) {
    switch (n) {
        case DeltaName::PartialPsi: return "dpsi";
        case DeltaName::DeltaFwd: return "dfwd";
        case DeltaName::NablaBwd: return "nbwd";
        case DeltaName::Abel: return "abel";
        case DeltaName::Laguerre: return "laguerre";
    }
    return "?";
}

/// A named delta operator with its parameters; every entry passes is_delta.
template <ExactField K>
struct NamedDelta {
    DeltaName name;
    K a;  // step/shift parameter where applicable
    Indicator<K> op;
    std::string label;
};

/// Indicator coefficients of the catalog operators:
///   dpsi            t = (0, 1, 0, ...)
///   dfwd(a)         E^a - id
///   nbwd(a)         id - E^{-a}
///   abel(a)         partial_psi E^a (shift of the E^a coefficients)
///   laguerre        -sum_{k>=1} partial_psi^k (normalized t_k = -1)
template <ExactField K>
NamedDelta<K> build_delta(DeltaName name, const K& a, PsiPtr<K> psi, int order) {
    switch (name) {
        case DeltaName::PartialPsi:
            return {name, K(0), Indicator<K>::partial(psi, order), "dpsi"};
        case DeltaName::DeltaFwd: {
            if (a.is_zero()) throw InvalidParams("dfwd needs a != 0");
            Indicator<K> op = Indicator<K>::translation(psi, a, order) -
                              Indicator<K>::identity(psi, order);
            return {name, a, std::move(op), std::string("dfwd:a=") + a.text()};
        }
        case DeltaName::NablaBwd: {
            if (a.is_zero()) throw InvalidParams("nbwd needs a != 0");
            Indicator<K> op = Indicator<K>::identity(psi, order) -
                              Indicator<K>::translation(psi, -a, order);
            return {name, a, std::move(op), std::string("nbwd:a=") + a.text()};
        }
        case DeltaName::Abel: {
            Indicator<K> op = multiply(Indicator<K>::partial(psi, order),
                                       Indicator<K>::translation(psi, a, order));
            return {name, a, std::move(op), std::string("abel:a=") + a.text()};
        }
        case DeltaName::Laguerre: {
            std::vector<K> t(static_cast<size_t>(order) + 1, K(-1));
            t[0] = K(0);
            return {name, K(0), Indicator<K>(psi, order, std::move(t)), "laguerre"};
        }
    }
    throw InvalidParams("unknown delta name");
}

template <ExactField K>
std::vector<NamedDelta<K>> full_catalog(PsiPtr<K> psi, int order, const K& a) {
    return {build_delta(DeltaName::PartialPsi, K(0), psi, order),
            build_delta(DeltaName::DeltaFwd, a, psi, order),
            build_delta(DeltaName::NablaBwd, a, psi, order),
            build_delta(DeltaName::Abel, a, psi, order),
            build_delta(DeltaName::Laguerre, K(0), psi, order)};
}

/// The printed closed forms that survive verification: monomials for dpsi and
/// the Abel display (n_psi/n) x_hat_psi (x -_psi na)^{n-1}. Everything else is
/// reachable only through the errata fixtures below.
template <ExactField K>
Poly<K> closed_form(DeltaName name, const K& a, const PsiSequence<K>& psi, int n) {
    switch (name) {
        case DeltaName::PartialPsi:
            return Poly<K>::monomial(n);
        case DeltaName::Abel: {
            if (n == 0) return Poly<K>::one();
            K shift = -(K(n) * a);
            Poly<K> base = psi_shifted_power(psi, shift, n - 1);
            return psi.number(n) / K(n) * x_hat_psi(psi, base);
        }
        default:
            throw ErrataExcluded(delta_tag(name));
    }
}

/// Independent classical oracles (psi = classical), written as literal
/// products/expansions rather than through any solver:
///   dfwd(1): falling factorial x(x-1)...(x-n+1)
///   nbwd(1): rising factorial x(x+1)...(x+n-1)
///   abel(a): x (x - na)^{n-1}
///   dpsi:    x^n
/// The Laguerre-type family has no printed classical form and uses the
/// definitional solve with classical psi instead.
template <ExactField K>
Poly<K> classical_oracle(DeltaName name, const K& a, int n) {
    auto linear = [](const K& c) { return Poly<K>(std::vector<K>{c, K(1)}); };  // x + c
    switch (name) {
        case DeltaName::PartialPsi:
            return Poly<K>::monomial(n);
        case DeltaName::DeltaFwd: {
            Poly<K> p = Poly<K>::one();
            for (int i = 0; i < n; ++i) p = p * linear(K(-i) * a);
            return p;
        }
        case DeltaName::NablaBwd: {
            Poly<K> p = Poly<K>::one();
            for (int i = 0; i < n; ++i) p = p * linear(K(i) * a);
            return p;
        }
        case DeltaName::Abel: {
            if (n == 0) return Poly<K>::one();
            Poly<K> p = Poly<K>::x();
            Poly<K> lin = linear(-(K(n) * a));
            for (int i = 0; i < n - 1; ++i) p = p * lin;
            return p;
        }
        case DeltaName::Laguerre: {
            auto psi = share(PsiSequence<K>::classical(std::max(2 * n + 4, 16)));
            auto lag = build_delta(DeltaName::Laguerre, K(0), psi, std::max(2 * n + 4, 16));
            return basic_by_definition(lag.op, n).at(n);
        }
    }
    throw InvalidParams("unknown delta name");
}

/// Errata fixtures: formulas printed for the forward/backward difference and
/// Laguerre families that deviate from the defining conditions for q != 1.
/// They are kept verbatim as regression-tested documentation.

/// Recurrent product (n_psi!/n!) (x_hat_psi E^{-a} one_hat_psi^{-1})^n [1]
/// (for nbwd the inner translation is E^{+a}). The one_hat weight and the
/// translation order match the printed recurrence; the deviation from the
/// oracle comes from the wrong Pincherle inverse it encodes.
template <ExactField K>
Poly<K> errata_rodrigues_product(DeltaName name, const K& a, const PsiSequence<K>& psi, int n) {
    if (name != DeltaName::DeltaFwd && name != DeltaName::NablaBwd)
        throw InvalidParams("errata product form exists for dfwd/nbwd only");
    K step = name == DeltaName::DeltaFwd ? -a : a;
    DiagonalOp<K> one_hat_inv{[&psi](int m) {
        return m == 0 ? K(1) : psi.number(m) / K(m);
    }};
    Poly<K> p = Poly<K>::one();
    for (int m = 1; m <= n; ++m) {
        p = diagonal_apply(one_hat_inv, p);
        p = translate(psi, step, p);
        p = psi.number(m) / K(m) * x_hat_psi(psi, p);
    }
    return p;
}

/// Coefficient sum that applies S where S^{-n} belongs:
/// p_n = (n_psi/n) sum_{k=0}^{n-1} (sign)^k ((n-1)_psi^(k)/(k+1)_psi!)
///       ((n-k)/(n-k)_psi) x^{n-k}.
template <ExactField K>
Poly<K> errata_noninverted_sum(DeltaName name, const PsiSequence<K>& psi, int n) {
    if (name != DeltaName::DeltaFwd && name != DeltaName::NablaBwd)
        throw InvalidParams("errata non-inverted sum exists for dfwd/nbwd only");
    if (n == 0) return Poly<K>::one();
    Poly<K> acc;
    for (int k = 0; k <= n - 1; ++k) {
        K c = psi.falling(n - 1, k) / psi.factorial(k + 1);
        c = c * (K(n - k) / psi.number(n - k));
        if (name == DeltaName::NablaBwd && (k % 2 == 1)) c = -c;
        acc += Poly<K>::monomial(n - k, c);
    }
    return psi.number(n) / K(n) * acc;
}

/// Printed Laguerre sum with psi-binomials in the expansion of (partial - 1)^n:
/// L_n = (n_psi/n) sum_{k=1}^n (-1)^k (n_psi!/k_psi!) binom_psi(n-1,k-1)
///       (k/k_psi) x^k.
template <ExactField K>
Poly<K> errata_laguerre_sum(const PsiSequence<K>& psi, int n) {
    if (n == 0) return Poly<K>::one();
    Poly<K> acc;
    for (int k = 1; k <= n; ++k) {
        K c = psi.factorial(n) / psi.factorial(k);
        c = c * psi.binomial(n - 1, k - 1) * (K(k) / psi.number(k));
        if (k % 2 == 1) c = -c;
        acc += Poly<K>::monomial(k, c);
    }
    return psi.number(n) / K(n) * acc;
}

}  // namespace umbral
