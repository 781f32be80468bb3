#pragma once

#include <random>

#include "umbral/catalog.hpp"
#include "umbral/classical.hpp"
#include "umbral/incidence.hpp"
#include "umbral/oscillator.hpp"

namespace umbral {

struct NamedCheck {
    std::string name;
    CheckResult result;
};

using Report = std::vector<NamedCheck>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r)
        if (!c.result.pass) return false;
    return true;
}

namespace verify_detail {

template <ExactField K>
Indicator<K> random_indicator(PsiPtr<K> psi, int order, std::mt19937& rng, int support,
                              bool invertible) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<K> t;
    for (int k = 0; k <= support; ++k) t.push_back(K(coeff(rng)));
    if (invertible && t[0].is_zero()) t[0] = K(1);
    return Indicator<K>(psi, order, std::move(t));
}

inline CheckResult as_check(bool ok, const std::string& witness_on_fail) {
    return ok ? CheckResult::ok() : CheckResult::fail(witness_on_fail);
}

}  // namespace verify_detail

/// Route agreement, defining relations, binomial type, corrupted control.
template <ExactField K>
Report suite_binomial(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto def = basic_by_definition(nd.op, n_max);
    rep.push_back({"defining relations (" + nd.label + ")", basic_defining_relations(def)});
    rep.push_back({"route rodrigues == definition",
                   verify_detail::as_check(basic_by_rodrigues(nd.op, n_max).polys == def.polys,
                                           "rodrigues route differs")});
    rep.push_back({"route formula1 == definition",
                   verify_detail::as_check(basic_by_formula1(nd.op, n_max).polys == def.polys,
                                           "formula1 route differs")});
    rep.push_back({"route formula3 == definition",
                   verify_detail::as_check(basic_by_formula3(nd.op, n_max).polys == def.polys,
                                           "formula3 route differs")});
    rep.push_back({"psi-binomial type", check_binomial_type(def)});
    if (n_max >= 3) {
        auto corrupted = def;
        corrupted.polys[2] += Poly<K>::x();
        rep.push_back({"corrupted control fails",
                       verify_detail::as_check(!check_binomial_type(corrupted).pass,
                                               "corrupted sequence still passes")});
    }
    return rep;
}

/// First expansion: reconstruct partial_psi and random operators from their
/// coefficients in powers of the given delta.
template <ExactField K>
Report suite_expansion1(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto psi = nd.op.psi();
    auto basic = basic_by_definition(nd.op, n_max);
    Indicator<K> partial = Indicator<K>::partial(psi, nd.op.order());

    auto reconstruct = [&](const Indicator<K>& t, const std::string& label) {
        auto coeffs = first_expansion<K>([&](const Poly<K>& p) { return t.apply(p); },
                                         basic.polys, n_max);
        // rebuild sum a_k/k_psi! Q^k and compare actions on monomials
        for (int m = 0; m <= n_max; ++m) {
            Poly<K> xm = Poly<K>::monomial(m);
            Poly<K> acc;
            Poly<K> w = xm;
            for (int k = 0; k <= n_max; ++k) {
                if (k > 0) w = nd.op.apply(w);
                acc += coeffs[static_cast<size_t>(k)] / psi->factorial(k) * w;
            }
            if (acc != t.apply(xm))
                return CheckResult::fail(label + " reconstruction differs on x^" +
                                         std::to_string(m));
        }
        return CheckResult::ok();
    };

    rep.push_back({"reconstruct partial_psi from " + nd.label + " powers",
                   reconstruct(partial, "partial_psi")});
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        Indicator<K> t = verify_detail::random_indicator(psi, nd.op.order(), rng, n_max, false);
        rep.push_back({"reconstruct random shift-invariant #" + std::to_string(trial),
                       reconstruct(t, "random")});
    }
    return rep;
}

/// Second expansion theorem instances with symbolic and sampled y.
template <ExactField K>
Report suite_expansion2(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto psi = nd.op.psi();
    Indicator<K> id = Indicator<K>::identity(psi, nd.op.order());
    Indicator<K> e1 = Indicator<K>::translation(psi, K(1), nd.op.order());
    std::vector<K> ys = {K(1), K(-1), K(2)};
    Poly<K> p = Poly<K>::monomial(std::min(3, n_max)) + Poly<K>::x();
    rep.push_back({"taylor case (T = S = id)",
                   second_expansion_check(nd.op, id, id, p, ys)});
    rep.push_back({"T = " + nd.label + ", S = E^1",
                   second_expansion_check(nd.op, e1, nd.op, p, ys)});
    return rep;
}

template <ExactField K>
Report suite_gf(const NamedDelta<K>& nd, int n_max) {
    auto seq = basic_by_definition(nd.op, n_max);
    return {{"generating function (" + nd.label + ")",
             generating_function_check(nd.op, seq, n_max)}};
}

/// Sheffer defining relations, Sheffer binomial theorem, constant-term expansions,
/// second expansion, recurrence constants; S = E^1 and S = Q'.
template <ExactField K>
Report suite_sheffer(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto psi = nd.op.psi();
    std::vector<std::pair<std::string, Indicator<K>>> ss = {
        {"E^1", Indicator<K>::translation(psi, K(1), nd.op.order())},
        {"Q'", pincherle(nd.op)},
        {"2 id", K(2) * Indicator<K>::identity(psi, nd.op.order())}};
    for (const auto& [sname, s] : ss) {
        auto sh = sheffer_from_S(nd.op, s, n_max);
        rep.push_back({"sheffer relations S = " + sname, sheffer_defining_relations(sh)});
        rep.push_back({"sheffer binomial theorem S = " + sname,
                       sheffer_binomial_check(nd.op, s, n_max)});
        rep.push_back({"constant-term expansions S = " + sname,
                       sheffer_constant_term_expansion(nd.op, s, n_max)});
        std::vector<K> ys = {K(1), K(-2)};
        rep.push_back({"second expansion S = " + sname,
                       second_expansion_check(nd.op, s, nd.op, Poly<K>::monomial(3), ys)});
        try {
            // against A = Q itself the solved constants are (0, 1_psi, 0, ...)
            auto consts = sheffer_recurrence_constants(nd.op, sh);
            bool shape = consts[0].is_zero() && consts[1] == psi->number(1);
            for (size_t j = 2; j < consts.size(); ++j) shape = shape && consts[j].is_zero();
            rep.push_back({"recurrence constants S = " + sname,
                           verify_detail::as_check(shape, "unexpected constants")});
        } catch (const Inconsistent& e) {
            rep.push_back({"recurrence constants S = " + sname, CheckResult::fail(e.what())});
        }
    }
    return rep;
}

template <ExactField K>
Report suite_inner(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto psi = nd.op.psi();
    const auto& ps = *psi;
    for (const auto& [sname, s] :
         std::vector<std::pair<std::string, Indicator<K>>>{
             {"id", Indicator<K>::identity(psi, nd.op.order())},
             {"E^1", Indicator<K>::translation(psi, K(1), nd.op.order())}}) {
        auto sh = sheffer_from_S(nd.op, s, n_max);
        CheckResult r = CheckResult::ok();
        for (int k = 0; k <= n_max && r.pass; ++k)
            for (int n = 0; n <= n_max && r.pass; ++n) {
                K ip = inner_product(sh.at(k), sh.at(n), nd.op, s, sh);
                K expected = k == n ? ps.factorial(n) : K(0);
                if (!(ip == expected))
                    r = CheckResult::fail("(s_" + std::to_string(k) + ", s_" + std::to_string(n) +
                                          ") = " + ip.text());
            }
        rep.push_back({"orthogonality S = " + sname, r});
    }
    return rep;
}

template <ExactField K>
Report suite_spectral(const NamedDelta<K>& nd, int n_max) {
    Report rep;
    auto psi = nd.op.psi();
    for (const auto& [sname, s] :
         std::vector<std::pair<std::string, Indicator<K>>>{
             {"id", Indicator<K>::identity(psi, nd.op.order())},
             {"E^1", Indicator<K>::translation(psi, K(1), nd.op.order())}}) {
        auto r = spectral_operator(nd.op, s, n_max);
        std::string info = std::string("closed form eigen: xhat_inv=") +
                           (r.closed_form_xhat_inv_eigen ? "yes" : "no") + " ddx=" +
                           (r.closed_form_ddx_eigen ? "yes" : "no") + "; matches ground truth: " +
                           (r.closed_form_xhat_inv_matches ? "yes" : "no") + "/" +
                           (r.closed_form_ddx_matches ? "yes" : "no");
        rep.push_back({"spectral ground truth S = " + sname + " [" + info + "]",
                       verify_detail::as_check(r.ground_truth_ok, r.witness)});
    }
    return rep;
}

template <ExactField K>
Report suite_oscillator(const NamedDelta<K>& nd, const PsiSequence<K>& psi, int n_max) {
    Report rep;
    auto seq = basic_by_definition(nd.op, n_max);
    rep.push_back({"commutation [Q, x_Q]_{q-hat} = id (" + nd.label + ")",
                   commutation_check(nd.op, seq)});
    auto obs = qplane_binomial_obstruction(psi, std::min(n_max, 6));
    std::string vio = obs.first_violation ? ("first violation at n = " + std::to_string(*obs.first_violation))
                                          : "identity holds at every checked degree";
    rep.push_back({"qplane binomial report [" + vio + "]", CheckResult::ok()});
    return rep;
}

template <ExactField K>
Report suite_incidence(const PsiSequence<K>& psi, int m) {
    Report rep;
    BooleanLattice l(m);
    auto cl = PsiSequence<K>::classical(std::max(m + 2, 16));
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto random_tf = [&] {
        std::vector<K> v;
        for (int i = 0; i <= m; ++i) v.push_back(K(coeff(rng)));
        return TypeFunction<K>{std::move(v)};
    };
    CheckResult bridge = CheckResult::ok();
    for (int trial = 0; trial < 6 && bridge.pass; ++trial) {
        auto f = random_tf(), g = random_tf();
        if (!(enum_convolve(l, f, g) == series_convolve(cl, f, g)))
            bridge = CheckResult::fail("trial " + std::to_string(trial));
    }
    rep.push_back({"enumeration == classical binomial convolution", bridge});
    rep.push_back({"mu * zeta = delta",
                   verify_detail::as_check(
                       enum_convolve(l, TypeFunction<K>::mobius(m), TypeFunction<K>::zeta(m)) ==
                           TypeFunction<K>::delta(m),
                       "mobius does not invert zeta")});
    rep.push_back({"mobius inversion round trip", mobius_inversion_roundtrip(l, random_tf())});
    rep.push_back({"toeplitz face", matrix_iso_check(psi, random_tf(), random_tf(), m)});
    // coherence with the operator algebra through the n_psi! dictionary
    auto pp = share(PsiSequence<K>(psi));
    auto f = random_tf(), g = random_tf();
    Indicator<K> t = Indicator<K>::from_exp_coeffs(pp, f.values, m);
    Indicator<K> s = Indicator<K>::from_exp_coeffs(pp, g.values, m);
    auto prod = multiply(t, s).exp_coeffs();
    auto conv = series_convolve(psi, f, g);
    CheckResult coh = CheckResult::ok();
    for (int n = 0; n <= m; ++n)
        if (!(prod[static_cast<size_t>(n)] == conv.at(n)))
            coh = CheckResult::fail("order " + std::to_string(n));
    rep.push_back({"series convolution == indicator product", coh});
    return rep;
}

/// Divergent printed fixtures against the definitional oracle. Passing means
/// the divergences occur exactly as documented in this repository: the
/// forward/backward product forms and the Laguerre sum differ from the oracle
/// for q != 1 and collapse to it at q = 1; the Abel display agrees with the
/// oracle up to n = 2 and at q = 1, and deviates from n = 3 on for q != 1.
template <ExactField K>
Report suite_errata(PsiPtr<K> psi, int order, int n_max) {
    Report rep;
    const auto& ps = *psi;
    const bool symbolic = std::is_same_v<K, Scalar>;

    auto check_fixture = [&](DeltaName name, const std::string& label, auto&& fixture_fn) {
        auto nd = build_delta(name, K(1), psi, order);
        auto oracle = basic_by_definition(nd.op, n_max);
        bool diverges = false;
        for (int n = 0; n <= n_max; ++n) {
            Poly<K> printed = fixture_fn(n);
            if (printed != oracle.at(n)) diverges = true;
            if constexpr (std::is_same_v<K, Scalar>) {
                // at q = 1 the product fixtures collapse onto the oracle
                if (name != DeltaName::Abel || n <= 2) {
                    if (poly_limit_q1(printed) != poly_limit_q1(oracle.at(n)))
                        return CheckResult::fail(label + " classical limit differs at n = " +
                                                 std::to_string(n));
                }
            }
        }
        if (symbolic && !diverges)
            return CheckResult::fail(label + " unexpectedly equals the oracle everywhere");
        return CheckResult::ok();
    };

    if (ps.family() == PsiSequence<K>::Family::QNatural || !symbolic) {
        rep.push_back({"dfwd product fixture diverges (q != 1), collapses at q = 1",
                       check_fixture(DeltaName::DeltaFwd, "dfwd", [&](int n) {
                           return errata_rodrigues_product(DeltaName::DeltaFwd, K(1), ps, n);
                       })});
        rep.push_back({"nbwd product fixture diverges (q != 1), collapses at q = 1",
                       check_fixture(DeltaName::NablaBwd, "nbwd", [&](int n) {
                           return errata_rodrigues_product(DeltaName::NablaBwd, K(1), ps, n);
                       })});
        rep.push_back({"laguerre sum fixture diverges (q != 1), collapses at q = 1",
                       check_fixture(DeltaName::Laguerre, "laguerre", [&](int n) {
                           return errata_laguerre_sum(ps, n);
                       })});
        // the non-inverted sums deviate for every q, including q = 1
        auto dfwd = build_delta(DeltaName::DeltaFwd, K(1), psi, order);
        auto oracle = basic_by_definition(dfwd.op, std::min(n_max, 4));
        bool differs = errata_noninverted_sum(DeltaName::DeltaFwd, ps, 2) != oracle.at(2);
        rep.push_back({"non-inverted sum differs from the oracle already at n = 2",
                       verify_detail::as_check(differs, "non-inverted sum matches unexpectedly")});
    }

    // Abel closed form: oracle equality through n = 2, divergence from n = 3
    {
        auto abel = build_delta(DeltaName::Abel, K(1), psi, order);
        auto oracle = basic_by_definition(abel.op, n_max);
        CheckResult r = CheckResult::ok();
        for (int n = 0; n <= std::min(n_max, 2) && r.pass; ++n)
            if (closed_form(DeltaName::Abel, K(1), ps, n) != oracle.at(n))
                r = CheckResult::fail("abel closed form differs at n = " + std::to_string(n));
        if (r.pass && symbolic && n_max >= 3) {
            if (closed_form(DeltaName::Abel, K(1), ps, 3) == oracle.at(3) &&
                ps.family() == PsiSequence<K>::Family::QNatural)
                r = CheckResult::fail("abel closed form unexpectedly equals the oracle at n = 3");
        }
        rep.push_back({"abel closed form agrees through n = 2, deviates from n = 3 (q != 1)", r});
        if constexpr (std::is_same_v<K, Scalar>) {
            // the q = 1 collapse is a statement about the q family (and trivially
            // the classical one); custom families carry no q to send to 1
            if (ps.family() == PsiSequence<K>::Family::QNatural ||
                ps.family() == PsiSequence<K>::Family::Classical) {
                CheckResult lim = CheckResult::ok();
                for (int n = 0; n <= n_max && lim.pass; ++n)
                    if (poly_limit_q1(closed_form(DeltaName::Abel, K(1), ps, n)) !=
                        poly_limit_q1(oracle.at(n)))
                        lim = CheckResult::fail("abel classical limit differs at n = " +
                                                std::to_string(n));
                rep.push_back({"abel closed form matches the oracle at q = 1", lim});
            }
        }
    }
    return rep;
}

}  // namespace umbral
