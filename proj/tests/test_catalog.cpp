#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/catalog.hpp"
#include "umbral/classical.hpp"

using namespace umbral;

using P = Poly<Scalar>;
using I = Indicator<Scalar>;

namespace {

constexpr int N = 16;

PsiPtr<Scalar> qnat() {
    static PsiPtr<Scalar> p = share(PsiSequence<Scalar>::q_natural(Scalar::q(), 40));
    return p;
}
Scalar S(const char* s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("catalog indicator coefficients") {
    auto psi = qnat();
    auto dfwd = build_delta(DeltaName::DeltaFwd, Scalar(1), psi, N);
    CHECK(dfwd.op.normalized(0).is_zero());
    CHECK(dfwd.op.normalized(1).is_one());
    CHECK(dfwd.op.normalized(2) == S("1/(1+q)"));  // 1/2_q!

    auto lag = build_delta(DeltaName::Laguerre, Scalar(0), psi, N);
    for (int k = 1; k <= N; ++k) CHECK(lag.op.normalized(k) == Scalar(-1));

    auto abel0 = build_delta(DeltaName::Abel, Scalar(0), psi, N);
    CHECK(abel0.op == I::partial(psi, N));  // abel(0) degenerates to the derivative

    for (const auto& nd : full_catalog<Scalar>(psi, N, Scalar(1))) CHECK(is_delta(nd.op));

    CHECK_THROWS_AS(build_delta(DeltaName::DeltaFwd, Scalar(0), psi, N), InvalidParams);
    CHECK_THROWS_AS(build_delta(DeltaName::NablaBwd, Scalar(0), psi, N), InvalidParams);
}

TEST_CASE("closed forms") {
    auto psi = qnat();
    CHECK(closed_form(DeltaName::PartialPsi, Scalar(0), *psi, 5) == P::monomial(5));
    CHECK(closed_form(DeltaName::Abel, S("q"), *psi, 1) == P::x());
    Scalar a = S("q");
    CHECK(closed_form(DeltaName::Abel, a, *psi, 2) ==
          P::monomial(2) - P::monomial(1, psi->number(2) * a));
    CHECK_THROWS_AS(closed_form(DeltaName::DeltaFwd, Scalar(1), *psi, 2), ErrataExcluded);
    CHECK_THROWS_AS(closed_form(DeltaName::Laguerre, Scalar(0), *psi, 2), ErrataExcluded);
}

TEST_CASE("classical oracles") {
    using PR = Poly<Rational>;
    // falling factorial x(x-1)(x-2)
    CHECK(classical_oracle<Rational>(DeltaName::DeltaFwd, Rational(1), 3) ==
          PR(std::vector<Rational>{0, 2, -3, 1}));
    // rising factorial x(x+1)
    CHECK(classical_oracle<Rational>(DeltaName::NablaBwd, Rational(1), 2) ==
          PR(std::vector<Rational>{0, 1, 1}));
    // abel x(x-2a)
    CHECK(classical_oracle<Rational>(DeltaName::Abel, Rational(3), 2) ==
          PR(std::vector<Rational>{0, -6, 1}));
    CHECK(classical_oracle<Rational>(DeltaName::PartialPsi, Rational(0), 4) == PR::monomial(4));
    // laguerre-type from the definitional solve
    CHECK(classical_oracle<Rational>(DeltaName::Laguerre, Rational(0), 2) ==
          PR(std::vector<Rational>{0, -2, 1}));
    CHECK(classical_oracle<Rational>(DeltaName::Laguerre, Rational(0), 3) ==
          PR(std::vector<Rational>{0, -6, 6, -1}));
}

TEST_CASE("errata fixtures diverge exactly as documented") {
    auto psi = qnat();
    const auto& ps = *psi;
    auto dfwd = build_delta(DeltaName::DeltaFwd, Scalar(1), psi, N);
    auto oracle = basic_by_definition(dfwd.op, 4);

    // product fixture p_2 = x^2 - (2_q/2) x: q-dependent, oracle only at q = 1
    P printed = errata_rodrigues_product(DeltaName::DeltaFwd, Scalar(1), ps, 2);
    CHECK(printed == P::monomial(2) - P::monomial(1, S("(1+q)/2")));
    CHECK(printed != oracle.at(2));
    CHECK(poly_limit_q1(printed) == poly_limit_q1(oracle.at(2)));

    // non-inverted sum p_2 = x^2 + x/2 for every q, including q = 1
    P sum = errata_noninverted_sum(DeltaName::DeltaFwd, ps, 2);
    CHECK(sum == P::monomial(2) + P::monomial(1, S("1/2")));
    CHECK(poly_limit_q1(sum) != poly_limit_q1(oracle.at(2)));

    // laguerre sum p_2 = x^2 - (2_q^2/2) x
    P lsum = errata_laguerre_sum(ps, 2);
    Scalar two_q = ps.number(2);
    CHECK(lsum == P::monomial(2) - P::monomial(1, two_q * two_q / Scalar(2)));

    // abel closed form: agreement through n = 2, divergence at n = 3
    auto abel = build_delta(DeltaName::Abel, Scalar(1), psi, N);
    auto abel_basic = basic_by_definition(abel.op, 3);
    CHECK(closed_form(DeltaName::Abel, Scalar(1), ps, 2) == abel_basic.at(2));
    CHECK(closed_form(DeltaName::Abel, Scalar(1), ps, 3) != abel_basic.at(3));
    CHECK(poly_limit_q1(closed_form(DeltaName::Abel, Scalar(1), ps, 3)) ==
          poly_limit_q1(abel_basic.at(3)));
}
