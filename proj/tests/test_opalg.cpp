#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "umbral/opalg.hpp"

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

I random_indicator(PsiPtr<Scalar> psi, std::mt19937& rng, int support, bool invertible) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> qdeg(0, 1);
    std::vector<Scalar> t;
    for (int k = 0; k <= support; ++k) {
        Scalar c(coeff(rng));
        if (qdeg(rng)) c = c * Scalar::q() + Scalar(coeff(rng));
        t.push_back(c);
    }
    if (invertible && t[0].is_zero()) t[0] = Scalar(1);
    return I(psi, N, std::move(t));
}

}  // namespace

TEST_CASE("exp coefficient convention") {
    auto psi = qnat();
    // a = (0,1,0,...) is the psi-derivative itself
    I d = I::from_exp_coeffs(psi, {Scalar(0), Scalar(1)}, N);
    CHECK(d == I::partial(psi, N));
    CHECK(d.apply(P::monomial(3)) == P::monomial(2, S("1+q+q^2")));
    // a_k = a^k is the translation operator
    std::vector<Scalar> geo;
    Scalar a = S("q"), ak(1);
    for (int k = 0; k <= N; ++k) {
        geo.push_back(ak);
        ak = ak * a;
    }
    CHECK(I::from_exp_coeffs(psi, geo, N) == I::translation(psi, a, N));
    CHECK(I::from_exp_coeffs(psi, std::vector<Scalar>(4, Scalar(0)), N).is_zero());
    // round trip through exp coefficients
    I e1 = I::translation(psi, Scalar(1), N);
    CHECK(I::from_exp_coeffs(psi, e1.exp_coeffs(), N) == e1);
}

TEST_CASE("apply matches translate and psi_derivative") {
    auto psi = qnat();
    I e1 = I::translation(psi, Scalar(1), N);
    CHECK(e1.apply(P::monomial(2)) == psi_shifted_power(*psi, Scalar(1), 2));
    CHECK(I::identity(psi, N).apply(P::monomial(5)) == P::monomial(5));
    CHECK(I::partial(psi, N).apply(P::monomial(3)) == psi_derivative(*psi, P::monomial(3)));
    CHECK_THROWS_AS(e1.apply(P::monomial(N + 1)), TruncationExceeded);
}

TEST_CASE("multiply is operator composition") {
    auto psi = qnat();
    std::mt19937 rng(101);
    I d = I::partial(psi, N);
    CHECK(multiply(d, d).apply(P::monomial(4)) ==
          psi_derivative(*psi, psi_derivative(*psi, P::monomial(4))));
    for (int trial = 0; trial < 20; ++trial) {
        I t = random_indicator(psi, rng, 8, false);
        I s = random_indicator(psi, rng, 8, false);
        CHECK(multiply(t, s) == multiply(s, t));
        I ts = multiply(t, s);
        for (int m = 0; m <= 8; ++m) {
            P p = P::monomial(m);
            CHECK(ts.apply(p) == t.apply(s.apply(p)));
        }
        CHECK(multiply(t, I::identity(psi, N)) == t);
    }
}

TEST_CASE("context mismatches are rejected") {
    auto psi = qnat();
    auto cl = share(PsiSequence<Scalar>::classical(40));
    CHECK_THROWS_AS(multiply(I::partial(psi, N), I::partial(psi, N - 1)), MismatchedContext);
    CHECK_THROWS_AS(multiply(I::partial(psi, N), I::partial(cl, N)), MismatchedContext);
}

TEST_CASE("inverses") {
    auto psi = qnat();
    CHECK(invert(I::identity(psi, N)) == I::identity(psi, N));
    I e1 = I::translation(psi, Scalar(1), N);
    I u = invert(e1);
    CHECK(u.normalized(0) == Scalar(1));
    CHECK(u.normalized(1) == Scalar(-1));
    CHECK(u.normalized(2) == S("q/(1+q)"));
    CHECK(multiply(e1, u) == I::identity(psi, N));
    CHECK_THROWS_AS(invert(I::partial(psi, N)), NotInvertible);  // deltas are never invertible

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        I t = random_indicator(psi, rng, 6, true);
        CHECK(multiply(t, invert(t)) == I::identity(psi, N));
    }
}

TEST_CASE("delta characterization") {
    auto psi = qnat();
    CHECK(is_delta(I::partial(psi, N)));
    CHECK(!is_delta(I::translation(psi, Scalar(1), N)));  // constant term 1
    I dq = I::translation(psi, Scalar(1), N) - I::identity(psi, N);
    CHECK(is_delta(dq));
    CHECK(dq.normalized(0).is_zero());
    CHECK(dq.normalized(1) == Scalar(1));
    // a delta operator kills constants and drops degree by exactly one
    CHECK(dq.apply(P(Scalar(9))).is_zero());
    for (int n = 1; n <= 10; ++n) CHECK(dq.apply(P::monomial(n)).degree() == n - 1);
}

TEST_CASE("pincherle derivative: indicator formula vs commutator") {
    auto psi = qnat();
    I d = I::partial(psi, N);
    CHECK(pincherle(d) == I::identity(psi, N));
    // (partial^n)' = n partial^{n-1}
    for (int n = 1; n <= 5; ++n) CHECK(pincherle(power(d, n)) == Scalar(n) * power(d, n - 1));
    I dq = I::translation(psi, Scalar(1), N) - I::identity(psi, N);
    for (int j = 0; j < N; ++j)
        CHECK(pincherle(dq).normalized(j) == Scalar(j + 1) / psi->factorial(j + 1));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        I t = random_indicator(psi, rng, 8, false);
        auto comm = pincherle_commutator(t, N - 2);
        I pf = pincherle(t);
        for (int m = 0; m <= N - 2; ++m) {
            P p = P::monomial(m);
            CHECK(comm(p) == pf.apply(p));
        }
    }
    // T = partial^2 on x^3 gives 2 * 3_psi x^2
    auto comm2 = pincherle_commutator(power(d, 2), 6);
    CHECK(comm2(P::monomial(3)) == Scalar(2) * psi_derivative(*psi, P::monomial(3)));
    // identity has zero derivative
    auto comm0 = pincherle_commutator(I::identity(psi, N), 6);
    CHECK(comm0(P::monomial(4)).is_zero());
}

TEST_CASE("leibniz rule") {
    auto psi = qnat();
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        I t = random_indicator(psi, rng, 7, false);
        I s = random_indicator(psi, rng, 7, false);
        CHECK(pincherle(multiply(t, s)) ==
              multiply(pincherle(t), s) + multiply(t, pincherle(s)));
    }
}

TEST_CASE("delta factorization Q = partial * S with invertible S") {
    auto psi = qnat();
    I e1 = I::translation(psi, Scalar(1), N);
    std::vector<I> deltas = {I::partial(psi, N), e1 - I::identity(psi, N),
                             multiply(I::partial(psi, N), e1)};
    for (const I& q : deltas) {
        I s = shift_down(q);
        CHECK(!s.normalized(0).is_zero());
        CHECK(multiply(I::partial(psi, N), s) == q);
    }
    CHECK_THROWS_AS(shift_down(e1), NotInRange);
}

TEST_CASE("composition and compositional inverse") {
    auto psi = qnat();
    I d = I::partial(psi, N);
    I dq = I::translation(psi, Scalar(1), N) - I::identity(psi, N);
    I abel = multiply(d, I::translation(psi, S("q"), N));

    // outer = partial coefficients reproduces the inner operator
    std::vector<Scalar> id_outer = {Scalar(0), Scalar(1)};
    CHECK(psi_compose(id_outer, dq) == dq);

    // exp family: outer a_k = a^k with inner partial gives E^a
    std::vector<Scalar> geo;
    Scalar ak(1);
    for (int k = 0; k <= N; ++k) {
        geo.push_back(ak);
        ak = ak * Scalar(1);
    }
    CHECK(psi_compose(geo, d) == I::translation(psi, Scalar(1), N));

    CHECK_THROWS_AS(psi_compose(id_outer, I::translation(psi, Scalar(1), N)), CompositionDiverges);

    for (const I& q : {d, dq, abel}) {
        I inv = comp_inverse(q);
        CHECK(psi_compose(inv.exp_coeffs(), q) == d);   // Q^{-1} o Q = id
        CHECK(psi_compose(q.exp_coeffs(), inv) == d);   // Q o Q^{-1} = id
    }
    CHECK(comp_inverse(d) == d);
    CHECK_THROWS_AS(comp_inverse(I::translation(psi, Scalar(1), N)), NotDelta);
}

TEST_CASE("log pincherle") {
    auto psi = qnat();
    CHECK(log_pincherle(I::identity(psi, N)).is_zero());
    CHECK(log_pincherle(Scalar(5) * I::identity(psi, N)).is_zero());
    I e1 = I::translation(psi, Scalar(1), N);
    I l = log_pincherle(e1);
    // defining identity (log S)' S = S', exact away from the padded top coefficient
    I lhs = multiply(l, e1);
    I rhs = pincherle(e1);
    for (int j = 0; j < N; ++j) CHECK(lhs.normalized(j) == rhs.normalized(j));
    CHECK_THROWS_AS(log_pincherle(I::partial(psi, N)), NotInvertible);
}

TEST_CASE("first expansion theorem") {
    auto psi = qnat();
    I d = I::partial(psi, N);
    // monomial basic sequence of partial_psi
    std::vector<P> monomials;
    for (int k = 0; k <= 8; ++k) monomials.push_back(P::monomial(k));

    I e1 = I::translation(psi, Scalar(1), N);
    auto coeffs = first_expansion<Scalar>([&](const P& p) { return e1.apply(p); }, monomials, 8);
    for (const Scalar& a : coeffs) CHECK(a.is_one());  // a_k = p_k(1) = 1

    auto id_coeffs =
        first_expansion<Scalar>([&](const P& p) { return p; }, monomials, 8);
    CHECK(id_coeffs[0].is_one());
    for (int k = 1; k <= 8; ++k) CHECK(id_coeffs[static_cast<size_t>(k)].is_zero());

    // reconstruction: sum a_k/k_psi! partial^k reproduces E^1 on monomials
    I rebuilt = I::from_exp_coeffs(psi, coeffs, N);
    for (int m = 0; m <= 8; ++m)
        CHECK(rebuilt.apply(P::monomial(m)) == e1.apply(P::monomial(m)));
}

TEST_CASE("shift invariance check") {
    auto psi = qnat();
    std::vector<Scalar> samples = {Scalar(1), S("q"), Scalar(-2)};
    I e1 = I::translation(psi, Scalar(1), N);
    CHECK(shift_invariance_check<Scalar>(*psi, [&](const P& p) { return e1.apply(p); }, samples, 6)
              .pass);
    // 1-hat_q is diagonal with degree-dependent weights: not shift invariant
    DiagonalOp<Scalar> one_hat{[psi](int n) { return Scalar(n + 1) / psi->number(n + 1); }};
    auto r = shift_invariance_check<Scalar>(
        *psi, [&](const P& p) { return diagonal_apply(one_hat, p); }, samples, 4);
    CHECK(!r.pass);
    CHECK(!r.witness.empty());
    // multiplication by x is the classic non-invariant operator
    CHECK(!shift_invariance_check<Scalar>(*psi, [](const P& p) { return p.shifted_up(); }, samples, 4)
               .pass);
}

TEST_CASE("translation inverse is not the opposite translation unless classical") {
    auto psi = qnat();
    I e1 = I::translation(psi, Scalar(1), N);
    CHECK(invert(e1) != I::translation(psi, Scalar(-1), N));
    auto cl = share(PsiSequence<Scalar>::classical(40));
    I ce1 = I::translation(cl, Scalar(1), N);
    CHECK(invert(ce1) == I::translation(cl, Scalar(-1), N));
}
