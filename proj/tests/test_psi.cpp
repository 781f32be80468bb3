#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/psi.hpp"

using namespace umbral;

namespace {

PsiSequence<Scalar> qnat(int limit = 24) { return PsiSequence<Scalar>::q_natural(Scalar::q(), limit); }

std::vector<Scalar> squares(int limit) {
    std::vector<Scalar> v;
    for (int n = 1; n <= limit; ++n) v.emplace_back(long(n) * n);
    return v;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("deformed integers per family") {
    auto q = qnat();
    CHECK(q.number(3) == Scalar::parse("1+q+q^2"));
    CHECK(q.number(1).is_one());
    CHECK(q.number(0).is_zero());
    CHECK(q.number(-4).is_zero());

    auto cl = PsiSequence<Scalar>::classical(16);
    CHECK(cl.number(5) == Scalar(5));

    auto sq = PsiSequence<Scalar>::custom(squares(12));
    CHECK(sq.number(2) == Scalar(4));
    CHECK(sq.number(3) == Scalar(9));
}

TEST_CASE("r-deformed family recovers the q-naturals") {
    // R(t) = (1-t)/(1-q): n_psi = R(q^n) = n_q
    Scalar q = Scalar::q();
    Scalar one(1);
    std::vector<Scalar> rnum = {one, -one};
    std::vector<Scalar> rden = {one - q};
    auto r = PsiSequence<Scalar>::r_deformed(rnum, rden, q, 12);
    auto qn = qnat(12);
    for (int n = 1; n <= 12; ++n) CHECK(r.number(n) == qn.number(n));
    CHECK(r.same_family(qn));
}

TEST_CASE("factorials") {
    auto q = qnat();
    CHECK(q.factorial(0).is_one());
    CHECK(q.factorial(3) == Scalar::parse("1+q") * Scalar::parse("1+q+q^2"));
    auto cl = PsiSequence<Scalar>::classical();
    CHECK(cl.factorial(4) == Scalar(24));
    for (int n = 1; n <= 16; ++n) {
        CHECK(q.factorial(n) == q.number(n) * q.factorial(n - 1));
        CHECK(cl.factorial(n) == cl.number(n) * cl.factorial(n - 1));
    }
}

TEST_CASE("falling factorials") {
    auto q = qnat();
    CHECK(q.falling(3, 2) == q.number(3) * q.number(2));
    CHECK(q.falling(7, 0).is_one());
    auto cl = PsiSequence<Scalar>::classical();
    CHECK(cl.falling(4, 5).is_zero());  // hits 0_psi
    CHECK(cl.falling(-2, 1).is_zero());
}

TEST_CASE("psi-binomials") {
    auto q = qnat();
    CHECK(q.binomial(4, 2) == Scalar::parse("1+q+2q^2+q^3+q^4"));
    CHECK(q.binomial(2, 1) == Scalar::parse("1+q"));
    CHECK(q.binomial(5, 0).is_one());
    CHECK(q.binomial(3, 5).is_zero());
}

TEST_CASE("gauss symmetry and polynomiality") {
    auto q = qnat();
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            Scalar b = q.binomial(n, k);
            CHECK(b == q.binomial(n, n - k));
            CHECK(b.den().is_one());  // Gauss polynomial: integer coefficients in q
        }
}

TEST_CASE("classical limit of Gauss binomials") {
    auto q = qnat();
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q.binomial(n, k).limit_q1() == Rational(binom(n, k)));
}

TEST_CASE("recursion consistency across families") {
    auto sq = PsiSequence<Scalar>::custom(squares(16));
    for (int n = 1; n <= 16; ++n) CHECK(sq.factorial(n) == sq.number(n) * sq.factorial(n - 1));
}

TEST_CASE("invalid custom entries are rejected") {
    std::vector<Scalar> bad = {Scalar(1), Scalar(0), Scalar(9)};
    CHECK_THROWS_AS(PsiSequence<Scalar>::custom(bad), InvalidPsi);
    CHECK_THROWS_AS(PsiSequence<Scalar>::q_natural(Scalar(-1), 8), InvalidPsi);  // 2_q = 0 at q=-1
}

TEST_CASE("numeric-mode psi over plain rationals") {
    auto q2 = PsiSequence<Rational>::q_natural(Rational(2), 16);
    CHECK(q2.number(3) == Rational(7));
    CHECK(q2.factorial(3) == Rational(21));
    auto qn = qnat(16);
    for (int n = 1; n <= 16; ++n) CHECK(qn.number(n).eval(Rational(2)) == q2.number(n));
}
