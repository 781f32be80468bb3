#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/classical.hpp"
#include "umbral/io.hpp"

using namespace umbral;

using P = Poly<Scalar>;
using I = Indicator<Scalar>;

namespace {

PsiPtr<Scalar> qnat() {
    static PsiPtr<Scalar> p = share(PsiSequence<Scalar>::q_natural(Scalar::q(), 40));
    return p;
}

}  // namespace

TEST_CASE("sequence json round trip") {
    auto psi = qnat();
    auto nd = build_delta(DeltaName::Laguerre, Scalar(0), psi, 16);
    auto seq = basic_by_definition(nd.op, 5);
    Json j = seq_to_json(seq, nd.label);
    CHECK(j["delta"] == "laguerre");
    CHECK(j["psi"] == "q");
    CHECK(j["route"] == "definition");
    auto polys = polys_from_json<Scalar>(j);
    CHECK(polys == seq.polys);
    // identical bytes on identical input
    CHECK(j.dump() == seq_to_json(seq, nd.label).dump());
}

TEST_CASE("csv export shape") {
    auto psi = qnat();
    auto seq = basic_by_definition(I::partial(psi, 16), 3);
    std::string csv = seq_to_csv(seq);
    CHECK(csv == "n,k,coefficient\n0,0,1\n1,1,1\n2,2,1\n3,3,1\n");
}

TEST_CASE("latex export mentions every degree") {
    auto psi = qnat();
    auto nd = build_delta(DeltaName::Abel, Scalar(1), psi, 16);
    auto seq = basic_by_definition(nd.op, 4);
    std::string tex = seq_to_latex(seq, nd.label);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    for (int n = 0; n <= 4; ++n)
        CHECK(tex.find("\n" + std::to_string(n) + " & $") != std::string::npos);
}

TEST_CASE("indicator json") {
    auto psi = qnat();
    Json j = indicator_to_json(I::partial(psi, 4));
    CHECK(j["normalized"] == Json::array({"0", "1", "0", "0", "0"}));
}

TEST_CASE("custom psi ingestion") {
    Json good = {{"n_psi", {"1", "4", "9"}}};
    auto strs = custom_psi_strings(good);
    CHECK(strs.size() == 3);
    std::vector<Scalar> vals;
    for (const auto& s : strs) vals.push_back(Scalar::parse(s));
    auto psi = PsiSequence<Scalar>::custom(vals);
    CHECK(psi.number(3) == Scalar(9));

    Json bad = {{"values", {"1"}}};
    CHECK_THROWS_AS(custom_psi_strings(bad), ParseError);
    Json zero = {{"n_psi", {"1", "0"}}};
    std::vector<Scalar> zvals;
    for (const auto& s : custom_psi_strings(zero)) zvals.push_back(Scalar::parse(s));
    CHECK_THROWS_AS(PsiSequence<Scalar>::custom(zvals), InvalidPsi);
}

TEST_CASE("incidence table matches in the classical family only") {
    auto cl = PsiSequence<Scalar>::classical(16);
    Json j = incidence_table_json(cl, 4);
    for (const auto& row : j["rows"]) CHECK(row["match"].get<bool>());
    auto q = qnat();
    Json jq = incidence_table_json(*q, 4);
    bool all_match = true;
    for (const auto& row : jq["rows"]) all_match = all_match && row["match"].get<bool>();
    CHECK(!all_match);  // psi-binomial counts differ from subset counts
}

TEST_CASE("numeric mode reproduces symbolic results at a sample point") {
    Rational q0(2, 3);
    auto sym = share(PsiSequence<Scalar>::q_natural(Scalar::q(), 40));
    auto num = share(PsiSequence<Rational>::q_natural(q0, 40));
    for (DeltaName name : {DeltaName::DeltaFwd, DeltaName::Abel, DeltaName::Laguerre}) {
        auto nd_s = build_delta(name, Scalar(1), sym, 16);
        auto nd_n = build_delta(name, Rational(1), num, 16);
        auto seq_s = basic_by_definition(nd_s.op, 5);
        auto seq_n = basic_by_definition(nd_n.op, 5);
        for (int n = 0; n <= 5; ++n) CHECK(poly_eval_q(seq_s.at(n), q0) == seq_n.at(n));
    }
}
