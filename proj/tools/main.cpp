#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "umbral/io.hpp"
#include "umbral/verify.hpp"

using namespace umbral;

namespace {

struct RunConfig {
    std::string psi_spec = "q";
    std::string delta_spec = "dpsi";
    int order = 16;
    int n_max = 6;
    std::string format = "plain";
    std::string at_q;
    bool all_routes = false;
    std::string suite = "all";
    std::string what = "sequence";
    std::string route = "definition";
    int ground = 4;
    std::string out_path;
    bool stats = false;
};

constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + cfg.out_path + "'");
    out << payload;
}

template <class K>
K field_q_value(const Rational& q0) {
    if constexpr (std::is_same_v<K, Scalar>)
        return Scalar::q();
    else
        return K(q0);
}

template <class K>
PsiPtr<K> make_psi(const RunConfig& cfg, const Rational& q0) {
    int limit = std::max(2 * cfg.order + 4, 64);
    if (cfg.psi_spec == "classical") return share(PsiSequence<K>::classical(limit));
    if (cfg.psi_spec == "q")
        return share(PsiSequence<K>::q_natural(field_q_value<K>(q0), limit));
    if (cfg.psi_spec.rfind("custom:", 0) == 0) {
        Json j = read_json_file(cfg.psi_spec.substr(7));
        std::vector<K> vals;
        for (const auto& s : custom_psi_strings(j)) {
            Scalar sym = Scalar::parse(s);
            if constexpr (std::is_same_v<K, Scalar>)
                vals.push_back(sym);
            else
                vals.push_back(sym.eval(q0));
        }
        if (static_cast<int>(vals.size()) < cfg.order + 2)
            throw InvalidPsi("custom file shorter than the working bound " +
                             std::to_string(cfg.order + 2));
        return share(PsiSequence<K>::custom(std::move(vals)));
    }
    throw InvalidParams("unknown psi spec '" + cfg.psi_spec + "' (classical | q | custom:<path>)");
}

template <class K>
NamedDelta<K> make_delta(const RunConfig& cfg, PsiPtr<K> psi) {
    std::string name = cfg.delta_spec;
    K a(1);
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string param = name.substr(colon + 1);
        name = name.substr(0, colon);
        if (param.rfind("a=", 0) != 0) throw InvalidParams("expected :a=<scalar> in delta spec");
        a = K::parse(param.substr(2));
    }
    if (name == "dpsi") return build_delta(DeltaName::PartialPsi, K(0), psi, cfg.order);
    if (name == "dfwd") return build_delta(DeltaName::DeltaFwd, a, psi, cfg.order);
    if (name == "nbwd") return build_delta(DeltaName::NablaBwd, a, psi, cfg.order);
    if (name == "abel") return build_delta(DeltaName::Abel, a, psi, cfg.order);
    if (name == "laguerre") return build_delta(DeltaName::Laguerre, K(0), psi, cfg.order);
    throw InvalidParams("unknown delta '" + name + "' (dpsi | dfwd | nbwd | abel | laguerre)");
}

template <class K>
PolySeq<K> sequence_by_route(const NamedDelta<K>& nd, const std::string& route, int n_max) {
    if (route == "definition") return basic_by_definition(nd.op, n_max);
    if (route == "rodrigues") return basic_by_rodrigues(nd.op, n_max);
    if (route == "formula1") return basic_by_formula1(nd.op, n_max);
    if (route == "formula3") return basic_by_formula3(nd.op, n_max);
    throw InvalidParams("unknown route '" + route + "'");
}

template <class K>
std::string render_sequence(const RunConfig& cfg, const NamedDelta<K>& nd, const PolySeq<K>& seq) {
    if (cfg.format == "json") return seq_to_json(seq, nd.label).dump(2) + "\n";
    if (cfg.format == "csv") return seq_to_csv(seq);
    if (cfg.format == "latex") return seq_to_latex(seq, nd.label);
    std::ostringstream os;
    os << "# delta = " << nd.label << ", psi = " << seq.psi->tag()
       << ", route = " << route_tag(seq.route) << "\n";
    for (int n = 0; n <= seq.n_max(); ++n) os << "p_" << n << " = " << seq.at(n).text() << "\n";
    return os.str();
}

template <class K>
int cmd_basic(const RunConfig& cfg, const Rational& q0) {
    auto psi = make_psi<K>(cfg, q0);
    auto nd = make_delta<K>(cfg, psi);
    std::string payload;
    if (cfg.all_routes) {
        auto def = sequence_by_route(nd, "definition", cfg.n_max);
        bool agree = true;
        payload += render_sequence(cfg, nd, def);
        for (const char* r : {"rodrigues", "formula1", "formula3"}) {
            auto seq = sequence_by_route(nd, r, cfg.n_max);
            agree = agree && seq.polys == def.polys;
            payload += render_sequence(cfg, nd, seq);
        }
        payload += agree ? "# all routes agree\n" : "# ROUTE DISAGREEMENT\n";
        emit(cfg, payload);
        return agree ? 0 : kExitViolation;
    }
    emit(cfg, render_sequence(cfg, nd, sequence_by_route(nd, cfg.route, cfg.n_max)));
    return 0;
}

template <class K>
Report run_suite(const RunConfig& cfg, const std::string& suite, const Rational& q0) {
    auto psi = make_psi<K>(cfg, q0);
    auto nd = make_delta<K>(cfg, psi);
    if (suite == "binomial") return suite_binomial(nd, cfg.n_max);
    if (suite == "expansion1") return suite_expansion1(nd, std::min(cfg.n_max, 6));
    if (suite == "expansion2") return suite_expansion2(nd, cfg.n_max);
    if (suite == "gf") return suite_gf(nd, std::min(cfg.n_max, 6));
    if (suite == "sheffer") return suite_sheffer(nd, std::min(cfg.n_max, 6));
    if (suite == "inner") return suite_inner(nd, std::min(cfg.n_max, 6));
    if (suite == "spectral") return suite_spectral(nd, std::min(cfg.n_max, 5));
    if (suite == "oscillator") return suite_oscillator(nd, *psi, cfg.n_max);
    if (suite == "incidence") return suite_incidence(*psi, std::min(cfg.ground, 6));
    if (suite == "errata") return suite_errata(psi, cfg.order, std::min(cfg.n_max, 6));
    throw InvalidParams("unknown suite '" + suite + "'");
}

template <class K>
int cmd_verify(const RunConfig& cfg, const Rational& q0) {
    std::vector<std::string> suites;
    if (cfg.suite == "all") {
        suites = {"binomial", "expansion1", "expansion2", "gf",        "sheffer",
                  "inner",    "spectral",   "oscillator", "incidence", "errata"};
    } else {
        suites = {cfg.suite};
    }
    Report all;
    for (const auto& s : suites) {
        Report r = run_suite<K>(cfg, s, q0);
        for (auto& c : r) all.push_back({s + ": " + c.name, c.result});
    }
    std::string payload;
    if (cfg.format == "json") {
        Json checks = Json::array();
        for (const auto& c : all) {
            Json e;
            e["check"] = c.name;
            e["pass"] = c.result.pass;
            if (!c.result.pass) e["witness"] = c.result.witness;
            checks.push_back(std::move(e));
        }
        Json j;
        j["checks"] = std::move(checks);
        for (const auto& s : suites) {
            if (s == "oscillator") {
                auto psi = make_psi<K>(cfg, q0);
                auto rep = qplane_binomial_obstruction(*psi, std::min(cfg.n_max, 6));
                j["qplane"] = qplane_report_json(*psi, rep);
            }
        }
        payload = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& c : all) {
            os << (c.result.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.result.pass) os << "  -- " << c.result.witness;
            os << "\n";
        }
        os << (all_pass(all) ? "all checks passed\n" : "CHECKS FAILED\n");
        payload = os.str();
    }
    emit(cfg, payload);
    return all_pass(all) ? 0 : kExitViolation;
}

template <class K>
int cmd_export(const RunConfig& cfg, const Rational& q0) {
    auto psi = make_psi<K>(cfg, q0);
    if (cfg.what == "sequence") {
        auto nd = make_delta<K>(cfg, psi);
        emit(cfg, render_sequence(cfg, nd, sequence_by_route(nd, cfg.route, cfg.n_max)));
        return 0;
    }
    if (cfg.what == "indicator") {
        auto nd = make_delta<K>(cfg, psi);
        emit(cfg, indicator_to_json(nd.op).dump(2) + "\n");
        return 0;
    }
    if (cfg.what == "incidence-table") {
        if (cfg.format == "csv")
            emit(cfg, incidence_table_csv(*psi, cfg.ground));
        else
            emit(cfg, incidence_table_json(*psi, cfg.ground).dump(2) + "\n");
        return 0;
    }
    throw InvalidParams("unknown export target '" + cfg.what + "'");
}

template <class K>
int dispatch(const std::string& cmd, const RunConfig& cfg, const Rational& q0) {
    if (cfg.n_max >= cfg.order) throw InvalidParams("n_max must be smaller than the order");
    int rc = 0;
    if (cmd == "basic")
        rc = cmd_basic<K>(cfg, q0);
    else if (cmd == "verify")
        rc = cmd_verify<K>(cfg, q0);
    else
        rc = cmd_export<K>(cfg, q0);
    if (cfg.stats) std::cerr << "max q-degree seen: " << Scalar::max_degree_seen() << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact psi-umbral calculus engine over Q(q)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--psi", cfg.psi_spec, "psi family: classical | q | custom:<file.json>");
        sub->add_option("--delta", cfg.delta_spec,
                        "delta operator: dpsi | dfwd[:a=s] | nbwd[:a=s] | abel[:a=s] | laguerre");
        sub->add_option("--order", cfg.order, "truncation order N (default 16)");
        sub->add_option("--n", cfg.n_max, "sequence length / check depth (default 6)");
        sub->add_option("--format", cfg.format, "output format: plain | json | csv | latex");
        sub->add_option("--at-q", cfg.at_q, "numeric mode: run over Q with q = p/r");
        sub->add_option("-o,--out", cfg.out_path, "write output to a file instead of stdout");
        sub->add_flag("--stats", cfg.stats, "print the max q-degree diagnostic to stderr");
    };

    CLI::App* basic = app.add_subcommand("basic", "generate a basic sequence");
    add_common(basic);
    basic->add_flag("--all-routes", cfg.all_routes, "emit all four routes and compare");
    basic->add_option("--route", cfg.route, "definition | rodrigues | formula1 | formula3");

    CLI::App* verify = app.add_subcommand("verify", "run identity suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suite,
                       "binomial | expansion1 | expansion2 | gf | sheffer | inner | spectral | "
                       "oscillator | incidence | errata | all");
    verify->add_option("--m", cfg.ground, "incidence ground-set size");

    CLI::App* exp = app.add_subcommand("export", "export sequences, indicators, tables");
    add_common(exp);
    exp->add_option("--what", cfg.what, "sequence | indicator | incidence-table");
    exp->add_option("--route", cfg.route, "sequence construction route");
    exp->add_option("--m", cfg.ground, "incidence ground-set size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cfg.at_q.empty()) return dispatch<Scalar>(cmd, cfg, Rational(1));
        return dispatch<Rational>(cmd, cfg, Rational::parse(cfg.at_q));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
