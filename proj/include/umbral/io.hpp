#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "umbral/catalog.hpp"
#include "umbral/incidence.hpp"
#include "umbral/oscillator.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

template <ExactField K>
Json poly_to_json(const Poly<K>& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).text());
    return coeffs;
}

template <ExactField K>
Poly<K> poly_from_json(const Json& j) {
    std::vector<K> c;
    for (const auto& s : j) c.push_back(K::parse(s.template get<std::string>()));
    return Poly<K>(std::move(c));
}

template <ExactField K>
Json seq_to_json(const PolySeq<K>& seq, const std::string& delta_label) {
    Json j;
    j["delta"] = delta_label;
    j["psi"] = seq.psi->tag();
    j["route"] = route_tag(seq.route);
    Json polys = Json::array();
    for (const auto& p : seq.polys) polys.push_back(poly_to_json(p));
    j["polys"] = std::move(polys);
    return j;
}

template <ExactField K>
std::vector<Poly<K>> polys_from_json(const Json& j) {
    std::vector<Poly<K>> out;
    for (const auto& jp : j.at("polys")) out.push_back(poly_from_json<K>(jp));
    return out;
}

/// One row per (n, k, coefficient), zero coefficients omitted.
template <ExactField K>
std::string seq_to_csv(const PolySeq<K>& seq) {
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (int n = 0; n <= seq.n_max(); ++n)
        for (int k = 0; k <= seq.at(n).degree(); ++k) {
            K c = seq.at(n).coeff(k);
            if (c.is_zero()) continue;
            os << n << "," << k << "," << c.text() << "\n";
        }
    return os.str();
}

template <ExactField K>
std::string seq_to_latex(const PolySeq<K>& seq, const std::string& delta_label) {
    std::ostringstream os;
    os << "% basic/Sheffer sequence, delta = " << delta_label << ", psi = " << seq.psi->tag()
       << ", route = " << route_tag(seq.route) << "\n";
    os << "\\begin{tabular}{rl}\n";
    os << "$n$ & $p_n(x)$ \\\\\n\\hline\n";
    for (int n = 0; n <= seq.n_max(); ++n) os << n << " & $" << seq.at(n).text() << "$ \\\\\n";
    os << "\\end{tabular}\n";
    return os.str();
}

template <ExactField K>
Json indicator_to_json(const Indicator<K>& t) {
    Json j;
    j["psi"] = t.psi()->tag();
    j["order"] = t.order();
    Json coeffs = Json::array();
    for (int k = 0; k <= t.order(); ++k) coeffs.push_back(t.normalized(k).text());
    j["normalized"] = std::move(coeffs);
    return j;
}

/// Comparison table: subset enumeration against the psi-binomial convolution
/// of zeta with itself (they agree exactly in the classical family).
template <ExactField K>
Json incidence_table_json(const PsiSequence<K>& psi, int m) {
    BooleanLattice l(m);
    auto z = TypeFunction<K>::zeta(m);
    auto e = enum_convolve(l, z, z);
    auto s = series_convolve(psi, z, z);
    Json rows = Json::array();
    for (int n = 0; n <= m; ++n) {
        Json row;
        row["n"] = n;
        row["enum"] = e.at(n).text();
        row["series"] = s.at(n).text();
        row["match"] = e.at(n) == s.at(n);
        rows.push_back(std::move(row));
    }
    Json j;
    j["psi"] = psi.tag();
    j["m"] = m;
    j["rows"] = std::move(rows);
    return j;
}

template <ExactField K>
std::string incidence_table_csv(const PsiSequence<K>& psi, int m) {
    Json j = incidence_table_json(psi, m);
    std::ostringstream os;
    os << "n,enum,series,match\n";
    for (const auto& row : j["rows"])
        os << row["n"] << "," << row["enum"].template get<std::string>() << ","
           << row["series"].template get<std::string>() << ","
           << (row["match"].template get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

template <ExactField K>
Json qplane_report_json(const PsiSequence<K>& psi, const QPlaneReport<K>& rep) {
    Json rows = Json::array();
    for (const auto& e : rep.entries) {
        Json row;
        row["psi"] = psi.tag();
        row["n"] = e.n;
        row["lhs"] = e.lhs;
        row["rhs"] = e.rhs;
        row["equal"] = e.equal;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Custom psi ingestion: {"n_psi": ["1", "4", ...]} with canonical scalar text.
inline std::vector<std::string> custom_psi_strings(const Json& j) {
    if (!j.contains("n_psi") || !j["n_psi"].is_array())
        throw ParseError("custom psi file needs an \"n_psi\" array");
    std::vector<std::string> out;
    for (const auto& e : j["n_psi"]) out.push_back(e.template get<std::string>());
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

}  // namespace umbral
