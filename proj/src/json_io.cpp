#include "tabcrystal/json_io.hpp"

#include <string>

namespace tabcrystal {

void to_json(json& j, const Partition& p) {
    j = p.parts();
}

void from_json(const json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const Tableau& t) {
    json rows = json::array();
    for (int r = 0; r < t.shape().length(); ++r) {
        json row = json::array();
        for (int c = t.inner()[static_cast<std::size_t>(r)]; c < t.shape()[static_cast<std::size_t>(r)]; ++c)
            row.push_back(t.at(r, c));
        rows.push_back(std::move(row));
    }
    j = json{{"shape", t.shape()}, {"inner", t.inner()}, {"rows", std::move(rows)}};
}

void from_json(const json& j, Tableau& t) {
    const Partition outer = j.at("shape").get<Partition>();
    const Partition inner = j.contains("inner") ? j.at("inner").get<Partition>() : Partition{};
    const auto short_rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(short_rows.size()) != outer.length())
        throw std::invalid_argument("tableau JSON: row count does not match shape");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < outer.length(); ++r) {
        std::vector<int> row(static_cast<std::size_t>(inner[static_cast<std::size_t>(r)]), 0);
        row.insert(row.end(), short_rows[static_cast<std::size_t>(r)].begin(),
                   short_rows[static_cast<std::size_t>(r)].end());
        rows.push_back(std::move(row));
    }
    t = inner.empty() ? Tableau(std::move(rows)) : Tableau(outer, inner, std::move(rows));
    if (t.shape() != outer)
        throw std::invalid_argument("tableau JSON: rows do not match shape");
}

void to_json(json& j, const LaurentPoly& p) {
    json coeffs = json::object();
    for (auto [e, c] : p.terms())
        coeffs[std::to_string(e)] = c;
    j = json{{"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, LaurentPoly& p) {
    std::map<int, LaurentPoly::Coeff> terms;
    for (const auto& [key, value] : j.at("coeffs").items())
        terms[std::stoi(key)] += value.get<LaurentPoly::Coeff>();
    p = LaurentPoly::from_map(terms);
}

void to_json(json& j, const Permutation& w) {
    j = w.one_line();
}

json verdict_json(const VerificationReport& r) {
    return r.passed() ? json("pass") : json(*r.counterexample);
}

void to_json(json& j, const VerificationReport& r) {
    j = json{{"name", r.name}, {"checks", r.checks}, {"result", verdict_json(r)}};
}

void to_json(json& j, const CrystalGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({e.source, e.color, e.target});
    j = json{{"k", g.k}, {"root", g.root}, {"vertices", g.vertices}, {"edges", std::move(edges)}};
}

void to_json(json& j, const CspReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"d", row.d},
                        {"fixed", row.fixed},
                        {"value", row.value ? json(*row.value) : json(nullptr)}});
    json orbit_sizes = json::object();
    for (auto [size, count] : r.orbit_sizes)
        orbit_sizes[std::to_string(size)] = count;
    j = json{{"shape", r.shape},
             {"k", r.k},
             {"mode", to_string(r.mode)},
             {"set_size", r.set_size},
             {"order", r.order},
             {"polynomial", r.polynomial},
             {"normalization", r.normalization},
             {"rows", std::move(rows)},
             {"orbit_sizes", std::move(orbit_sizes)},
             {"orbit_count", r.orbit_count},
             {"order_ok", r.order_ok},
             {"orbit_sum_ok", r.orbit_sum_ok},
             {"verdict", r.verdict ? "pass" : "fail"}};
    if (r.diagnostics)
        j["diagnostics"] = *r.diagnostics;
}

void to_json(json& j, const StembridgeReport& r) {
    j = json{{"shape", r.shape},
             {"k", r.k},
             {"epsilon", r.epsilon},
             {"ssyt", {{"count", r.ssyt_count}, {"fixed", r.ssyt_fixed}, {"x_at_minus_one", r.ssyt_value},
                       {"verdict", r.ssyt_ok() ? "pass" : "fail"}}},
             {"syt", {{"count", r.syt_count}, {"fixed", r.syt_fixed}, {"x_at_minus_one", r.syt_value},
                      {"verdict", r.syt_ok() ? "pass" : "fail"}}},
             {"verdict", r.passed() ? "pass" : "fail"}};
}

void to_json(json& j, const BranchingReport& r) {
    j = json{{"a", r.a},
             {"m", r.m},
             {"k", r.k},
             {"sizes", r.sizes},
             {"total", r.total},
             {"cardinality", verdict_json(r.cardinality)},
             {"commutation", verdict_json(r.commutation)},
             {"xi_commutation", verdict_json(r.xi_commutation)},
             {"content", verdict_json(r.content)},
             {"verdict", r.passed() ? "pass" : "fail"}};
}

void to_json(json& j, const SignReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"j", row.j},
                        {"eps_rect", row.eps_rect},
                        {"eps_branch", row.eps_branch},
                        {"expected", row.expected},
                        {"ok", row.ok()}});
    j = json{{"a", r.a}, {"m", r.m}, {"k", r.k}, {"rows", std::move(rows)},
             {"verdict", r.passed() ? "pass" : "fail"}};
}

void to_json(json& j, const CellReport& r) {
    j = json{{"a", r.a},
             {"m", r.m},
             {"source_size", r.source_size},
             {"target_size", r.target_size},
             {"hook_count", r.hook_count},
             {"bijection", verdict_json(r.bijection)},
             {"insertion", verdict_json(r.insertion)},
             {"verdict", r.passed() ? "pass" : "fail"}};
}

}  // namespace tabcrystal
