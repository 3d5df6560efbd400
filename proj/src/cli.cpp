#include "tabcrystal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "tabcrystal/branching.hpp"
#include "tabcrystal/crystal.hpp"
#include "tabcrystal/jdt.hpp"
#include "tabcrystal/json_io.hpp"
#include "tabcrystal/rsk.hpp"

namespace tabcrystal::cli {

namespace {

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError("invalid " + what + ": '" + s + "'");
}

// ---- output helpers ---------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

template <class Seq>
std::string joined(const Seq& xs, const char* sep = ";") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        os << (first ? "" : sep) << x;
        first = false;
    }
    return os.str();
}

std::string compact_rows(const Tableau& t) {
    std::ostringstream os;
    for (int r = 0; r < t.shape().length(); ++r) {
        if (r)
            os << '/';
        for (int c = 0; c < t.shape()[static_cast<std::size_t>(r)]; ++c)
            os << (c ? " " : "") << t.at(r, c);
    }
    return os.str();
}

std::string orbit_sizes_text(const std::map<std::size_t, std::size_t>& sizes) {
    std::ostringstream os;
    bool first = true;
    for (auto [size, count] : sizes) {
        os << (first ? "" : " ") << size << 'x' << count;
        first = false;
    }
    return os.str();
}

const char* pass_fail(bool ok) {
    return ok ? "pass" : "fail";
}

std::string verdict_text(const VerificationReport& r) {
    return r.passed() ? "pass" : "fail: " + *r.counterexample;
}

// ---- sweep cases ------------------------------------------------------------

struct RectCase {
    int a = 0;
    int m = 0;
    int k = 0;
};

struct ShapeCase {
    Partition shape;
    int k = 0;
};

/// One evaluated case: JSON report, verdict, CSV rows, and a text line.
struct CaseResult {
    json report;
    bool passed = true;
    std::vector<std::vector<std::string>> csv;
    std::string text;
};

std::pair<int, int> key_range(const RunConfig& cfg, char key, std::optional<int> fixed) {
    if (cfg.sweep && cfg.sweep->has(key))
        return cfg.sweep->range(key);
    if (fixed)
        return {*fixed, *fixed};
    throw UsageError(std::string("missing parameter '") + key + "' (give a flag or a --sweep range)");
}

std::optional<int> rect_a(const RunConfig& cfg) {
    if (cfg.rect)
        return cfg.rect->first;
    if (cfg.shape && cfg.shape->is_rectangular() && !cfg.shape->empty())
        return cfg.shape->length();
    return std::nullopt;
}

std::optional<int> rect_m(const RunConfig& cfg) {
    if (cfg.rect)
        return cfg.rect->second;
    if (cfg.shape && cfg.shape->is_rectangular() && !cfg.shape->empty())
        return (*cfg.shape)[0];
    return std::nullopt;
}

void require_rectangle(const RunConfig& cfg) {
    if (cfg.shape && !cfg.rect && !cfg.shape->is_rectangular())
        throw UsageError("shape " + cfg.shape->to_string() + " is not a rectangle");
    if (cfg.shape && cfg.shape->empty())
        throw UsageError("shape must be nonempty");
}

/// Rectangles in the sweep; `keep` filters (a, m, k) combinations.
std::vector<RectCase> rect_cases(const RunConfig& cfg, bool with_k,
                                 const std::function<bool(const RectCase&)>& keep) {
    require_rectangle(cfg);
    const auto [a0, a1] = key_range(cfg, 'a', rect_a(cfg));
    const auto [m0, m1] = key_range(cfg, 'm', rect_m(cfg));
    std::pair<int, int> kr{0, 0};
    if (with_k)
        kr = key_range(cfg, 'k', cfg.k);
    std::optional<std::pair<int, int>> nr;
    if (cfg.sweep && cfg.sweep->has('n'))
        nr = cfg.sweep->range('n');
    if (a0 < 1 || m0 < 1 || (with_k && kr.first < 1))
        throw UsageError("a, m and k must be positive");
    std::vector<RectCase> out;
    for (int k = kr.first; k <= kr.second; ++k)
        for (int a = a0; a <= a1; ++a)
            for (int m = m0; m <= m1; ++m) {
                if (nr && (a * m < nr->first || a * m > nr->second))
                    continue;
                RectCase c{a, m, k};
                if (keep(c))
                    out.push_back(c);
            }
    if (out.empty())
        throw UsageError("no admissible parameters in the requested range");
    return out;
}

// ---- parallel evaluation ----------------------------------------------------

/// Evaluates f(0..n-1) on `threads` workers. Results are stored by index, so
/// the output never depends on scheduling. The seed permutes dispatch order.
template <class F>
std::vector<CaseResult> parallel_map(std::size_t n, int threads, std::uint64_t seed, F f) {
    std::vector<CaseResult> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t slot; (slot = next.fetch_add(1)) < n;) {
            const std::size_t i = order[slot];
            try {
                results[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

// ---- per-command evaluation -------------------------------------------------

CaseResult csp_case(const Partition& lambda, int k, CspMode mode) {
    const CspReport r = verify_csp(lambda, k, mode);
    std::vector<std::size_t> fixed;
    std::vector<std::string> values;
    for (const auto& row : r.rows) {
        fixed.push_back(row.fixed);
        values.push_back(row.value ? std::to_string(*row.value) : "?");
    }
    CaseResult c;
    c.report = r;
    c.passed = r.verdict;
    c.csv.push_back({r.shape.to_string(), std::to_string(r.k), to_string(r.mode), std::to_string(r.set_size),
                     std::to_string(r.order), r.polynomial.to_string(), joined(fixed), joined(values),
                     orbit_sizes_text(r.orbit_sizes), pass_fail(r.verdict)});
    std::ostringstream os;
    os << r.shape.to_string() << " k=" << r.k << ' ' << to_string(r.mode) << ": |set|=" << r.set_size
       << " n=" << r.order << " X=" << r.polynomial.to_string() << " fix=[" << joined(fixed, ",")
       << "] X(zeta^d)=[" << joined(values, ",") << "] orbits " << orbit_sizes_text(r.orbit_sizes) << "  "
       << (r.verdict ? "PASS" : "FAIL");
    if (r.diagnostics)
        os << " (" << *r.diagnostics << ')';
    c.text = os.str();
    return c;
}

CaseResult stembridge_case(const ShapeCase& sc) {
    const StembridgeReport r = verify_stembridge(sc.shape, sc.k);
    CaseResult c;
    c.report = r;
    c.passed = r.passed();
    c.csv.push_back({r.shape.to_string(), std::to_string(r.k), std::to_string(r.ssyt_count),
                     std::to_string(r.ssyt_fixed), std::to_string(r.ssyt_value), std::to_string(r.syt_count),
                     std::to_string(r.syt_fixed), std::to_string(r.syt_value), std::to_string(r.epsilon),
                     pass_fail(r.passed())});
    std::ostringstream os;
    os << r.shape.to_string() << " k=" << r.k << ": SSYT " << r.ssyt_count << " fixed " << r.ssyt_fixed
       << " X(-1)=" << r.ssyt_value << "; SYT " << r.syt_count << " fixed " << r.syt_fixed
       << " f(-1)=" << r.syt_value << "; eps=" << r.epsilon << "  " << (r.passed() ? "PASS" : "FAIL");
    c.text = os.str();
    return c;
}

CaseResult branching_case(const RectCase& rc) {
    const BranchingReport r = verify_branching(rc.a, rc.m, rc.k);
    CaseResult c;
    c.report = r;
    c.passed = r.passed();
    c.csv.push_back({std::to_string(r.a), std::to_string(r.m), std::to_string(r.k), joined(r.sizes),
                     std::to_string(r.total), verdict_text(r.cardinality), verdict_text(r.commutation),
                     verdict_text(r.xi_commutation), verdict_text(r.content), pass_fail(r.passed())});
    std::ostringstream os;
    os << "a=" << r.a << " m=" << r.m << " k=" << r.k << ": sizes " << joined(r.sizes, "+") << " = " << r.total
       << "; cardinality " << verdict_text(r.cardinality) << "; commutation " << verdict_text(r.commutation)
       << "; xi " << verdict_text(r.xi_commutation) << "; content " << verdict_text(r.content) << "  "
       << (r.passed() ? "PASS" : "FAIL");
    c.text = os.str();
    return c;
}

CaseResult lemma_zero_case(const RectCase& rc) {
    const VerificationReport r = verify_lemma_zero(rc.a, rc.m, rc.k);
    CaseResult c;
    c.report = json{{"a", rc.a}, {"m", rc.m}, {"k", rc.k}, {"checks", r.checks}, {"result", verdict_json(r)}};
    c.passed = r.passed();
    c.csv.push_back({std::to_string(rc.a), std::to_string(rc.m), std::to_string(rc.k), std::to_string(r.checks),
                     pass_fail(r.passed()), r.counterexample.value_or("")});
    std::ostringstream os;
    os << "a=" << rc.a << " m=" << rc.m << " k=" << rc.k << ": " << r.checks << " checks  "
       << (r.passed() ? "PASS" : "FAIL: " + *r.counterexample);
    c.text = os.str();
    return c;
}

CaseResult cells_case(const RectCase& rc) {
    const CellReport r = verify_cell_bijection(rc.a, rc.m);
    CaseResult c;
    c.report = r;
    c.passed = r.passed();
    c.csv.push_back({std::to_string(r.a), std::to_string(r.m), std::to_string(r.source_size),
                     std::to_string(r.target_size), std::to_string(r.hook_count), verdict_text(r.bijection),
                     verdict_text(r.insertion), pass_fail(r.passed())});
    std::ostringstream os;
    os << "a=" << r.a << " m=" << r.m << ": |C^|=" << r.source_size << " |C|=" << r.target_size
       << " f=" << r.hook_count << "; bijection " << verdict_text(r.bijection) << "; insertion "
       << verdict_text(r.insertion) << "  " << (r.passed() ? "PASS" : "FAIL");
    c.text = os.str();
    return c;
}

CaseResult sign_case(const RectCase& rc) {
    const SignReport r = sign_identity(rc.a, rc.m, rc.k);
    CaseResult c;
    c.report = r;
    c.passed = r.passed();
    std::ostringstream os;
    os << "a=" << r.a << " m=" << r.m << " k=" << r.k << ":";
    for (const auto& row : r.rows) {
        c.csv.push_back({std::to_string(r.a), std::to_string(r.m), std::to_string(r.k), std::to_string(row.j),
                         std::to_string(row.eps_rect), std::to_string(row.eps_branch),
                         std::to_string(row.expected), pass_fail(row.ok())});
        os << " j=" << row.j << (row.ok() ? "" : "(!)");
    }
    os << "  " << (r.passed() ? "PASS" : "FAIL");
    c.text = os.str();
    return c;
}

// ---- writers ----------------------------------------------------------------

struct Table {
    std::vector<std::string> header;
    std::vector<CaseResult> cases;
};

int write_verification(const RunConfig& cfg, const Table& table, std::ostream& out, std::ostream& err) {
    std::size_t passed = 0;
    const CaseResult* first_fail = nullptr;
    for (const auto& c : table.cases) {
        passed += c.passed;
        if (!c.passed && !first_fail)
            first_fail = &c;
    }
    const bool ok = passed == table.cases.size();

    json counterexample;
    if (first_fail)
        counterexample = first_fail->report;

    switch (cfg.format) {
    case Format::json: {
        json doc{{"command", cfg.command},
                 {"cases", table.cases.size()},
                 {"passed", passed},
                 {"verdict", pass_fail(ok)}};
        json reports = json::array();
        for (const auto& c : table.cases)
            reports.push_back(c.report);
        doc["reports"] = std::move(reports);
        if (first_fail)
            doc["counterexample"] = counterexample;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        std::vector<std::string> header;
        for (const auto& h : table.header)
            header.push_back(csv_field(h));
        out << joined(header, ",") << '\n';
        for (const auto& c : table.cases)
            for (const auto& row : c.csv) {
                std::vector<std::string> fields;
                for (const auto& f : row)
                    fields.push_back(csv_field(f));
                out << joined(fields, ",") << '\n';
            }
        break;
    }
    case Format::text:
        for (const auto& c : table.cases)
            out << c.text << '\n';
        out << cfg.command << ": " << passed << '/' << table.cases.size() << " cases pass\n";
        break;
    case Format::dot:
        throw UsageError("dot output is only available for crystal-graph");
    }
    if (first_fail && cfg.format != Format::json)
        err << "counterexample: " << counterexample.dump() << '\n';
    return ok ? 0 : 1;
}

Partition single_shape(const RunConfig& cfg) {
    if (cfg.shape && cfg.rect)
        throw UsageError("give either --shape or --rect, not both");
    if (cfg.shape)
        return *cfg.shape;
    if (cfg.rect)
        return rectangle(cfg.rect->first, cfg.rect->second);
    throw UsageError("missing --shape or --rect");
}

int require_k(const RunConfig& cfg, const Partition& lambda) {
    if (!cfg.k)
        throw UsageError("missing --k");
    if (*cfg.k < 1)
        throw UsageError("--k must be positive");
    if (*cfg.k < lambda.length())
        throw UsageError("--k must be at least the number of rows of " + lambda.to_string());
    return *cfg.k;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const Partition lambda = single_shape(cfg);
    int k = 0;
    std::vector<Tableau> set;
    if (cfg.mode == CspMode::ssyt) {
        k = require_k(cfg, lambda);
        set = enumerate_ssyt(lambda, k);
    } else {
        set = enumerate_syt(lambda);
        k = lambda.size();
    }
    switch (cfg.format) {
    case Format::json:
        out << json{{"command", "enumerate"}, {"shape", lambda}, {"k", k}, {"mode", to_string(cfg.mode)},
                    {"count", set.size()}, {"tableaux", set}}
                   .dump(2)
            << '\n';
        break;
    case Format::csv:
        out << "index,rows\n";
        for (std::size_t i = 0; i < set.size(); ++i)
            out << i << ',' << csv_field(compact_rows(set[i])) << '\n';
        break;
    case Format::text:
        for (const auto& t : set)
            out << t.to_string() << '\n';
        out << set.size() << " tableaux of shape " << lambda.to_string() << '\n';
        break;
    case Format::dot:
        throw UsageError("dot output is only available for crystal-graph");
    }
    return 0;
}

int cmd_crystal_graph(const RunConfig& cfg, std::ostream& out) {
    const Partition lambda = single_shape(cfg);
    const CrystalGraph g = crystal_graph(lambda, require_k(cfg, lambda));
    switch (cfg.format) {
    case Format::json:
        out << json(g).dump(2) << '\n';
        break;
    case Format::dot:
        out << to_dot(g);
        break;
    case Format::csv:
        out << "source,color,target\n";
        for (const auto& e : g.edges)
            out << csv_field(compact_rows(g.vertices[e.source])) << ',' << e.color << ','
                << csv_field(compact_rows(g.vertices[e.target])) << '\n';
        break;
    case Format::text:
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            out << v << ": " << g.vertices[v].to_string() << (v == g.root ? "  (highest weight)" : "") << '\n';
        for (const auto& e : g.edges)
            out << e.source << " -" << e.color << "-> " << e.target << '\n';
        break;
    }
    return 0;
}

int cmd_orbit_report(const RunConfig& cfg, std::ostream& out) {
    const Partition lambda = single_shape(cfg);
    std::vector<Tableau> set;
    int k = 0;
    if (cfg.mode == CspMode::ssyt) {
        k = require_k(cfg, lambda);
        set = enumerate_ssyt(lambda, k);
    } else {
        set = enumerate_syt(lambda);
        k = lambda.size();
    }
    TableauAction action;
    if (cfg.action == "promotion") {
        if (!lambda.is_rectangular())
            throw UsageError("promotion orbits need a rectangular shape");
        action = [k](const Tableau& t) { return promotion(t, k); };
    } else if (cfg.action == "evacuation") {
        action = [k](const Tableau& t) { return partial_xi(t, k); };
    } else {
        throw UsageError("unknown action '" + cfg.action + "' (promotion|evacuation)");
    }
    const OrbitDecomposition o = orbits(set, action);
    switch (cfg.format) {
    case Format::json: {
        json cycles = json::array();
        for (const auto& cyc : o.cycles) {
            json members = json::array();
            for (std::size_t i : cyc)
                members.push_back(set[i]);
            cycles.push_back(std::move(members));
        }
        json sizes = json::object();
        for (auto [size, count] : o.size_multiset())
            sizes[std::to_string(size)] = count;
        out << json{{"command", "orbit-report"}, {"shape", lambda}, {"k", k}, {"mode", to_string(cfg.mode)},
                    {"action", cfg.action}, {"set_size", set.size()}, {"order", o.order()},
                    {"orbit_sizes", std::move(sizes)}, {"orbits", std::move(cycles)}}
                   .dump(2)
            << '\n';
        break;
    }
    case Format::csv:
        out << "orbit,size,position,tableau\n";
        for (std::size_t c = 0; c < o.cycles.size(); ++c)
            for (std::size_t p = 0; p < o.cycles[c].size(); ++p)
                out << c << ',' << o.cycles[c].size() << ',' << p << ','
                    << csv_field(compact_rows(set[o.cycles[c][p]])) << '\n';
        break;
    case Format::text:
        for (std::size_t c = 0; c < o.cycles.size(); ++c) {
            out << "orbit " << c << " (size " << o.cycles[c].size() << "):";
            for (std::size_t i : o.cycles[c])
                out << ' ' << set[i].to_string();
            out << '\n';
        }
        out << o.cycles.size() << " orbits, sizes " << orbit_sizes_text(o.size_multiset()) << ", order "
            << o.order() << '\n';
        break;
    case Format::dot:
        throw UsageError("dot output is only available for crystal-graph");
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const int threads =
        cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    Table table;
    const std::string& c = cfg.command;

    if (c == "verify-csp") {
        const bool ssyt = cfg.mode == CspMode::ssyt;
        const auto cases = rect_cases(cfg, ssyt, [ssyt](const RectCase& rc) { return !ssyt || rc.a <= rc.k; });
        table.header = {"shape", "k", "mode", "set_size", "order", "polynomial", "fixed", "values", "orbit_sizes",
                        "verdict"};
        table.cases = parallel_map(cases.size(), threads, cfg.seed, [&](std::size_t i) {
            return csp_case(rectangle(cases[i].a, cases[i].m), cases[i].k, cfg.mode);
        });
    } else if (c == "verify-stembridge") {
        std::vector<ShapeCase> cases;
        if (cfg.sweep) {
            const auto [n0, n1] = key_range(cfg, 'n', std::nullopt);
            const auto [k0, k1] = key_range(cfg, 'k', cfg.k);
            if (n0 < 1 || k0 < 1)
                throw UsageError("n and k must be positive");
            for (int n = n0; n <= n1; ++n)
                for (int k = k0; k <= k1; ++k)
                    for (const auto& lam : partitions_of(n, k))
                        cases.push_back({lam, k});
        } else {
            const Partition lambda = single_shape(cfg);
            cases.push_back({lambda, require_k(cfg, lambda)});
        }
        table.header = {"shape", "k", "ssyt_count", "ssyt_fixed", "ssyt_x_minus_one", "syt_count", "syt_fixed",
                        "syt_x_minus_one", "epsilon", "verdict"};
        table.cases = parallel_map(cases.size(), threads, cfg.seed,
                                   [&](std::size_t i) { return stembridge_case(cases[i]); });
    } else if (c == "verify-branching" || c == "verify-lemma-zero" || c == "sign-identity") {
        const auto cases = rect_cases(cfg, true, [](const RectCase& rc) { return rc.a <= rc.k - 1; });
        if (c == "verify-branching") {
            table.header = {"a", "m", "k", "sizes", "total", "cardinality", "commutation", "xi_commutation",
                            "content", "verdict"};
            table.cases = parallel_map(cases.size(), threads, cfg.seed,
                                       [&](std::size_t i) { return branching_case(cases[i]); });
        } else if (c == "verify-lemma-zero") {
            table.header = {"a", "m", "k", "checks", "verdict", "counterexample"};
            table.cases = parallel_map(cases.size(), threads, cfg.seed,
                                       [&](std::size_t i) { return lemma_zero_case(cases[i]); });
        } else {
            table.header = {"a", "m", "k", "j", "eps_rect", "eps_branch", "expected", "ok"};
            table.cases = parallel_map(cases.size(), threads, cfg.seed,
                                       [&](std::size_t i) { return sign_case(cases[i]); });
        }
    } else if (c == "verify-cells") {
        const auto cases = rect_cases(cfg, false, [](const RectCase&) { return true; });
        for (const auto& rc : cases)
            if (rc.a * rc.m > 10)
                throw UsageError("verify-cells filters S_{ma} and needs ma <= 10");
        table.header = {"a", "m", "source_size", "target_size", "hook_count", "bijection", "insertion", "verdict"};
        table.cases = parallel_map(cases.size(), threads, cfg.seed,
                                   [&](std::size_t i) { return cells_case(cases[i]); });
    } else {
        throw UsageError("unknown command '" + c + "'");
    }
    return write_verification(cfg, table, out, err);
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.sweep && (cfg.command == "enumerate" || cfg.command == "crystal-graph" || cfg.command == "orbit-report"))
        throw UsageError("--sweep applies to verification commands only");
    if (cfg.format == Format::dot && cfg.command != "crystal-graph")
        throw UsageError("dot output is only available for crystal-graph");
    if (cfg.command == "enumerate")
        return cmd_enumerate(cfg, out);
    if (cfg.command == "crystal-graph")
        return cmd_crystal_graph(cfg, out);
    if (cfg.command == "orbit-report")
        return cmd_orbit_report(cfg, out);
    return cmd_verify(cfg, out, err);
}

}  // namespace

Sweep parse_sweep(const std::string& text) {
    static const std::regex item(R"(\s*([amkn])\s*(<=|=)\s*(-?\d+)(?:\.\.(-?\d+))?\s*)");
    Sweep s;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch mt;
        if (!std::regex_match(part, mt, item) || (mt[2] == "<=" && mt[4].matched))
            throw UsageError("bad sweep item '" + part + "' (use key<=N, key=N or key=L..U with keys a, m, k, n)");
        const char key = mt[1].str()[0];
        const int first = to_int(mt[3].str(), "sweep bound");
        std::pair<int, int> range = mt[2] == "<=" ? std::pair{1, first}
                                    : mt[4].matched ? std::pair{first, to_int(mt[4].str(), "sweep bound")}
                                                    : std::pair{first, first};
        if (range.first > range.second)
            throw UsageError("empty sweep range for '" + std::string(1, key) + "'");
        if (!s.ranges.emplace(key, range).second)
            throw UsageError("sweep key '" + std::string(1, key) + "' given twice");
    }
    if (s.ranges.empty())
        throw UsageError("empty --sweep");
    return s;
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        parts.push_back(to_int(part, "shape part"));
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid shape '" + text + "': " + e.what());
    }
}

std::pair<int, int> parse_rect(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw UsageError("invalid rectangle '" + text + "' (expected AxM)");
    const int a = to_int(text.substr(0, x), "rectangle height");
    const int m = to_int(text.substr(x + 1), "rectangle width");
    if (a < 1 || m < 1)
        throw UsageError("rectangle sides must be positive");
    return {a, m};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output.empty())
            return dispatch(config, out, err);
        std::ostringstream buffer;
        const int status = dispatch(config, buffer, err);
        std::ofstream file(config.output, std::ios::binary);
        if (!file)
            throw UsageError("cannot open output file '" + config.output + "'");
        file << buffer.str();
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "verification aborted: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tableau crystals, promotion and cyclic sieving"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string shape, rect, mode = "ssyt", format = "json", sweep;
    std::optional<int> k;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"enumerate", "List SSYT(shape, k) or SYT(shape)"},
        {"crystal-graph", "Crystal graph of SSYT(shape, k)"},
        {"verify-csp", "Cyclic sieving for promotion on rectangles"},
        {"verify-stembridge", "q = -1 phenomenon for evacuation"},
        {"verify-branching", "Branching of a rectangle crystal"},
        {"verify-lemma-zero", "f-sequences on the highest weight tableau of a rectangle"},
        {"verify-cells", "Left cell bijection under RSK"},
        {"sign-identity", "Sign bookkeeping between rectangle and branch shapes"},
        {"orbit-report", "Orbits of promotion or evacuation"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--shape", shape, "Partition, e.g. 2,1");
        sub->add_option("--rect", rect, "Rectangle AxM (a rows of length m)");
        sub->add_option("--k", k, "Alphabet size");
        sub->add_option("--mode", mode, "ssyt or syt")->check(CLI::IsMember({"ssyt", "syt"}));
        sub->add_option("--format", format, "json, csv, dot or text")
            ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
        sub->add_option("--output", cfg.output, "Write the report to a file");
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "Seed for the work schedule");
        if (name != "enumerate" && name != "crystal-graph" && name != "orbit-report")
            sub->add_option("--sweep", sweep, "Parameter ranges, e.g. a<=3,m<=4,k<=4");
        if (name == "orbit-report")
            sub->add_option("--action", cfg.action, "promotion or evacuation")
                ->check(CLI::IsMember({"promotion", "evacuation"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!shape.empty())
            cfg.shape = parse_shape(shape);
        if (!rect.empty())
            cfg.rect = parse_rect(rect);
        cfg.k = k;
        cfg.mode = mode == "syt" ? CspMode::syt : CspMode::ssyt;
        cfg.format = format == "csv" ? Format::csv
                     : format == "dot" ? Format::dot
                     : format == "text" ? Format::text
                                        : Format::json;
        if (!sweep.empty())
            cfg.sweep = parse_sweep(sweep);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return run(cfg, out, err);
}

}  // namespace tabcrystal::cli
