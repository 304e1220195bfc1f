// bruhat: exact weak-order combinatorics on Sym(n).
//
// Subcommands: level, meet, pi, mult, genfun, rho, search, verify, table,
// explore-q63.  Exit codes: 0 ok / checks pass, 1 verification failure,
// 2 usage error, 3 budget exceeded.

#include "bruhat/cache.hpp"
#include "bruhat/config.hpp"
#include "bruhat/descent_systems.hpp"
#include "bruhat/genfun.hpp"
#include "bruhat/io.hpp"
#include "bruhat/levels.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/search.hpp"
#include "bruhat/verify.hpp"
#include "bruhat/version.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using bruhat::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string format = "text";
    std::string cache_dir;
    int threads = 1;
    std::uint64_t budget_nodes = 200'000'000ull;
    double budget_secs = 600.0;

    bruhat::SearchOptions search_options() const {
        bruhat::SearchOptions o;
        o.budget.max_nodes = budget_nodes;
        o.budget.max_seconds = budget_secs;
        o.threads = threads;
        return o;
    }
};

json envelope(const std::string& command, const json& params, const json& result) {
    return json{{"command", command},
                {"version", bruhat::kVersion},
                {"timestamp", bruhat::iso_timestamp()},
                {"params", params},
                {"result", result}};
}

void emit_json(const std::string& command, const json& params, const json& result) {
    std::cout << envelope(command, params, result).dump(2) << "\n";
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    if (bruhat::trim(text).empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        out.push_back(std::stoi(bruhat::trim(tok)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json outcome_result(const bruhat::SearchOutcome& o, const json& params) {
    json j = bruhat::json_of(o);
    j["params"] = params;
    return j;
}

// Renders a cached-or-fresh search result; witnesses print as one
// permutation-word list or as one set per line.
void print_result_text(const json& result) {
    std::cout << "problem:  " << result.value("problem", "") << "\n"
              << "optimum:  " << result["optimum"].dump() << "\n"
              << "is_star:  " << result["is_star"].dump() << "\n"
              << "optimal:  " << result["optimal"].dump() << "\n"
              << "nodes:    " << result["nodes"].dump() << "\n"
              << "elapsed:  " << result["elapsed_ms"].dump() << " ms\n";
    if (!result.contains("witness")) return;
    const json& w = result["witness"];
    std::cout << "witness:\n";
    if (w.contains("members")) {
        for (const auto& member : w["members"])
            std::cout << member.get<std::string>() << "\n";
    } else if (w.contains("sets")) {
        for (const auto& set : w["sets"]) {
            std::string line;
            for (const auto& e : set) {
                if (!line.empty()) line += ",";
                line += std::to_string(e.get<int>());
            }
            std::cout << line << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics on the weak Bruhat lattice of Sym(n)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    std::string config_path;
    app.add_option("--config", config_path, "path to key=value config file");
    auto* fmt_opt = app.add_option("--format", g.format, "output format")
                        ->check(CLI::IsMember({"text", "json", "csv"}));
    auto* cache_opt = app.add_option("--cache-dir", g.cache_dir, "result cache directory");
    auto* threads_opt = app.add_option("--threads", g.threads, "worker thread count")
                            ->check(CLI::PositiveNumber);
    auto* nodes_opt =
        app.add_option("--budget-nodes", g.budget_nodes, "search node budget");
    auto* secs_opt =
        app.add_option("--budget-secs", g.budget_secs, "search wall-clock budget");

    // level
    int n = 0, ell = 0, r = 0, t = 0, m = 0, k = 0;
    auto* cmd_level = app.add_subcommand("level", "enumerate B_l(n)");
    cmd_level->add_option("-n", n, "permutation size")->required();
    cmd_level->add_option("-l,--level", ell, "rank")->required();

    // meet
    std::string word_p, word_q;
    bool want_join = false;
    auto* cmd_meet = app.add_subcommand("meet", "weak-order meet (or join) of two permutations");
    cmd_meet->add_option("p", word_p, "first permutation")->required();
    cmd_meet->add_option("q", word_q, "second permutation")->required();
    cmd_meet->add_flag("--join", want_join, "compute the join instead");

    // pi
    std::string set_arg;
    auto* cmd_pi = app.add_subcommand("pi", "minimum permutation with the given inverse-descent set");
    cmd_pi->add_option("-n", n, "permutation size")->required();
    cmd_pi->add_option("--set", set_arg, "generator indices, e.g. 1,4");

    // mult
    bool want_witnesses = false;
    auto* cmd_mult = app.add_subcommand("mult", "multiplicity of a generator set at a level");
    cmd_mult->add_option("-n", n, "permutation size")->required();
    cmd_mult->add_option("-l,--level", ell, "rank")->required();
    cmd_mult->add_option("--set", set_arg, "generator indices, e.g. 1,4");
    cmd_mult->add_flag("--witnesses", want_witnesses, "list the witnesses");

    // genfun
    std::string kind, parts_arg;
    auto* cmd_genfun = app.add_subcommand("genfun", "generating functions and closed-form bounds");
    std::string num_arg, den_arg;
    cmd_genfun->add_option("kind", kind,
                           "qint|qfactorial|qbinomial|qmultinomial|quotient|divide|"
                           "partition|mult-bound|star-bounds|hm|frankl|threshold")
        ->required();
    cmd_genfun->add_option("-n", n, "n");
    cmd_genfun->add_option("-m", m, "m");
    cmd_genfun->add_option("-k", k, "k");
    cmd_genfun->add_option("-l,--level", ell, "l");
    cmd_genfun->add_option("-r", r, "r");
    cmd_genfun->add_option("--parts", parts_arg, "comma-separated parts for qmultinomial");
    cmd_genfun->add_option("--num", num_arg, "dividend coefficients, constant term first");
    cmd_genfun->add_option("--den", den_arg, "divisor coefficients, constant term first");

    // rho
    bool want_decompose = false, want_genfun = false;
    auto* cmd_rho = app.add_subcommand("rho", "the canonical rank-t permutation rho(t)");
    cmd_rho->add_option("-n", n, "permutation size")->required();
    cmd_rho->add_option("-t", t, "rank")->required();
    cmd_rho->add_flag("--decompose", want_decompose, "print the (i,j) decomposition");
    cmd_rho->add_flag("--genfun", want_genfun, "print the upset generating function");

    // search
    std::string search_kind;
    bool canonical = false, enumerate_ties = false;
    auto* cmd_search = app.add_subcommand("search", "exact maximum intersecting family");
    cmd_search->add_option("kind", search_kind, "level|full|separated|no-common")->required();
    cmd_search->add_option("-n", n, "permutation size");
    cmd_search->add_option("-r", r, "level / set size");
    cmd_search->add_option("-t", t, "intersection strength");
    cmd_search->add_option("-m", m, "ground-set size");
    cmd_search->add_option("-k", k, "set size");
    cmd_search->add_flag("--canonical", canonical, "re-search for a canonical witness");
    cmd_search->add_flag("--enumerate", enumerate_ties,
                         "also enumerate all maximum families (level kind, n <= 5)");

    // verify
    std::string suite;
    bool json_flag = false;
    auto* cmd_verify = app.add_subcommand("verify", "run a theorem/conjecture suite");
    cmd_verify->add_option("suite", suite,
                           "thm-4.1|cor-4.2|thm-4.10|thm-5.4|lem-3.2|prop-3.3|cor-3.5|"
                           "lem-3.6|thm-5.3|thm-5.6|thm-5.9-threshold|lem-5.8|"
                           "cnj-5.10|cnj-6.2|q-6.3")
        ->required();
    cmd_verify->add_option("-n", n, "n");
    cmd_verify->add_option("-r", r, "r");
    cmd_verify->add_option("-t", t, "t");
    cmd_verify->add_option("-m", m, "m");
    cmd_verify->add_option("-k", k, "k");
    cmd_verify->add_flag("--json", json_flag, "emit JSON (same as --format json)");

    // table
    std::string table_kind;
    bool csv_flag = false;
    auto* cmd_table = app.add_subcommand("table", "emit a data table");
    cmd_table->add_option("kind", table_kind, "mahonian|star-sizes|f1r|rho")->required();
    cmd_table->add_option("-n", n, "n");
    cmd_table->add_option("-r", r, "r");
    cmd_table->add_flag("--csv", csv_flag, "emit CSV (same as --format csv)");

    // explore-q63
    auto* cmd_q63 = app.add_subcommand("explore-q63", "compare the two candidate t-intersecting families");
    cmd_q63->add_option("-n", n, "permutation size")->required();
    cmd_q63->add_option("-t", t, "intersection strength")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        // config file fills whatever the flags left untouched
        bruhat::Config cfg = config_path.empty() ? bruhat::load_default_config()
                                                 : bruhat::load_config_file(config_path);
        if (!fmt_opt->count() && cfg.has("format")) g.format = cfg.get("format");
        if (!cache_opt->count() && cfg.has("cache_dir")) g.cache_dir = cfg.get("cache_dir");
        if (!threads_opt->count() && cfg.has("threads"))
            g.threads = std::stoi(cfg.get("threads"));
        if (!nodes_opt->count() && cfg.has("budget_nodes"))
            g.budget_nodes = std::stoull(cfg.get("budget_nodes"));
        if (!secs_opt->count() && cfg.has("budget_secs"))
            g.budget_secs = std::stod(cfg.get("budget_secs"));
        if (json_flag) g.format = "json";
        if (csv_flag) g.format = "csv";

        const bool as_json = g.format == "json";

        if (*cmd_level) {
            if (g.format == "csv") throw bruhat::UsageError("level supports text or json");
            const json params{{"n", n}, {"ell", ell}};
            bruhat::LevelEnumeration lev = bruhat::enumerate_level(n, ell, g.threads);
            if (as_json) emit_json("level", params, bruhat::json_of(lev));
            else std::cout << bruhat::level_text(lev);
            return kExitOk;
        }

        if (*cmd_meet) {
            const bruhat::Permutation p = bruhat::parse_permutation(word_p);
            const bruhat::Permutation q = bruhat::parse_permutation(word_q);
            const bruhat::Permutation result =
                want_join ? bruhat::join(p, q) : bruhat::meet(p, q);
            const json params{{"p", word_p}, {"q", word_q}, {"op", want_join ? "join" : "meet"}};
            if (as_json)
                emit_json("meet", params,
                          json{{"p", bruhat::to_string(p)},
                               {"q", bruhat::to_string(q)},
                               {"op", want_join ? "join" : "meet"},
                               {"result", bruhat::to_string(result)}});
            else std::cout << bruhat::to_string(result) << "\n";
            return kExitOk;
        }

        if (*cmd_pi) {
            bruhat::GeneratorSet a{n, 0};
            for (int i : parse_index_list(set_arg)) {
                if (i < 1 || i >= n) throw bruhat::UsageError("generator index out of range");
                a.mask |= 1u << (i - 1);
            }
            const bruhat::Permutation p = bruhat::pi_minimal(a);
            const json params{{"n", n}, {"set", parse_index_list(set_arg)}};
            if (as_json)
                emit_json("pi", params,
                          json{{"n", n},
                               {"set", bruhat::json_of(a)},
                               {"permutation", bruhat::to_string(p)},
                               {"rank", p.rank()}});
            else std::cout << bruhat::to_string(p) << "\n";
            return kExitOk;
        }

        if (*cmd_mult) {
            bruhat::GeneratorSet a{n, 0};
            for (int i : parse_index_list(set_arg)) {
                if (i < 1 || i >= n) throw bruhat::UsageError("generator index out of range");
                a.mask |= 1u << (i - 1);
            }
            const auto witnesses = bruhat::multiplicity_witnesses(a, n, ell);
            const json params{{"n", n}, {"ell", ell}, {"set", parse_index_list(set_arg)}};
            json result{{"n", n},
                        {"ell", ell},
                        {"set", bruhat::json_of(a)},
                        {"multiplicity", static_cast<long long>(witnesses.size())}};
            if (want_witnesses) {
                json list = json::array();
                for (const auto& p : witnesses) list.push_back(bruhat::to_string(p));
                result["witnesses"] = list;
            }
            if (as_json) {
                emit_json("mult", params, result);
            } else {
                std::cout << witnesses.size() << "\n";
                if (want_witnesses)
                    for (const auto& p : witnesses) std::cout << bruhat::to_string(p) << "\n";
            }
            return kExitOk;
        }

        if (*cmd_genfun) {
            json result{{"kind", kind}};
            std::string text;
            auto poly_out = [&](const bruhat::IntPolynomial& f) {
                result["coefficients"] = bruhat::json_of(f);
                result["pretty"] = bruhat::to_pretty_string(f);
                text = bruhat::to_pretty_string(f);
            };
            if (kind == "qint") poly_out(bruhat::q_int(n));
            else if (kind == "qfactorial") poly_out(bruhat::q_factorial(n));
            else if (kind == "qbinomial") poly_out(bruhat::q_binomial(m, k));
            else if (kind == "qmultinomial")
                poly_out(bruhat::q_multinomial(parse_index_list(parts_arg)));
            else if (kind == "quotient")
                poly_out(bruhat::exact_divide(bruhat::q_factorial(n), bruhat::q_int(2)));
            else if (kind == "divide") {
                auto poly_from = [](const std::string& arg) {
                    std::vector<bruhat::BigInt> coeffs;
                    for (int c : parse_index_list(arg)) coeffs.emplace_back(c);
                    return bruhat::IntPolynomial(std::move(coeffs));
                };
                poly_out(bruhat::exact_divide(poly_from(num_arg), poly_from(den_arg)));
            } else if (kind == "partition") {
                const bruhat::BigInt v = bruhat::partition_count(ell);
                result["value"] = bruhat::json_of(v);
                text = v.str();
            } else if (kind == "mult-bound") {
                const double v = bruhat::multiplicity_bound(k, ell);
                result["value"] = v;
                text = std::to_string(v);
            } else if (kind == "star-bounds") {
                const auto [exact, lower] = bruhat::star_bounds(n, r);
                result["exact"] = bruhat::json_of(exact);
                result["lower_bound"] = bruhat::json_of(lower);
                text = exact.str() + " (lower bound " + lower.str() + ")";
            } else if (kind == "hm") {
                const bruhat::BigInt v = bruhat::hm_bound(m, k);
                result["value"] = bruhat::json_of(v);
                text = v.str();
            } else if (kind == "frankl") {
                const bruhat::BigInt v = bruhat::frankl_bound(m, k, r);
                result["value"] = bruhat::json_of(v);
                text = v.str();
            } else if (kind == "threshold") {
                const bruhat::BigInt v = bruhat::rank_r_threshold(r);
                result["value"] = bruhat::json_of(v);
                text = v.str();
            } else {
                throw bruhat::UsageError("unknown genfun kind: " + kind);
            }
            json params{{"kind", kind}};
            for (auto [name, val] : std::initializer_list<std::pair<const char*, int>>{
                     {"n", n}, {"m", m}, {"k", k}, {"ell", ell}, {"r", r}})
                if (val) params[name] = val;
            if (!parts_arg.empty()) params["parts"] = parse_index_list(parts_arg);
            if (as_json) emit_json("genfun", params, result);
            else std::cout << text << "\n";
            return kExitOk;
        }

        if (*cmd_rho) {
            const bruhat::Permutation p = bruhat::rho(n, t);
            const bruhat::RhoDecomposition d = bruhat::rho_decompose(n, t);
            const bruhat::IntPolynomial f = bruhat::rho_upset_genfun(n, t);
            const json params{{"n", n}, {"t", t}};
            if (as_json) {
                emit_json("rho", params,
                          json{{"n", n},
                               {"t", t},
                               {"word", bruhat::to_string(p)},
                               {"decomposition", json{{"i", d.i}, {"j", d.j}}},
                               {"genfun", bruhat::json_of(f)}});
            } else {
                std::cout << bruhat::to_string(p) << "\n";
                if (want_decompose)
                    std::cout << "i=" << d.i << " j=" << d.j << "\n";
                if (want_genfun)
                    std::cout << bruhat::to_pretty_string(f) << "\n";
            }
            return kExitOk;
        }

        if (*cmd_search) {
            bruhat::SearchOptions opts = g.search_options();
            opts.canonical_witness = canonical;
            json params{{"kind", search_kind},
                        {"budget_nodes", g.budget_nodes},
                        {"budget_secs", g.budget_secs}};
            std::optional<bruhat::ResultCache> cache;
            if (!g.cache_dir.empty()) cache.emplace(g.cache_dir);

            if (search_kind == "level") { params["n"] = n; params["r"] = r; params["t"] = t ? t : 1; }
            else if (search_kind == "full") { params["n"] = n; params["t"] = t ? t : 1; }
            else if (search_kind == "separated") { params["m"] = m; params["r"] = r; }
            else if (search_kind == "no-common") { params["m"] = m; params["k"] = k; }
            else throw bruhat::UsageError("unknown search kind: " + search_kind);

            auto run = [&]() -> bruhat::SearchOutcome {
                if (search_kind == "level")
                    return bruhat::max_intersecting_level(n, r, t ? t : 1, opts);
                if (search_kind == "full")
                    return bruhat::max_intersecting_full(n, t ? t : 1, opts);
                if (search_kind == "separated")
                    return bruhat::max_separated_intersecting(m, r, opts);
                return bruhat::max_intersecting_no_common_element(m, k, opts);
            };

            if (enumerate_ties) {
                if (search_kind != "level")
                    throw bruhat::UsageError("--enumerate applies to the level search");
                params["enumerate"] = true;
            }

            auto run_full = [&]() -> json {
                bruhat::SearchOutcome o = run();
                json result = outcome_result(o, params);
                if (enumerate_ties) {
                    const auto ties =
                        bruhat::enumerate_maximum_level_families(n, r, t ? t : 1);
                    json fams = json::array();
                    for (const auto& fam : ties.families)
                        fams.push_back(bruhat::json_of(fam));
                    json prints = json::array();
                    for (const auto& fp : ties.fingerprints) prints.push_back(fp);
                    result["maximum_families"] = fams;
                    result["fingerprints"] = prints;
                }
                return result;
            };

            json result;
            if (cache) {
                if (auto hit = cache->lookup("search", params)) {
                    std::cerr << "cache: hit\n";
                    result = *hit;
                } else {
                    result = run_full();
                    cache->store("search", params, result);
                }
            } else {
                result = run_full();
            }
            if (as_json) {
                emit_json("search", params, result);
            } else {
                print_result_text(result);
                if (result.contains("maximum_families"))
                    std::cout << "maximum families: "
                              << result["maximum_families"].size()
                              << " (distinct rank multisets: "
                              << result["fingerprints"].size() << ")\n";
            }
            return result.value("optimal", true) ? kExitOk : kExitBudget;
        }

        if (*cmd_verify) {
            bruhat::VerifyOptions vo;
            if (cmd_verify->count("-n")) vo.n = n;
            if (cmd_verify->count("-r")) vo.r = r;
            if (cmd_verify->count("-t")) vo.t = t;
            if (cmd_verify->count("-m")) vo.m = m;
            if (cmd_verify->count("-k")) vo.k = k;
            vo.search = g.search_options();
            json params{{"suite", suite},
                        {"budget_nodes", g.budget_nodes},
                        {"budget_secs", g.budget_secs}};
            if (vo.n) params["n"] = *vo.n;
            if (vo.r) params["r"] = *vo.r;
            if (vo.t) params["t"] = *vo.t;
            if (vo.m) params["m"] = *vo.m;
            if (vo.k) params["k"] = *vo.k;

            std::optional<bruhat::ResultCache> cache;
            if (!g.cache_dir.empty()) cache.emplace(g.cache_dir);
            json result;
            if (cache) {
                if (auto hit = cache->lookup("verify", params)) {
                    std::cerr << "cache: hit\n";
                    result = *hit;
                } else {
                    result = bruhat::json_of(bruhat::verify_theorem(suite, vo));
                    cache->store("verify", params, result);
                }
            } else {
                result = bruhat::json_of(bruhat::verify_theorem(suite, vo));
            }
            const bool pass = result.value("pass", false);
            if (as_json) {
                emit_json("verify", params, result);
            } else {
                // rebuild the report for the text renderer
                bruhat::VerifyReport rep;
                rep.suite = result.value("suite", suite);
                rep.conjecture = result.value("conjecture", false);
                rep.pass = pass;
                for (const auto& c : result["checks"])
                    rep.checks.push_back({c.value("name", ""), c.value("claimed", ""),
                                          c.value("computed", ""), c.value("pass", false)});
                for (const auto& s : result["notes"]) rep.notes.push_back(s.get<std::string>());
                rep.elapsed_ms = result.value("elapsed_ms", 0.0);
                std::cout << bruhat::render_text(rep);
            }
            return pass ? kExitOk : kExitCheckFailed;
        }

        if (*cmd_table) {
            std::vector<std::string> header;
            std::vector<std::vector<std::string>> rows;
            json jrows = json::array();
            json params{{"kind", table_kind}};
            if (table_kind == "mahonian") {
                if (!n) throw bruhat::UsageError("table mahonian requires -n");
                params["n"] = n;
                header = {"ell", "count"};
                const bruhat::IntPolynomial f = bruhat::q_factorial(n);
                for (int i = 0; i <= f.degree(); ++i) {
                    rows.push_back({std::to_string(i), f.coeff(i).str()});
                    jrows.push_back({{"ell", i}, {"count", bruhat::json_of(f.coeff(i))}});
                }
            } else if (table_kind == "star-sizes") {
                if (!n || !r) throw bruhat::UsageError("table star-sizes requires -n and -r");
                params["n"] = n;
                params["r"] = r;
                header = {"n", "r", "star_size", "lower_bound"};
                const auto [exact, lower] = bruhat::star_bounds(n, r);
                rows.push_back({std::to_string(n), std::to_string(r), exact.str(), lower.str()});
                jrows.push_back({{"n", n}, {"r", r},
                                 {"star_size", bruhat::json_of(exact)},
                                 {"lower_bound", bruhat::json_of(lower)}});
            } else if (table_kind == "f1r") {
                if (!n) throw bruhat::UsageError("table f1r requires -n");
                params["n"] = n;
                header = {"r", "star_size", "optimum", "ekr"};
                const bruhat::IntPolynomial quot =
                    bruhat::exact_divide(bruhat::q_factorial(n), bruhat::q_int(2));
                const int rmax = r ? r : bruhat::pair_count(n) / 2;
                for (int rr = 1; rr <= rmax; ++rr) {
                    bruhat::SearchOutcome o =
                        bruhat::max_intersecting_level(n, rr, 1, g.search_options());
                    const bruhat::BigInt star = quot.coeff(rr - 1);
                    rows.push_back({std::to_string(rr), star.str(),
                                    std::to_string(o.optimum),
                                    bruhat::BigInt(o.optimum) == star ? "yes" : "no"});
                    jrows.push_back({{"r", rr},
                                     {"star_size", bruhat::json_of(star)},
                                     {"optimum", o.optimum},
                                     {"ekr", bruhat::BigInt(o.optimum) == star}});
                }
            } else if (table_kind == "rho") {
                if (!n) throw bruhat::UsageError("table rho requires -n");
                params["n"] = n;
                header = {"t", "rho", "i", "j", "upset_genfun"};
                for (int tt = 0; tt <= bruhat::pair_count(n); ++tt) {
                    const auto d = bruhat::rho_decompose(n, tt);
                    const auto word = bruhat::to_string(bruhat::rho(n, tt));
                    const auto f = bruhat::rho_upset_genfun(n, tt);
                    rows.push_back({std::to_string(tt), word, std::to_string(d.i),
                                    std::to_string(d.j), bruhat::to_pretty_string(f)});
                    jrows.push_back({{"t", tt}, {"rho", word}, {"i", d.i}, {"j", d.j},
                                     {"upset_genfun", bruhat::json_of(f)}});
                }
            } else {
                throw bruhat::UsageError("unknown table kind: " + table_kind);
            }
            if (g.format == "csv") std::cout << bruhat::to_csv(header, rows);
            else if (as_json)
                emit_json("table", params,
                          json{{"kind", table_kind}, {"columns", header}, {"rows", jrows}});
            else std::cout << bruhat::aligned_table(header, rows);
            return kExitOk;
        }

        if (*cmd_q63) {
            const bruhat::Q63Exploration q = bruhat::explore_q63(n, t);
            const json params{{"n", n}, {"t", t}};
            if (as_json) {
                emit_json("explore-q63", params, bruhat::json_of(q));
            } else {
                std::cout << "|{p : 2|ID(p)| >= n+t}| = " << q.id_threshold_size << "\n"
                          << "|up(rho(t))|           = " << q.rho_upset_size << "\n"
                          << "larger: " << q.larger << "\n";
            }
            return kExitOk;
        }

        throw bruhat::UsageError("no subcommand");
    } catch (const bruhat::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const bruhat::UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
