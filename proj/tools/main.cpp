// Command line front end: spanning/independence numbers, extremal
// searches, explicit families, and spherical design construction and
// verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "spanind/cache.hpp"
#include "spanind/families.hpp"
#include "spanind/json_io.hpp"
#include "spanind/search.hpp"
#include "spanind/sets.hpp"
#include "spanind/sphere.hpp"
#include "spanind/version.hpp"

namespace {

using namespace spanind;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

struct GlobalOptions {
    std::string format = "json";
    std::string cache_path;
    bool fresh = false;
    int jobs = 1;
    std::uint64_t budget = 1'000'000'000;
    double tol = 1e-9;
};

void emit(const json& j, const GlobalOptions& opt) {
    if (opt.format == "text") {
        // flat one-line rendering for shell use
        std::cout << j.dump() << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

int run_span(const std::string& group, const std::string& set_text, const GlobalOptions& opt) {
    const AbelianGroup g = AbelianGroup::parse(group);
    const auto set = parse_subset(g, set_text);
    const auto value = spanning_number(g, set);
    json out;
    out["command"] = "span";
    out["group"] = g.to_string();
    out["set"] = set_to_json(g, set);
    if (value) {
        out["value"] = *value;
        out["span"] = *value;
        out["witness"] = nullptr;
        out["certificate"] = certificate_to_json(
            make_certificate(g, set, {ClaimKind::Spanning, *value}));
    } else {
        out["value"] = nullptr;
        out["span"] = nullptr;
        // The least element never reached at any radius.
        const auto dist = min_weight_table(g, set, -1);
        for (std::int64_t i = 0; i < g.order(); ++i) {
            if (dist[i] < 0) {
                out["witness"] = element_to_json(g, g.element_at(i));
                break;
            }
        }
        out["certificate"] = nullptr;
    }
    emit(out, opt);
    return kExitOk;
}

int run_ind(const std::string& group, const std::string& set_text, const GlobalOptions& opt) {
    const AbelianGroup g = AbelianGroup::parse(group);
    const auto set = parse_subset(g, set_text);
    const auto value = independence_number(g, set);
    json out;
    out["command"] = "ind";
    out["group"] = g.to_string();
    out["set"] = set_to_json(g, set);
    if (value.infinite) {
        out["value"] = "infinite";
        out["ind"] = "infinite";
        out["witness"] = nullptr;
        out["certificate"] = nullptr;
    } else {
        out["value"] = value.value;
        out["ind"] = value.value;
        const auto limit = is_independent(g, set, value.value + 1);
        out["witness"] = limit.relation ? coeff_to_json(*limit.relation) : json(nullptr);
        out["certificate"] = certificate_to_json(
            make_certificate(g, set, {ClaimKind::Independent, value.value}));
    }
    emit(out, opt);
    return kExitOk;
}

int run_check(const std::string& group, const std::string& set_text, const std::string& claim_text,
              const GlobalOptions& opt) {
    const auto colon = claim_text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("claim must look like perfect:3, tight:5, spanning:2, ...");
    }
    const std::string kind_name = claim_text.substr(0, colon);
    const int param = std::stoi(claim_text.substr(colon + 1));
    ClaimKind kind;
    if (kind_name == "spanning") kind = ClaimKind::Spanning;
    else if (kind_name == "independent") kind = ClaimKind::Independent;
    else if (kind_name == "perfect") kind = ClaimKind::Perfect;
    else if (kind_name == "tight") kind = ClaimKind::Tight;
    else throw std::invalid_argument("unknown claim kind: " + kind_name);

    const AbelianGroup g = AbelianGroup::parse(group);
    const auto set = parse_subset(g, set_text);
    const auto cert = make_certificate(g, set, {kind, param});
    json out;
    out["command"] = "check";
    out["value"] = cert.verified;
    out["witness"] = cert.relation  ? coeff_to_json(*cert.relation)
                     : cert.unreached ? element_to_json(g, *cert.unreached)
                                      : json(nullptr);
    out["certificate"] = certificate_to_json(cert);
    emit(out, opt);
    return cert.verified ? kExitOk : kExitVerifyFail;
}

int run_construct(const std::string& name, const FamilyParams& params, const GlobalOptions& opt) {
    const auto cert = family_by_name(name, params);
    json out;
    out["command"] = "construct";
    out["family"] = name;
    out["certificate"] = certificate_to_json(cert);
    emit(out, opt);
    return kExitOk;
}

int run_q3(std::int64_t n, const GlobalOptions& opt) {
    const auto q3 = q3_cyclic(n);
    json out;
    out["command"] = "q3";
    out["n"] = n;
    out["value"] = q3.value;
    switch (q3.branch) {
        case Q3Branch::Even: out["branch"] = "even"; break;
        case Q3Branch::FiveMod6: out["branch"] = "5mod6"; break;
        case Q3Branch::Floor6: out["branch"] = "floor6"; break;
    }
    if (q3.p != 0) out["p"] = q3.p;
    emit(out, opt);
    return kExitOk;
}

int run_bound(const std::string& kind, int m, int param) {
    if (kind == "a") {
        std::cout << l1_ball_count(m, param).str() << '\n';
        return kExitOk;
    }
    if (kind == "q") {
        if (param < 2) {
            std::cerr << "warning: the order bound is derived for t >= 2; t = " << param
                      << " uses the documented extension\n";
        }
        std::cout << independence_order_bound(m, param).str() << '\n';
        return kExitOk;
    }
    throw std::invalid_argument("bound kind must be a or q");
}

ResultCache open_cache(const GlobalOptions& opt) {
    if (opt.cache_path.empty() || opt.cache_path == "none") return ResultCache();
    return ResultCache(opt.cache_path);
}

int run_extremal(SearchMode mode, const std::string& group, int param, bool symmetry,
                 bool unit_orbit, const GlobalOptions& opt) {
    const AbelianGroup g = AbelianGroup::parse(group);
    ResultCache cache = open_cache(opt);
    const std::string mode_str = mode == SearchMode::MinSpanning ? "p" : "q";

    json out;
    out["command"] = mode_str == "p" ? "pmin" : "qmax";
    if (cache.enabled() && !opt.fresh) {
        if (auto rec = cache.lookup(g.to_string(), mode_str, param)) {
            if (rec->proved) {
                out["value"] = rec->value;
                out["proved_optimal"] = true;
                out["from_cache"] = true;
                out["certificate"] = rec->certificate;
                emit(out, opt);
                return kExitOk;
            }
        }
    }

    SearchTask task{g, mode, param, opt.budget, symmetry, unit_orbit};
    const SearchResult res =
        mode == SearchMode::MinSpanning ? min_spanning_size(task) : max_independent_size(task);
    out = search_result_to_json(res);
    out["command"] = mode_str == "p" ? "pmin" : "qmax";
    out["from_cache"] = false;
    emit(out, opt);

    if (res.proved_optimal && cache.enabled()) {
        CacheRecord rec;
        rec.group = g.to_string();
        rec.mode = mode_str;
        rec.param = param;
        rec.value = res.value;
        rec.certificate = certificate_to_json(res.certificate);
        rec.proved = true;
        cache.append(std::move(rec));
    }
    return res.proved_optimal ? kExitOk : kExitBudget;
}

int run_table(const std::string& mode_str, int param, std::int64_t from, std::int64_t to,
              bool symmetry, bool unit_orbit, const GlobalOptions& opt) {
    if (mode_str != "p" && mode_str != "q") {
        throw std::invalid_argument("table mode must be p or q");
    }
    const SearchMode mode =
        mode_str == "p" ? SearchMode::MinSpanning : SearchMode::MaxIndependent;
    ResultCache cache = open_cache(opt);
    SweepOptions sweep;
    sweep.jobs = opt.jobs;
    sweep.node_budget = opt.budget;
    sweep.symmetry_reduction = symmetry;
    sweep.unit_orbit_reduction = unit_orbit;
    sweep.fresh = opt.fresh;
    sweep.cache = cache.enabled() ? &cache : nullptr;

    const auto rows = sweep_table(mode, param, from, to, sweep);
    for (const auto& w : cache.warnings()) std::cerr << "cache: " << w << '\n';

    if (opt.format == "csv") {
        std::cout << table_to_csv(rows);
    } else if (opt.format == "text") {
        std::cout << table_to_text(rows);
    } else {
        std::cout << table_to_json(rows).dump(2) << '\n';
    }
    for (const auto& row : rows) {
        if (!row.proved) return kExitBudget;
    }
    return kExitOk;
}

int run_design_gen(const std::string& freq_text, std::int64_t n, const std::string& out_path) {
    const auto freqs = parse_int_list(freq_text);
    const PointSet points = lift_to_sphere(freqs, n);
    if (out_path.empty() || out_path == "-") {
        write_points_csv(std::cout, points);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        write_points_csv(out, points);
    }
    return kExitOk;
}

int run_design_verify(const std::string& in_path, const std::string& freq_text, std::int64_t n,
                      int t, bool exact, const GlobalOptions& opt) {
    json out;
    out["command"] = "design verify";
    bool pass = false;
    if (exact) {
        if (freq_text.empty() || n <= 0) {
            throw std::invalid_argument("--exact needs -A and -n (lifted configurations only)");
        }
        pass = verify_lifted_design_exact(parse_int_list(freq_text), n, t);
        out["exact"] = true;
        out["t"] = t;
        out["pass"] = pass;
    } else {
        PointSet points;
        if (!in_path.empty()) {
            std::ifstream in(in_path);
            if (!in) throw std::invalid_argument("cannot read " + in_path);
            points = read_points_csv(in);
        } else if (!freq_text.empty() && n > 0) {
            points = lift_to_sphere(parse_int_list(freq_text), n);
        } else {
            throw std::invalid_argument("design verify needs --in FILE or -A/-n");
        }
        const auto rep = verify_design(points, t, opt.tol);
        out = design_report_to_json(rep);
        out["command"] = "design verify";
        pass = rep.pass();
    }
    emit(out, opt);
    return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions opt;
    opt.cache_path = env_or("SPANIND_CACHE", ".spanind-cache.jsonl");
    opt.jobs = std::stoi(env_or("SPANIND_JOBS", "1"));

    CLI::App app{"spanning and independence numbers of subsets of finite abelian groups"};
    app.set_version_flag("--version", spanind::kVersion);
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache", opt.cache_path, "result cache path ('none' disables)");
    app.add_flag("--fresh", opt.fresh, "ignore cached results");
    app.add_option("--jobs", opt.jobs, "worker threads for table sweeps")->check(CLI::Range(1, 1024));
    app.add_option("--budget", opt.budget, "search node budget");
    app.add_option("--tol", opt.tol, "moment tolerance for design checks");

    int rc = kExitOk;

    std::string group, set_text, claim_text;
    auto* span_cmd = app.add_subcommand("span", "spanning number of a subset");
    span_cmd->add_option("-g,--group", group)->required();
    span_cmd->add_option("-A,--set", set_text)->required();
    span_cmd->callback([&] { rc = run_span(group, set_text, opt); });

    auto* ind_cmd = app.add_subcommand("ind", "independence number of a subset");
    ind_cmd->add_option("-g,--group", group)->required();
    ind_cmd->add_option("-A,--set", set_text)->required();
    ind_cmd->callback([&] { rc = run_ind(group, set_text, opt); });

    auto* check_cmd = app.add_subcommand("check", "verify a claim about a subset");
    check_cmd->add_option("-g,--group", group)->required();
    check_cmd->add_option("-A,--set", set_text)->required();
    check_cmd->add_option("--claim", claim_text, "e.g. perfect:3 or tight:5")->required();
    check_cmd->callback([&] { rc = run_check(group, set_text, claim_text, opt); });

    std::string family_name_opt;
    FamilyParams family_params;
    auto* construct_cmd = app.add_subcommand("construct", "build a named extremal family");
    construct_cmd->add_option("--family", family_name_opt)->required();
    construct_cmd->add_option("--n", family_params.n)->required();
    construct_cmd->add_option("--s", family_params.s);
    construct_cmd->add_option("--t", family_params.t);
    construct_cmd->add_option("--p", family_params.p);
    construct_cmd->callback([&] { rc = run_construct(family_name_opt, family_params, opt); });

    std::int64_t q3_n = 0;
    auto* q3_cmd = app.add_subcommand("q3", "exact 3-independence maximum in Z_n");
    q3_cmd->add_option("--n", q3_n)->required();
    q3_cmd->callback([&] { rc = run_q3(q3_n, opt); });

    std::string bound_kind;
    int bound_m = 0, bound_param = 0;
    auto* bound_cmd = app.add_subcommand("bound", "counting bounds: 'bound a m s' or 'bound q m t'");
    bound_cmd->add_option("kind", bound_kind)->required()->check(CLI::IsMember({"a", "q"}));
    bound_cmd->add_option("m", bound_m)->required();
    bound_cmd->add_option("param", bound_param)->required();
    bound_cmd->callback([&] { rc = run_bound(bound_kind, bound_m, bound_param); });

    int search_param = 0;
    bool no_symmetry = false, unit_orbit = false;
    auto* pmin_cmd = app.add_subcommand("pmin", "minimum s-spanning set size (exhaustive)");
    pmin_cmd->add_option("-g,--group", group)->required();
    pmin_cmd->add_option("-s", search_param)->required();
    pmin_cmd->add_flag("--no-symmetry", no_symmetry, "disable sign-pair candidate reduction");
    pmin_cmd->add_flag("--unit-reduction", unit_orbit, "restrict first element to divisors (cyclic)");
    pmin_cmd->callback([&] {
        rc = run_extremal(SearchMode::MinSpanning, group, search_param, !no_symmetry, unit_orbit,
                          opt);
    });

    auto* qmax_cmd = app.add_subcommand("qmax", "maximum t-independent set size (exhaustive)");
    qmax_cmd->add_option("-g,--group", group)->required();
    qmax_cmd->add_option("-t", search_param)->required();
    qmax_cmd->add_flag("--no-symmetry", no_symmetry, "disable sign-pair candidate reduction");
    qmax_cmd->add_flag("--unit-reduction", unit_orbit, "restrict first element to divisors (cyclic)");
    qmax_cmd->callback([&] {
        rc = run_extremal(SearchMode::MaxIndependent, group, search_param, !no_symmetry,
                          unit_orbit, opt);
    });

    std::string table_mode;
    std::int64_t table_from = 1, table_to = 1;
    auto* table_cmd = app.add_subcommand("table", "sweep Z_n over a range");
    table_cmd->add_option("mode", table_mode, "p or q")->required();
    table_cmd->add_option("--param", search_param, "s or t")->required();
    table_cmd->add_option("--from", table_from)->required();
    table_cmd->add_option("--to", table_to)->required();
    table_cmd->add_flag("--no-symmetry", no_symmetry);
    table_cmd->add_flag("--unit-reduction", unit_orbit);
    table_cmd->callback([&] {
        rc = run_table(table_mode, search_param, table_from, table_to, !no_symmetry, unit_orbit,
                       opt);
    });

    auto* design_cmd = app.add_subcommand("design", "spherical design construction/verification");
    design_cmd->require_subcommand(1);

    std::string freq_text, file_path;
    std::int64_t design_n = 0;
    int design_t = 0, design_d = 0;
    bool exact = false;

    auto* gen_cmd = design_cmd->add_subcommand("gen", "lift frequencies to points on a sphere");
    gen_cmd->add_option("-A,--freqs", freq_text)->required();
    gen_cmd->add_option("-n", design_n)->required();
    gen_cmd->add_option("--out", file_path, "output CSV ('-' for stdout)");
    gen_cmd->callback([&] { rc = run_design_gen(freq_text, design_n, file_path); });

    auto* verify_cmd = design_cmd->add_subcommand("verify", "check the design property");
    verify_cmd->add_option("--in", file_path, "points CSV");
    verify_cmd->add_option("-A,--freqs", freq_text);
    verify_cmd->add_option("-n", design_n);
    verify_cmd->add_option("-t", design_t)->required();
    verify_cmd->add_flag("--exact", exact, "exact rational check (lifted configurations)");
    verify_cmd->callback(
        [&] { rc = run_design_verify(file_path, freq_text, design_n, design_t, exact, opt); });

    auto* dgs_cmd = design_cmd->add_subcommand("dgs", "minimum size bound for a t-design on S^d");
    dgs_cmd->add_option("-t", design_t)->required();
    dgs_cmd->add_option("-d", design_d)->required();
    dgs_cmd->callback([&] { std::cout << dgs_bound(design_t, design_d).str() << '\n'; });

    auto* polygon_cmd = design_cmd->add_subcommand("polygon", "regular n-gon on the circle");
    polygon_cmd->add_option("-n", design_n)->required();
    polygon_cmd->add_option("--out", file_path, "output CSV ('-' for stdout)");
    polygon_cmd->callback([&] {
        const PointSet points = regular_polygon(design_n);
        if (file_path.empty() || file_path == "-") {
            write_points_csv(std::cout, points);
        } else {
            std::ofstream out(file_path);
            if (!out) throw std::invalid_argument("cannot write " + file_path);
            write_points_csv(out, points);
        }
    });

    // Allow global flags like --format after a subcommand name.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const spanind::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return rc;
}
