#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "setdirect/io.hpp"

using namespace setdirect;

namespace {

// Exit codes: 0 success or certified, 1 provable negative, 2 usage or hypothesis error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
    bool json = false;
    std::size_t max_order = default_max_order();
    bool max_order_given = false;
    double time_budget = 60.0;
    std::uint64_t seed = 1;
};

std::string show(const GroupTable& g, const Subset& s) {
    std::string out = "{";
    s.for_each([&](Element e) { out += (out.size() > 1 ? ", " : "") + g.label(e); });
    return out + "}";
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

GroupOptions group_options(const Globals& gl) {
    GroupOptions o;
    o.max_order = gl.max_order;
    return o;
}

CentralDecomposition central_decomposition(const NamedGroup& g, const std::string& m_text,
                                           const std::string& n_text) {
    const Subset m = parse_subset(g, m_text);
    const Subset n = parse_subset(g, n_text);
    auto check = is_central_product(g.group, m, n);
    if (!check) {
        throw Error(ErrorCode::HypothesisViolated,
                    "M and N do not form a central product: " + std::string(to_string(*check.failure)));
    }
    return *check.decomposition;
}

int cmd_info(const Globals& gl, const std::string& spec) {
    const NamedGroup named = load_group(spec, group_options(gl));
    const GroupTable& g = named.group;
    const auto& cls = g.classes();
    const Subset z = center(g);
    const Subset semi = semi_regular_elements(g);
    std::optional<std::size_t> decompositions;
    if (g.order() <= 512) decompositions = enumerate_central_decompositions(g).size();

    if (gl.json) {
        Json sizes = Json::array();
        for (const auto& c : cls.classes) sizes.push_back(c.size());
        print(Json{{"group", named.name},
                   {"order", g.order()},
                   {"classes", cls.count()},
                   {"class_sizes", sizes},
                   {"center", to_json(z)},
                   {"abelian", g.is_abelian()},
                   {"central_decompositions", decompositions ? Json(*decompositions) : Json(nullptr)},
                   {"semi_regular", to_json(semi)},
                   {"labels", g.labels()}});
        return kOk;
    }
    std::cout << "group: " << named.name << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "classes: " << cls.count() << "\n";
    std::cout << "class sizes:";
    for (const auto& c : cls.classes) std::cout << " " << c.size();
    std::cout << "\n";
    std::cout << "center: " << show(g, z) << " (size " << z.size() << ")\n";
    std::cout << "central decompositions: " << (decompositions ? std::to_string(*decompositions) : "skipped")
              << "\n";
    std::cout << "semi-regular elements: " << (semi.empty() ? "none" : show(g, semi)) << "\n";
    return kOk;
}

int cmd_verify(const Globals& gl, const std::string& spec, const std::string& x_text, const std::string& y_text) {
    const NamedGroup named = load_group(spec, group_options(gl));
    const GroupTable& g = named.group;
    const Subset x = parse_subset(named, x_text);
    const Subset y = parse_subset(named, y_text);
    const auto directness = is_direct(g, x, y);
    const auto report = verify_main_theorem(g, x, y);
    print(Json{{"group", named.name},
               {"X", to_json(x)},
               {"Y", to_json(y)},
               {"certified", report.verdict},
               {"directness", to_json(directness)},
               {"report", to_json(report)}});
    return report.verdict ? kOk : kNegative;
}

struct FactorizeArgs {
    std::string method = "oracle";
    std::string m = "G";
    std::string n = "center";
    std::string a, b, x0, y0, element;
    bool nontrivial = false;
    bool normalized = false;
    std::string emit = "json";
};

int cmd_factorize(const Globals& gl, const std::string& spec, const FactorizeArgs& args) {
    const NamedGroup named = load_group(spec, group_options(gl));
    const GroupTable& g = named.group;
    Json out{{"group", named.name}, {"method", args.method}};

    auto emit = [&](const SetDirectFactorization& f) {
        out["factorizations"] = Json::array({to_json(f)});
        out["labels"] = Json::array({Json{{"X", show(g, f.x)}, {"Y", show(g, f.y)}}});
        print(out);
        return f.certified ? kOk : kNegative;
    };
    auto absent = [&](const std::string& reason) {
        out["factorizations"] = Json::array();
        out["absent"] = true;
        out["reason"] = reason;
        print(out);
        return kNegative;
    };

    if (args.method == "oracle") {
        EnumerationOptions o;
        o.nontrivial_only = args.nontrivial;
        o.normalized_only = args.normalized;
        o.time_budget_secs = gl.time_budget;
        const auto r = enumerate_setdirect(g, o, named.name);
        if (args.emit == "csv") {
            std::cout << enumeration_csv(g, r);
        } else {
            Json j = to_json(r);
            j["method"] = "oracle";
            print(j);
        }
        return r.factorizations.empty() ? kNegative : kOk;
    }
    if (args.method == "prime-power") {
        if (args.element.empty()) throw Error(ErrorCode::ParseError, "--element is required");
        const Subset e = parse_subset(named, args.element);
        if (e.size() != 1) throw Error(ErrorCode::ParseError, "--element must name a single element");
        return emit(prime_power_factorization(g, e.first()));
    }

    const CentralDecomposition cp = central_decomposition(named, args.m, args.n);
    out["decomposition"] = to_json(g, cp);
    if (args.method == "transversal") {
        const auto r = transversal_factorization(g, cp);
        out["class_counts"] = to_json(r.n_counts);
        if (r.factorization) return emit(*r.factorization);
        out["violating_orbit"] = *r.violating_orbit;
        out["violating_stabilizer"] = to_json(r.violating_stabilizer);
        const auto& c = r.n_counts;
        return absent("Z does not act semi-regularly on the classes of N: k(N) = " + std::to_string(c.k_g) +
                      " != k(Z) k(N/Z) = " + std::to_string(c.k_z * c.k_g_mod_z));
    }
    if (args.method == "cyclic") {
        if (args.x0.empty() || args.y0.empty()) throw Error(ErrorCode::ParseError, "--X0 and --Y0 are required");
        const auto r = cyclic_center_factorization(g, cp, parse_subset(named, args.x0), parse_subset(named, args.y0));
        out["commutator_intersection"] = to_json(r.commutator_intersection);
        if (r.factorization) return emit(*r.factorization);
        return absent("[M,M] n [N,N] = " + show(g, r.commutator_intersection) + " is not trivial");
    }
    if (args.method == "system") {
        if (args.a.empty() || args.b.empty()) throw Error(ErrorCode::ParseError, "--A and --B are required");
        // One pair (A, B) shared by every orbit.
        auto sys = system_skeleton(g, cp);
        const Subset a = sys.z.restrict(parse_subset(named, args.a));
        const Subset b = sys.z.restrict(parse_subset(named, args.b));
        std::fill(sys.a.begin(), sys.a.end(), a);
        std::fill(sys.b.begin(), sys.b.end(), b);
        const auto report = check_factorization_system(sys);
        out["system"] = to_json(report);
        if (!report.valid()) {
            print(out);
            return kUsage;
        }
        return emit(construct_from_system(g, cp, sys));
    }
    throw Error(ErrorCode::ParseError, "unknown method \"" + args.method + "\"");
}

int cmd_suite(const Globals& gl, const std::string& spec, bool all_catalog) {
    std::vector<std::string> names;
    if (all_catalog) {
        names = catalog_names(gl.max_order_given ? gl.max_order : 24);
    } else {
        if (spec.empty()) throw Error(ErrorCode::ParseError, "give a group or --all-catalog");
        names.push_back(spec);
    }
    SuiteOptions o;
    o.seed = gl.seed;
    o.enumeration.time_budget_secs = gl.time_budget;

    bool failed = false;
    Json reports = Json::array();
    for (const auto& name : names) {
        NamedGroup named;
        SuiteReport r;
        try {
            named = load_group(name, group_options(gl));
            r = property_suite(named.group, o, named.name);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchSpaceTooLarge && e.code() != ErrorCode::TimeBudgetExceeded) throw;
            if (gl.json) {
                reports.push_back(Json{{"group", name}, {"skipped", e.what()}});
            } else {
                std::cout << name << ": skipped (" << e.what() << ")\n";
            }
            continue;
        }
        failed = failed || !r.passed();
        if (gl.json) {
            reports.push_back(to_json(r));
            continue;
        }
        const GroupTable& g = named.group;
        std::cout << named.name << " (order " << g.order() << ", " << r.factorizations
                  << " factorizations): " << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& p : r.properties) {
            std::cout << "  " << (p.passed ? "pass" : "FAIL") << "  " << p.name << " (" << p.checked << " checked)";
            if (!p.passed) std::cout << "  witness: " << p.witness;
            std::cout << "\n";
        }
        if (r.direct_class_pair) {
            const auto& cls = g.classes().classes;
            std::cout << "  direct class pair: " << show(g, cls[r.direct_class_pair->first]) << " x "
                      << show(g, cls[r.direct_class_pair->second]) << "\n";
        }
    }
    if (gl.json) print(reports);
    return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set-direct factorizations of finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_flag("--json", gl.json, "JSON output");
    auto* max_order = app.add_option("--max-order", gl.max_order, "Order bound (catalog bound for --all-catalog)");
    app.add_option("--time-budget-secs", gl.time_budget, "Wall-clock budget per enumeration");
    app.add_option("--seed", gl.seed, "Seed for randomized property sampling");

    std::string group;
    auto* info = app.add_subcommand("info", "Order, classes, center and semi-regular elements");
    info->add_option("group", group, "Catalog name or JSON file")->required();

    std::string x_text, y_text;
    auto* verify = app.add_subcommand("verify", "Check G = X x Y with the structural criterion");
    verify->add_option("group", group, "Catalog name or JSON file")->required();
    verify->add_option("--X,-X", x_text, "Subset X")->required();
    verify->add_option("--Y,-Y", y_text, "Subset Y")->required();

    FactorizeArgs fa;
    auto* factorize = app.add_subcommand("factorize", "Construct or enumerate factorizations");
    factorize->add_option("group", group, "Catalog name or JSON file")->required();
    factorize->add_option("--method", fa.method)
        ->check(CLI::IsMember({"oracle", "system", "transversal", "cyclic", "prime-power"}));
    factorize->add_option("--M", fa.m, "Normal subgroup M (default G)");
    factorize->add_option("--N", fa.n, "Normal subgroup N (default the center)");
    factorize->add_option("--A", fa.a, "A, used for every orbit on the M side");
    factorize->add_option("--B", fa.b, "B, used for every orbit on the N side");
    factorize->add_option("--X0", fa.x0, "Factor of Z inside X");
    factorize->add_option("--Y0", fa.y0, "Factor of Z inside Y");
    factorize->add_option("--element", fa.element, "Central element for --method prime-power");
    factorize->add_flag("--nontrivial", fa.nontrivial, "Oracle: drop pairs with a singleton side");
    factorize->add_flag("--normalized", fa.normalized, "Oracle: keep pairs with the identity on both sides");
    factorize->add_option("--emit", fa.emit, "Oracle output format")->check(CLI::IsMember({"json", "csv"}));

    bool all_catalog = false;
    auto* suite = app.add_subcommand("suite", "Run the property checks");
    suite->add_option("group", group, "Catalog name or JSON file");
    suite->add_flag("--all-catalog", all_catalog, "Every catalog group up to --max-order (default 24)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    gl.max_order_given = max_order->count() > 0;

    try {
        if (*info) return cmd_info(gl, group);
        if (*verify) return cmd_verify(gl, group, x_text, y_text);
        if (*factorize) return cmd_factorize(gl, group, fa);
        if (*suite) return cmd_suite(gl, group, all_catalog);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
