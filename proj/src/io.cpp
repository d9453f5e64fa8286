#include "setdirect/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace setdirect {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

template <class T>
T as(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        parse_error("bad value for " + what + ": " + j.dump());
    }
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

void check_order(const NamedGroup& g, const GroupOptions& opts) {
    if (g.group.order() > opts.max_order) {
        throw Error(ErrorCode::OrderLimitExceeded, g.name + " has order " + std::to_string(g.group.order()) +
                                                       ", above the bound " + std::to_string(opts.max_order));
    }
}

Json labelled(const GroupTable& g, const Subset& s) {
    Json labels = Json::array();
    s.for_each([&](Element e) { labels.push_back(g.label(e)); });
    return labels;
}

}  // namespace

NamedGroup parse_group(const Json& spec, const GroupOptions& opts) {
    if (!spec.is_object()) parse_error("group spec must be a JSON object");
    const auto kind = as<std::string>(field(spec, "kind"), "kind");
    NamedGroup out;
    if (kind == "catalog") {
        out = catalog_group(as<std::string>(field(spec, "name"), "name"));
    } else if (kind == "table") {
        const auto mult = as<std::vector<std::vector<long long>>>(field(spec, "mult"), "mult");
        if (mult.size() > opts.max_order) {
            throw Error(ErrorCode::OrderLimitExceeded, "table of order " + std::to_string(mult.size()));
        }
        std::vector<std::string> labels;
        if (spec.contains("labels")) labels = as<std::vector<std::string>>(spec["labels"], "labels");
        out.name = spec.value("name", "table");
        out.group = group_from_table(mult, std::move(labels), opts);
    } else if (kind == "permutations") {
        const auto degree = as<std::size_t>(field(spec, "degree"), "degree");
        const auto gens = as<std::vector<std::vector<long long>>>(field(spec, "generators"), "generators");
        std::vector<Permutation> perms;
        for (const auto& g : gens) {
            if (g.size() != degree) parse_error("generator length differs from degree " + std::to_string(degree));
            Permutation p;
            for (long long v : g) {
                if (v < 0 || static_cast<std::size_t>(v) >= degree) parse_error("generator entry out of range");
                p.push_back(static_cast<Element>(v));
            }
            perms.push_back(std::move(p));
        }
        out.name = spec.value("name", "permutations");
        out.group = group_from_permutations(perms, opts);
    } else if (kind == "central_product") {
        const NamedGroup left = parse_group(field(spec, "left"), opts);
        const NamedGroup right = parse_group(field(spec, "right"), opts);
        std::vector<std::pair<Element, Element>> pairing;
        for (const auto& p : as<std::vector<std::vector<long long>>>(field(spec, "pairing"), "pairing")) {
            if (p.size() != 2 || p[0] < 0 || p[1] < 0 || static_cast<std::size_t>(p[0]) >= left.group.order() ||
                static_cast<std::size_t>(p[1]) >= right.group.order()) {
                parse_error("pairing entries must be [left index, right index]");
            }
            pairing.emplace_back(static_cast<Element>(p[0]), static_cast<Element>(p[1]));
        }
        auto cp = external_central_product(left.group, right.group, pairing);
        out.name = spec.value("name", left.name + "o" + right.name);
        out.group = std::move(cp.group);
        out.named = {{"left", cp.left}, {"right", cp.right}, {"central", cp.central}};
    } else {
        parse_error("unknown group kind \"" + kind + "\"");
    }
    check_order(out, opts);
    return out;
}

NamedGroup load_group(std::string_view spec, const GroupOptions& opts) {
    const std::string s(spec);
    std::error_code ec;
    if (s.ends_with(".json") || std::filesystem::is_regular_file(s, ec)) {
        std::ifstream in(s);
        if (!in) parse_error("cannot open " + s);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            parse_error(s + ": " + e.what());
        }
        return parse_group(j, opts);
    }
    NamedGroup g = catalog_group(s);
    check_order(g, opts);
    return g;
}

Subset parse_subset(const NamedGroup& named, std::string_view text) {
    const GroupTable& g = named.group;
    Subset out(g.order());
    std::stringstream ss{std::string(text)};
    std::string token;
    bool any = false;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        any = true;
        const std::string key = lower(token);
        if (std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
            const unsigned long long v = std::stoull(token);
            if (v >= g.order()) parse_error("element index " + token + " out of range");
            out.insert(static_cast<Element>(v));
        } else if (key == "g" || key == "all" || key == lower(named.name)) {
            out |= g.all();
        } else if (key == "center" || key == "centre") {
            out |= center(g);
        } else if (key == "identity") {
            out.insert(g.identity());
        } else if (auto it = named.named.find(key); it != named.named.end()) {
            out |= it->second;
        } else if (auto e = g.find_label(token)) {
            out.insert(*e);
        } else {
            parse_error("unknown element or subset \"" + token + "\"");
        }
    }
    if (!any) parse_error("empty subset specification");
    return out;
}

Json to_json(const Subset& s) {
    Json out = Json::array();
    s.for_each([&](Element e) { out.push_back(e); });
    return out;
}

Json to_json(const GroupTable& g, const CentralDecomposition& cp) {
    return Json{{"M", to_json(cp.m)}, {"N", to_json(cp.n)}, {"Z", to_json(cp.z)}, {"Z_labels", labelled(g, cp.z)}};
}

Json to_json(const GroupTable& g, const ZActionData& action) {
    Json orbits = Json::array();
    for (const auto& o : action.orbits) {
        Json classes = Json::array();
        for (std::size_t c : o.classes) classes.push_back(to_json(g.classes().classes[c]));
        orbits.push_back(Json{{"classes", o.classes}, {"members", classes}, {"stabilizer", to_json(o.stabilizer)}});
    }
    return Json{{"ambient", to_json(action.ambient)},
                {"acting", to_json(action.acting)},
                {"semi_regular", action.semi_regular()},
                {"orbits", orbits}};
}

Json to_json(const ClassCountReport& r) {
    return Json{{"k_G", r.k_g}, {"k_Z", r.k_z}, {"k_G_mod_Z", r.k_g_mod_z}, {"orbits", r.orbit_count},
                {"semi_regular", r.semiregular}};
}

Json to_json(const DirectnessReport& r) {
    return Json{{"direct", r.direct()},
                {"multiplicities", r.multiplicities},
                {"difference_sets", r.difference_sets},
                {"translates_partition", r.translates_partition},
                {"cardinality", r.cardinality},
                {"product", to_json(r.product)}};
}

Json to_json(const SetDirectFactorization& f) {
    return Json{{"X", to_json(f.x)}, {"Y", to_json(f.y)}, {"certified", f.certified}};
}

Json to_json(const MainTheoremReport& r) {
    auto slices = [](const std::vector<Slice>& family) {
        Json out = Json::object();
        for (const auto& s : family) out[std::to_string(s.rep)] = to_json(s.values);
        return out;
    };
    Json j{{"M", to_json(r.m)},
           {"N", to_json(r.n)},
           {"Z", to_json(r.z)},
           {"product_is_G", r.product_is_g},
           {"condition_a", r.condition_a},
           {"a_failure", r.a_failure ? Json(std::string(to_string(*r.a_failure))) : Json(nullptr)},
           {"condition_b", r.condition_b},
           {"b_failure", r.b_failure.empty() ? Json(nullptr) : Json(r.b_failure)},
           {"witness", r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr)},
           {"slice_pairs_checked", r.slice_pairs_checked},
           {"X_slices", slices(r.x_slices)},
           {"Y_slices", slices(r.y_slices)},
           {"verdict", r.verdict}};
    return j;
}

Json to_json(const SystemReport& r) {
    return Json{{"valid", r.valid()},
                {"products_direct", r.products_direct},
                {"kernels_contain", r.kernels_contain},
                {"sizes_consistent", r.sizes_consistent},
                {"lcm_divides", r.lcm_divides},
                {"coset_separation", r.coset_separation},
                {"trivial_intersections", r.trivial_intersections},
                {"failing_pair", r.failing_pair ? Json::array({r.failing_pair->first, r.failing_pair->second})
                                                : Json(nullptr)},
                {"failure", r.failure.empty() ? Json(nullptr) : Json(r.failure)}};
}

Json to_json(const EnumerationResult& r) {
    Json list = Json::array();
    for (const auto& f : r.factorizations) list.push_back(to_json(f));
    return Json{{"group", r.group_id},
                {"total", r.total},
                {"nontrivial", r.nontrivial},
                {"normalized", r.normalized},
                {"shift_orbits", r.shift_orbits},
                {"candidates", r.candidates},
                {"elapsed_secs", r.elapsed_secs},
                {"factorizations", list}};
}

Json to_json(const SuiteReport& r) {
    Json props = Json::array();
    for (const auto& p : r.properties) {
        props.push_back(Json{{"name", p.name},
                             {"passed", p.passed},
                             {"checked", p.checked},
                             {"witness", p.witness.empty() ? Json(nullptr) : Json(p.witness)}});
    }
    return Json{{"group", r.group_id},
                {"passed", r.passed()},
                {"factorizations", r.factorizations},
                {"unique_nonabelian_minimal_normal", r.unique_nonabelian_minimal_normal},
                {"direct_class_pair", r.direct_class_pair
                                          ? Json::array({r.direct_class_pair->first, r.direct_class_pair->second})
                                          : Json(nullptr)},
                {"properties", props}};
}

std::string enumeration_csv(const GroupTable& g, const EnumerationResult& r) {
    const auto& cls = g.classes();
    auto signature = [&](const Subset& s) {
        std::string out;
        for (std::size_t c : cls.classes_in(s)) out += (out.empty() ? "" : " ") + std::to_string(c);
        return out;
    };
    std::string out = "x_size,y_size,normalized,x_classes,y_classes\n";
    for (const auto& f : r.factorizations) {
        const bool normalized = f.x.contains(g.identity()) && f.y.contains(g.identity());
        out += std::to_string(f.x.size()) + "," + std::to_string(f.y.size()) + "," + (normalized ? "1" : "0") + "," +
               signature(f.x) + "," + signature(f.y) + "\n";
    }
    return out;
}

}  // namespace setdirect
