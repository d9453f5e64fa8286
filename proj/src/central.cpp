#include "setdirect/central.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace setdirect {

std::string_view to_string(CentralProductFailure f) noexcept {
    switch (f) {
        case CentralProductFailure::NotSubgroup: return "NotSubgroup";
        case CentralProductFailure::NotNormal: return "NotNormal";
        case CentralProductFailure::ProductNotG: return "ProductNotG";
        case CentralProductFailure::NotCentralizing: return "NotCentralizing";
        case CentralProductFailure::IntersectionNotCentral: return "IntersectionNotCentral";
    }
    return "Unknown";
}

CentralProductCheck is_central_product(const GroupTable& g, const Subset& m, const Subset& n) {
    auto fail = [](CentralProductFailure f) { return CentralProductCheck{std::nullopt, f}; };
    if (!is_subgroup(g, m) || !is_subgroup(g, n)) return fail(CentralProductFailure::NotSubgroup);
    if (!is_normal_subset(g, m) || !is_normal_subset(g, n)) return fail(CentralProductFailure::NotNormal);
    if (product_set(g, m, n).size() != g.order()) return fail(CentralProductFailure::ProductNotG);
    Subset z = m & n;
    if (!is_central(g, z)) return fail(CentralProductFailure::IntersectionNotCentral);
    if (commutator_set(g, m, n).size() != 1) return fail(CentralProductFailure::NotCentralizing);
    return CentralProductCheck{CentralDecomposition{m, n, std::move(z)}, std::nullopt};
}

std::vector<CentralDecomposition> enumerate_central_decompositions(const GroupTable& g, std::size_t max_order) {
    if (g.order() > max_order) {
        throw Error(ErrorCode::OrderLimitExceeded, "central decomposition enumeration bounded by order " +
                                                       std::to_string(max_order));
    }
    const auto normals = normal_subgroups(g);  // ascending order
    std::vector<CentralDecomposition> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t j = i; j < normals.size(); ++j) {
            if (normals[i].size() * normals[j].size() < g.order()) continue;
            if (auto check = is_central_product(g, normals[j], normals[i])) out.push_back(std::move(*check.decomposition));
        }
    }
    std::sort(out.begin(), out.end(), [](const CentralDecomposition& a, const CentralDecomposition& b) {
        if (a.m.size() != b.m.size()) return a.m.size() > b.m.size();
        if (!(a.m == b.m)) return a.m < b.m;
        if (a.n.size() != b.n.size()) return a.n.size() > b.n.size();
        return a.n < b.n;
    });
    return out;
}

ZActionData z_orbits(const GroupTable& g, const Subset& ambient, const Subset& z) {
    if (!is_normal_subset(g, ambient)) throw Error(ErrorCode::NotNormal, "ambient set is not a union of classes");
    if (!is_subgroup(g, z)) throw Error(ErrorCode::NotSubgroup, "acting set is not a subgroup");
    if (!is_central(g, z)) throw Error(ErrorCode::NotCentral, "acting subgroup is not central");
    if (is_subgroup(g, ambient) && !z.is_subset_of(ambient)) {
        throw Error(ErrorCode::PreconditionViolated, "acting subgroup must lie inside the ambient subgroup");
    }
    if (!(product_set(g, z, ambient) == ambient)) {
        throw Error(ErrorCode::PreconditionViolated, "ambient set is not closed under multiplication by Z");
    }

    const auto& cp = g.classes();
    const auto zs = z.elements();
    ZActionData data{ambient, z, {}, std::vector<std::size_t>(cp.count(), ZActionData::npos)};
    for (std::size_t c : cp.classes_in(ambient)) {
        if (data.orbit_of_class[c] != ZActionData::npos) continue;
        const Element rep = cp.classes[c].first();
        ZOrbit orbit{{}, g.empty_subset()};
        std::set<std::size_t> members;
        for (Element s : zs) {
            const std::size_t image = cp.class_of[g.mul(s, rep)];
            members.insert(image);
            if (image == c) orbit.stabilizer.insert(s);
        }
        orbit.classes.assign(members.begin(), members.end());
        for (std::size_t d : orbit.classes) data.orbit_of_class[d] = data.orbits.size();

        if (orbit.classes.size() * orbit.stabilizer.size() != z.size()) {
            inconsistency("orbit-stabilizer identity fails for class " + std::to_string(c));
        }
        for (std::size_t d : orbit.classes) {
            const Element other = cp.classes[d].first();
            for (Element s : zs) {
                const bool fixes = cp.class_of[g.mul(s, other)] == d;
                if (fixes != orbit.stabilizer.contains(s)) inconsistency("stabilizers differ inside one orbit");
            }
        }
        data.orbits.push_back(std::move(orbit));
    }
    return data;
}

Subset class_stabilizer(const GroupTable& g, Element x, const Subset& z) {
    if (!is_central(g, z)) throw Error(ErrorCode::NotCentral, "stabilizer needs a central set");
    const auto& cp = g.classes();
    const Subset& cls = cp.classes[cp.class_of[x]];
    Subset by_action(g.order());
    z.for_each([&](Element s) {
        if (cls.contains(g.mul(x, s))) by_action.insert(s);
    });
    const Subset by_commutators = commutator_set(g, g.singleton(x), g.all()) & z;
    if (!(by_action == by_commutators)) inconsistency("class stabilizer differs from [x,G] n Z");
    return by_action;
}

ZBracket z_bracket(const GroupTable& g, const Subset& k, const Subset& z) {
    if (!is_subgroup(g, k)) throw Error(ErrorCode::NotSubgroup, "Z_[K] needs a subgroup K");
    if (!is_normal_subset(g, k)) throw Error(ErrorCode::NotNormal, "Z_[K] needs a normal subgroup K");
    if (!is_central(g, z)) throw Error(ErrorCode::NotCentral, "Z_[K] needs a central Z");
    ZBracket out;
    out.set = commutator_set(g, k, k) & z;
    out.generated = generated_subgroup(g, out.set);

    if (z.is_subset_of(k) && is_subgroup(g, z)) {
        Subset centralizer(g.order());
        for (Element c = 0; c < g.order(); ++c) {
            bool ok = true;
            k.for_each([&](Element x) { ok = ok && g.mul(c, x) == g.mul(x, c); });
            if (ok) centralizer.insert(c);
        }
        if (product_set(g, k, centralizer).size() == g.order()) {
            const auto data = z_orbits(g, k, z);
            Subset union_of_stabilizers(g.order());
            for (const auto& o : data.orbits) union_of_stabilizers |= o.stabilizer;
            if (!(union_of_stabilizers == out.set)) inconsistency("Z_[K] differs from the union of orbit stabilizers");
            out.union_identity_checked = true;
        }
    }
    return out;
}

Subset semi_regular_elements(const GroupTable& g) {
    const Subset zg = center(g);
    const auto data = z_orbits(g, g.all(), zg);
    Subset fixing(g.order());
    for (const auto& o : data.orbits) fixing |= o.stabilizer;
    return zg - fixing;
}

ClassCountReport class_count_report(const GroupTable& g, const Subset& z) {
    if (!is_subgroup(g, z)) throw Error(ErrorCode::NotSubgroup, "class counts need a subgroup Z");
    if (!is_central(g, z)) throw Error(ErrorCode::NotCentral, "class counts need a central Z");
    ClassCountReport r;
    r.k_g = g.classes().count();
    r.k_z = subgroup_table(g, z).group.classes().count();
    r.k_g_mod_z = quotient_group(g, z).group.classes().count();
    const auto data = z_orbits(g, g.all(), z);
    r.orbit_count = data.orbits.size();
    r.semiregular = data.semi_regular();
    if (r.orbit_count != r.k_g_mod_z) inconsistency("orbit count differs from k(G/Z)");
    if (r.semiregular != (r.k_g == r.k_z * r.k_g_mod_z)) inconsistency("semi-regularity disagrees with class counts");
    return r;
}

CentralProductStructure verify_central_product_structure(const GroupTable& g, const CentralDecomposition& cp) {
    CentralProductStructure s;
    const auto& classes = g.classes();
    s.mutually_centralizing = commutator_set(g, cp.m, cp.n).size() == 1;

    auto coincide = [&](const Subset& k) {
        const ClassPartition local = classes_under(g, k, k);
        const auto inside = classes.classes_in(k);
        if (local.count() != inside.size()) return false;
        for (std::size_t i = 0; i < inside.size(); ++i)
            if (!(local.classes[i] == classes.classes[inside[i]])) return false;
        return true;
    };
    s.m_classes_coincide = coincide(cp.m);
    s.n_classes_coincide = coincide(cp.n);

    const auto og = z_orbits(g, g.all(), cp.z);
    const auto om = z_orbits(g, cp.m, cp.z);
    const auto on = z_orbits(g, cp.n, cp.z);
    s.orbits_g = og.orbits.size();
    s.orbits_m = om.orbits.size();
    s.orbits_n = on.orbits.size();

    s.classes_factor = true;
    s.stabilizers_multiply = true;
    bool well_defined = true;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> orbit_image;
    for (std::size_t c = 0; c < classes.count(); ++c) {
        const Element x = classes.classes[c].first();
        // Split x = m n with m in M, n in N.
        std::optional<std::pair<Element, Element>> split;
        cp.m.for_each([&](Element m) {
            if (!split && cp.n.contains(g.mul(g.inv(m), x))) split = {m, g.mul(g.inv(m), x)};
        });
        if (!split) {
            s.classes_factor = false;
            continue;
        }
        const std::size_t cm = classes.class_of[split->first];
        const std::size_t cn = classes.class_of[split->second];
        if (!(product_set(g, classes.classes[cm], classes.classes[cn]) == classes.classes[c])) s.classes_factor = false;

        const Subset& stab_c = og.orbits[og.orbit_of_class[c]].stabilizer;
        const Subset& stab_m = om.orbits[om.orbit_of_class[cm]].stabilizer;
        const Subset& stab_n = on.orbits[on.orbit_of_class[cn]].stabilizer;
        if (!(product_set(g, stab_m, stab_n) == stab_c)) s.stabilizers_multiply = false;

        const std::pair<std::size_t, std::size_t> image{om.orbit_of_class[cm], on.orbit_of_class[cn]};
        auto [it, inserted] = orbit_image.try_emplace(og.orbit_of_class[c], image);
        if (!inserted && it->second != image) well_defined = false;
    }
    std::set<std::pair<std::size_t, std::size_t>> images;
    for (const auto& [orbit, image] : orbit_image) images.insert(image);
    s.orbit_bijection = well_defined && orbit_image.size() == s.orbits_g && images.size() == s.orbits_g &&
                        s.orbits_g == s.orbits_m * s.orbits_n;
    return s;
}

}  // namespace setdirect
