#include "setdirect/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace setdirect {

namespace {

bool translates_disjoint(const GroupTable& g, const Subset& x, const Subset& y, bool left) {
    Subset covered(g.order());
    bool disjoint = true;
    x.for_each([&](Element a) {
        if (!disjoint) return;
        Subset t(g.order());
        y.for_each([&](Element b) { t.insert(left ? g.mul(a, b) : g.mul(b, a)); });
        if (t.intersects(covered)) disjoint = false;
        covered |= t;
    });
    return disjoint;
}

void require_normal_nonempty(const GroupTable& g, const Subset& s, const char* name) {
    if (s.empty()) throw Error(ErrorCode::EmptySet, std::string(name) + " is empty");
    if (!is_normal_subset(g, s)) throw Error(ErrorCode::NotNormal, std::string(name) + " is not a normal subset");
}

// X x Y = ambient, for normal X, Y of G.
bool factors(const GroupTable& g, const Subset& ambient, const Subset& x, const Subset& y) {
    if (x.empty() || y.empty()) return false;
    const auto r = evaluate_directness(g, x, y);
    return r.direct() && r.product == ambient;
}

}  // namespace

DirectnessReport evaluate_directness(const GroupTable& g, const Subset& x, const Subset& y) {
    DirectnessReport r;
    auto sp = set_product(g, x, y);
    r.multiplicities = std::all_of(sp.multiplicity.begin(), sp.multiplicity.end(), [](auto c) { return c <= 1; });
    const Subset dx = product_set(g, x, inverse_set(g, x));
    const Subset dy = product_set(g, y, inverse_set(g, y));
    r.difference_sets = (dx & dy) == g.trivial();
    r.translates_partition = translates_disjoint(g, x, y, true) || translates_disjoint(g, y, x, false);
    r.cardinality = sp.product.size() == x.size() * y.size();
    r.product = std::move(sp.product);
    return r;
}

DirectnessReport is_direct(const GroupTable& g, const Subset& x, const Subset& y) {
    require_normal_nonempty(g, x, "X");
    require_normal_nonempty(g, y, "Y");
    auto r = evaluate_directness(g, x, y);
    if (!r.agree()) inconsistency("directness criteria disagree");
    return r;
}

SetDirectFactorization certify(const GroupTable& g, const Subset& x, const Subset& y) {
    const bool ok = !x.empty() && !y.empty() && is_normal_subset(g, x) && is_normal_subset(g, y) &&
                    is_direct(g, x, y).direct() && x.size() * y.size() == g.order();
    return {x, y, ok};
}

MainTheoremReport verify_main_theorem(const GroupTable& g, const Subset& x, const Subset& y) {
    require_normal_nonempty(g, x, "X");
    require_normal_nonempty(g, y, "Y");
    MainTheoremReport r;
    r.m = generated_subgroup(g, x);
    r.n = generated_subgroup(g, y);
    r.z = r.m & r.n;
    r.product_is_g = product_set(g, x, y).size() == g.order();

    const auto cpa = is_central_product(g, r.m, r.n);
    r.condition_a = static_cast<bool>(cpa);
    r.a_failure = cpa.failure;

    const auto& cls = g.classes();
    auto slices = [&](const Subset& k, const Subset& s) {
        std::vector<Slice> out;
        for (std::size_t c : cls.classes_in(k)) {
            const Element rep = cls.classes[c].first();
            out.push_back({rep, left_translate(g, g.inv(rep), s) & r.z});
        }
        return out;
    };
    r.x_slices = slices(r.m, x);
    r.y_slices = slices(r.n, y);

    r.condition_b = true;
    for (const auto& xs : r.x_slices) {
        for (const auto& ys : r.y_slices) {
            ++r.slice_pairs_checked;
            std::string why;
            if (xs.values.empty() || ys.values.empty()) {
                why = "empty slice";
            } else {
                // Cardinality form of directness; the criteria are checked against each other elsewhere.
                const Subset p = product_set(g, xs.values, ys.values);
                if (p.size() != xs.values.size() * ys.values.size()) why = "slice product not direct";
                else if (!(p == r.z)) why = "slice product is not Z";
            }
            if (!why.empty()) {
                r.condition_b = false;
                r.witness = {xs.rep, ys.rep};
                r.b_failure = why;
                break;
            }
        }
        if (!r.condition_b) break;
    }
    r.verdict = r.condition_a && r.condition_b;

    const bool direct = is_direct(g, x, y).direct() && r.product_is_g;
    if (direct != r.verdict) inconsistency("central-product characterisation disagrees with the direct check");
    return r;
}

Subset kernel(const GroupTable& z, const Subset& s) {
    if (!z.is_abelian()) throw Error(ErrorCode::NotAbelian, "kernel needs an abelian group");
    if (s.empty()) throw Error(ErrorCode::EmptySet, "kernel of the empty set");
    Subset k(z.order());
    for (Element h = 0; h < z.order(); ++h)
        if (left_translate(z, h, s) == s) k.insert(h);
    return k;
}

SystemReport check_factorization_system(const FactorizationSystem& sys) {
    const GroupTable& z = sys.z.group;
    if (!z.is_abelian()) throw Error(ErrorCode::NotAbelian, "factorization systems live in an abelian group");
    if (sys.m.size() != sys.a.size() || sys.n.size() != sys.b.size()) {
        throw Error(ErrorCode::IndexMismatch, "families indexed by different sets");
    }
    if (sys.a.empty() || sys.b.empty()) throw Error(ErrorCode::IndexMismatch, "empty index set");
    for (const auto* family : {&sys.m, &sys.n, &sys.a, &sys.b})
        for (const auto& s : *family)
            if (s.universe() != z.order()) throw Error(ErrorCode::IndexMismatch, "subset of a different group");
    for (const auto* family : {&sys.m, &sys.n})
        for (const auto& s : *family)
            if (!is_subgroup(z, s)) throw Error(ErrorCode::PreconditionViolated, "M_i and N_j must be subgroups");

    SystemReport r;
    r.products_direct = true;
    r.kernels_contain = true;
    auto fail = [&](std::size_t i, std::size_t j, std::string why) {
        if (!r.failing_pair) {
            r.failing_pair = {i, j};
            r.failure = std::move(why);
        }
    };

    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        if (sys.a[i].empty() || !sys.m[i].is_subset_of(kernel(z, sys.a[i]))) {
            r.kernels_contain = false;
            fail(i, 0, "M_i is not inside K(A_i)");
        }
    }
    for (std::size_t j = 0; j < sys.b.size(); ++j) {
        if (sys.b[j].empty() || !sys.n[j].is_subset_of(kernel(z, sys.b[j]))) {
            r.kernels_contain = false;
            fail(0, j, "N_j is not inside K(B_j)");
        }
    }
    // Systems built from orbits repeat the same sets; test each distinct pair once.
    auto first_index = [](const std::vector<Subset>& family) {
        std::vector<std::size_t> firsts;
        for (std::size_t i = 0; i < family.size(); ++i) {
            bool seen = false;
            for (std::size_t f : firsts) seen = seen || family[f] == family[i];
            if (!seen) firsts.push_back(i);
        }
        return firsts;
    };
    const auto distinct_a = first_index(sys.a);
    const auto distinct_b = first_index(sys.b);
    for (std::size_t i : distinct_a) {
        for (std::size_t j : distinct_b) {
            if (!factors(z, z.all(), sys.a[i], sys.b[j])) {
                r.products_direct = false;
                fail(i, j, "Z is not A_i x B_j");
            }
        }
    }

    r.sizes_consistent = true;
    for (const auto& a : sys.a)
        for (const auto& b : sys.b)
            if (a.size() * b.size() != z.order()) r.sizes_consistent = false;

    auto lcm_of = [](const std::vector<Subset>& family) {
        std::size_t l = 1;
        for (const auto& s : family) l = std::lcm(l, s.size());
        return l;
    };
    r.lcm_divides = sys.a[0].size() % lcm_of(sys.m) == 0 && sys.b[0].size() % lcm_of(sys.n) == 0;

    // Distinct members of S lie in distinct cosets of H.
    auto separated = [&](const Subset& s, const Subset& h) {
        Subset seen(z.order());
        bool ok = true;
        s.for_each([&](Element a) {
            const Element rep = left_translate(z, a, h).first();
            if (seen.contains(rep)) ok = false;
            seen.insert(rep);
        });
        return ok;
    };
    r.coset_separation = true;
    r.trivial_intersections = true;
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        for (std::size_t j = 0; j < sys.b.size(); ++j) {
            if (!separated(sys.a[i], sys.n[j]) || !separated(sys.b[j], sys.m[i])) r.coset_separation = false;
            if (!((sys.m[i] & sys.n[j]) == z.trivial())) r.trivial_intersections = false;
        }
    }
    if (r.valid() && !(r.sizes_consistent && r.lcm_divides && r.coset_separation && r.trivial_intersections)) {
        inconsistency("valid factorization system violates a derived property");
    }
    return r;
}

ClassChoices identity_choices(const GroupTable& g, const CentralDecomposition& cp) {
    const std::size_t one = g.classes().class_of[g.identity()];
    auto pick = [&](const ZActionData& data) {
        std::vector<std::size_t> out;
        for (const auto& o : data.orbits)
            out.push_back(std::find(o.classes.begin(), o.classes.end(), one) != o.classes.end() ? one : o.classes[0]);
        return out;
    };
    return {pick(z_orbits(g, cp.m, cp.z)), pick(z_orbits(g, cp.n, cp.z))};
}

FactorizationSystem system_skeleton(const GroupTable& g, const CentralDecomposition& cp) {
    FactorizationSystem sys{subgroup_table(g, cp.z), {}, {}, {}, {}};
    for (const auto& o : z_orbits(g, cp.m, cp.z).orbits) sys.m.push_back(sys.z.restrict(o.stabilizer));
    for (const auto& o : z_orbits(g, cp.n, cp.z).orbits) sys.n.push_back(sys.z.restrict(o.stabilizer));
    sys.a.assign(sys.m.size(), sys.z.group.empty_subset());
    sys.b.assign(sys.n.size(), sys.z.group.empty_subset());
    return sys;
}

SetDirectFactorization construct_from_system(const GroupTable& g, const CentralDecomposition& cp,
                                             const FactorizationSystem& sys, const ClassChoices& choices) {
    if (sys.z.to_ambient.size() != cp.z.size() || sys.z.embed(sys.z.group.all()) != cp.z) {
        throw Error(ErrorCode::SystemMismatch, "system is not defined on the central subgroup of the decomposition");
    }
    const auto om = z_orbits(g, cp.m, cp.z);
    const auto on = z_orbits(g, cp.n, cp.z);
    if (sys.m.size() != om.orbits.size() || sys.n.size() != on.orbits.size() || sys.a.size() != sys.m.size() ||
        sys.b.size() != sys.n.size()) {
        throw Error(ErrorCode::SystemMismatch, "index sets differ from the orbits of Z");
    }
    for (std::size_t i = 0; i < sys.m.size(); ++i)
        if (sys.z.embed(sys.m[i]) != om.orbits[i].stabilizer)
            throw Error(ErrorCode::SystemMismatch, "M_" + std::to_string(i) + " is not the orbit stabilizer");
    for (std::size_t j = 0; j < sys.n.size(); ++j)
        if (sys.z.embed(sys.n[j]) != on.orbits[j].stabilizer)
            throw Error(ErrorCode::SystemMismatch, "N_" + std::to_string(j) + " is not the orbit stabilizer");
    if (!check_factorization_system(sys).valid()) {
        throw Error(ErrorCode::HypothesisViolated, "families do not form a factorization system");
    }

    const auto& cls = g.classes();
    auto assemble = [&](const ZActionData& data, const std::vector<Subset>& parts,
                        const std::vector<std::size_t>& picked) {
        if (!picked.empty() && picked.size() != data.orbits.size()) {
            throw Error(ErrorCode::InvalidChoice, "one class per orbit is required");
        }
        Subset out(g.order());
        for (std::size_t i = 0; i < data.orbits.size(); ++i) {
            const std::size_t c = picked.empty() ? data.orbits[i].classes[0] : picked[i];
            if (c >= cls.count() || data.orbit_of_class[c] != i) {
                throw Error(ErrorCode::InvalidChoice, "class " + std::to_string(c) + " is not in orbit " +
                                                          std::to_string(i));
            }
            out |= product_set(g, sys.z.embed(parts[i]), cls.classes[c]);
        }
        return out;
    };
    const Subset x = assemble(om, sys.a, choices.c);
    const Subset y = assemble(on, sys.b, choices.d);

    auto f = certify(g, x, y);
    if (!f.certified || !verify_main_theorem(g, x, y).verdict) {
        inconsistency("construction from a factorization system failed to certify");
    }
    return f;
}

TransversalResult transversal_factorization(const GroupTable& g, const CentralDecomposition& cp) {
    TransversalResult r;
    r.violating_stabilizer = g.empty_subset();
    const auto on = z_orbits(g, cp.n, cp.z);
    const auto n_group = subgroup_table(g, cp.n);
    r.n_counts = class_count_report(n_group.group, n_group.restrict(cp.z));
    if (r.n_counts.semiregular != on.semi_regular()) {
        inconsistency("N-classes and G-classes inside N disagree on semi-regularity");
    }
    for (const auto& o : on.orbits) {
        if (o.stabilizer.size() != 1) {
            r.violating_orbit = o.classes;
            r.violating_stabilizer = o.stabilizer;
            return r;
        }
    }
    Subset y(g.order());
    for (const auto& o : on.orbits) y |= g.classes().classes[o.classes[0]];
    auto f = certify(g, cp.m, y);
    if (!f.certified) inconsistency("normal transversal did not give a factorization");
    r.factorization = std::move(f);
    return r;
}

CyclicResult cyclic_center_factorization(const GroupTable& g, const CentralDecomposition& cp, const Subset& x0,
                                         const Subset& y0) {
    bool cyclic = false;
    cp.z.for_each([&](Element e) { cyclic = cyclic || g.element_order(e) == cp.z.size(); });
    if (!cyclic) throw Error(ErrorCode::NotCyclic, "Z is not cyclic");
    if (!x0.is_subset_of(cp.z) || !y0.is_subset_of(cp.z)) {
        throw Error(ErrorCode::ContainmentViolated, "X0 and Y0 must lie in Z");
    }
    if (!factors(g, cp.z, x0, y0)) throw Error(ErrorCode::NotADirectFactorizationOfZ, "Z is not X0 x Y0");

    CyclicResult r;
    const Subset mm = commutator_set(g, cp.m, cp.m);
    const Subset nn = commutator_set(g, cp.n, cp.n);
    r.commutator_intersection = mm & nn;
    // The "only if" direction needs none of the kernel hypotheses.
    if (r.commutator_intersection.size() != 1) return r;

    auto sys = system_skeleton(g, cp);
    const Subset x0_local = sys.z.restrict(x0);
    const Subset y0_local = sys.z.restrict(y0);
    if (!(mm & cp.z).is_subset_of(sys.z.embed(kernel(sys.z.group, x0_local))) ||
        !(nn & cp.z).is_subset_of(sys.z.embed(kernel(sys.z.group, y0_local)))) {
        throw Error(ErrorCode::HypothesisViolated, "[M,M] n Z or [N,N] n Z is not inside the kernel of X0 or Y0");
    }
    std::fill(sys.a.begin(), sys.a.end(), x0_local);
    std::fill(sys.b.begin(), sys.b.end(), y0_local);
    auto f = construct_from_system(g, cp, sys, identity_choices(g, cp));
    if (!((f.x & cp.z) == x0) || !((f.y & cp.z) == y0) || !f.x.is_subset_of(cp.m) || !f.y.is_subset_of(cp.n)) {
        inconsistency("cyclic-centre construction does not restrict to X0 and Y0");
    }
    r.factorization = std::move(f);
    return r;
}

SetDirectFactorization prime_power_factorization(const GroupTable& g, Element z) {
    if (z >= g.order()) throw Error(ErrorCode::PreconditionViolated, "element out of range");
    if (!center(g).contains(z)) throw Error(ErrorCode::NotCentral, "element is not central");
    if (!semi_regular_elements(g).contains(z)) {
        throw Error(ErrorCode::NotSemiRegular, "element fixes a conjugacy class");
    }
    const std::size_t order = g.element_order(z);
    std::size_t p = 2;
    while (order % p != 0) ++p;
    std::size_t rest = order;
    while (rest % p == 0) rest /= p;
    if (rest != 1 || order < p * p) {
        throw Error(ErrorCode::OrderNotPrimePowerAtLeastSquare,
                    "element order " + std::to_string(order) + " is not p^k with k >= 2");
    }

    const Subset zg = generated_subgroup(g, g.singleton(z));
    auto cp = is_central_product(g, g.all(), zg);
    if (!cp) inconsistency("G is not G o <z> for central z");
    const Subset x0 = generated_subgroup(g, g.singleton(g.power(z, static_cast<long long>(p))));
    Subset y0(g.order());
    for (std::size_t k = 0; k < p; ++k) y0.insert(g.power(z, static_cast<long long>(k)));

    auto r = cyclic_center_factorization(g, *cp.decomposition, x0, y0);
    if (!r.factorization) inconsistency("prime-power construction found no factorization");
    const auto& f = *r.factorization;
    if (is_subgroup(g, f.y)) inconsistency("prime-power construction gave a subgroup Y");
    if (is_perfect(g) && is_subgroup(g, f.x)) inconsistency("perfect group gave a subgroup X");
    return f;
}

SetDirectFactorization normalize(const GroupTable& g, const SetDirectFactorization& f) {
    if (!f.certified) throw Error(ErrorCode::NotCertified, "only certified factorizations can be normalized");
    std::optional<Element> shift;
    center(g).for_each([&](Element z) {
        if (!shift && f.x.contains(z) && f.y.contains(g.inv(z))) shift = z;
    });
    if (!shift) inconsistency("no central z with z in X and z^-1 in Y");
    auto out = certify(g, left_translate(g, g.inv(*shift), f.x), left_translate(g, *shift, f.y));
    if (!out.certified || !out.x.contains(g.identity()) || !out.y.contains(g.identity())) {
        inconsistency("central shift broke the factorization");
    }
    return out;
}

InducedDecompositions induced_decompositions(const GroupTable& g, const SetDirectFactorization& f,
                                             const CentralDecomposition& cp) {
    if (!f.certified) throw Error(ErrorCode::NotCertified, "induced decompositions need G = X x Y");
    if (!f.x.is_subset_of(cp.m) || !f.y.is_subset_of(cp.n)) {
        throw Error(ErrorCode::ContainmentViolated, "X must lie in M and Y in N");
    }
    InducedDecompositions d;
    d.m_side = {f.x, f.y & cp.z, false};
    d.n_side = {f.y, f.x & cp.z, false};
    d.m_side.certified = factors(g, cp.m, d.m_side.x, d.m_side.y);
    d.n_side.certified = factors(g, cp.n, d.n_side.x, d.n_side.y);
    if (!d.m_side.certified || !d.n_side.certified) inconsistency("induced decomposition is not direct");
    return d;
}

}  // namespace setdirect
