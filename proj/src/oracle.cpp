#include "setdirect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace setdirect {

namespace {

using Clock = std::chrono::steady_clock;
using Pair = std::pair<Subset, Subset>;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct PairHash {
    std::size_t operator()(const Pair& p) const noexcept { return p.first.hash() * 31 + p.second.hash(); }
};

Pair canonical(Subset a, Subset b) {
    const bool swap = b.size() < a.size() || (b.size() == a.size() && b < a);
    if (swap) return {std::move(b), std::move(a)};
    return {std::move(a), std::move(b)};
}

Element first_missing(const Subset& s) {
    const auto& w = s.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (~w[i] != 0) return static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_one(w[i])));
    return static_cast<Element>(s.universe());
}

class ExactCoverSearch {
public:
    ExactCoverSearch(const GroupTable& g, const EnumerationOptions& opts)
        : g_(g), cls_(g.classes()), opts_(opts), start_(Clock::now()) {}

    std::set<Pair> run() {
        const std::size_t n = g_.order();
        const std::size_t one = cls_.class_of[g_.identity()];
        guard_search_space(one);
        Subset s(n);
        std::size_t next = 0;
        if (opts_.prune) s |= cls_.classes[one];
        enumerate_small_side(s, next, one);
        return std::move(found_);
    }

    std::size_t candidates() const noexcept { return candidates_; }

private:
    bool valid_small_size(std::size_t s) const {
        const std::size_t n = g_.order();
        return s > 0 && n % s == 0 && s * s <= n;
    }

    // Counts unions of classes that could serve as the smaller factor.
    void guard_search_space(std::size_t one) const {
        const std::size_t n = g_.order();
        std::size_t limit = 1;
        while ((limit + 1) * (limit + 1) <= n) ++limit;
        constexpr std::uint64_t cap = std::uint64_t{1} << 62;
        std::vector<std::uint64_t> ways(limit + 1, 0);
        ways[opts_.prune ? 1 : 0] = 1;
        for (std::size_t c = 0; c < cls_.count(); ++c) {
            if (opts_.prune && c == one) continue;
            const std::size_t size = cls_.classes[c].size();
            for (std::size_t s = limit; s >= size && s > 0; --s) ways[s] = std::min(cap, ways[s] + ways[s - size]);
        }
        std::uint64_t total = 0;
        for (std::size_t s = 1; s <= limit; ++s)
            if (valid_small_size(s)) total = std::min(cap, total + ways[s]);
        if (total > opts_.max_candidates) {
            throw Error(ErrorCode::SearchSpaceTooLarge, std::to_string(total) + " candidate factors exceed the bound " +
                                                            std::to_string(opts_.max_candidates));
        }
    }

    void tick() {
        if ((++ticks_ & 1023u) == 0 && seconds_since(start_) > opts_.time_budget_secs) {
            throw Error(ErrorCode::TimeBudgetExceeded,
                        "search exceeded " + std::to_string(opts_.time_budget_secs) + " s after " +
                            std::to_string(found_.size()) + " factorizations");
        }
    }

    void enumerate_small_side(Subset& s, std::size_t next, std::size_t one) {
        tick();
        if (valid_small_size(s.size())) complete(s, one);
        for (std::size_t c = next; c < cls_.count(); ++c) {
            if (opts_.prune && c == one) continue;
            const Subset& cl = cls_.classes[c];
            if ((s.size() + cl.size()) * (s.size() + cl.size()) > g_.order()) continue;
            s |= cl;
            enumerate_small_side(s, c + 1, one);
            s -= cl;
        }
    }

    // All T with S x T = G, covering the smallest uncovered element first.
    void complete(const Subset& s, std::size_t one) {
        ++candidates_;
        const std::size_t n = g_.order();
        const std::size_t t_size = n / s.size();
        products_.assign(cls_.count(), std::nullopt);
        for (std::size_t c = 0; c < cls_.count(); ++c) {
            if (cls_.classes[c].size() > t_size) continue;
            Subset p = product_set(g_, s, cls_.classes[c]);
            if (p.size() == s.size() * cls_.classes[c].size()) products_[c] = std::move(p);
        }
        s_elements_ = s.elements();
        Subset covered(n), t(n);
        if (opts_.prune) {
            covered = *products_[one];
            t |= cls_.classes[one];
        }
        extend(s, covered, t, t_size);
    }

    void extend(const Subset& s, const Subset& covered, Subset& t, std::size_t t_size) {
        tick();
        if (covered.size() == g_.order()) {
            found_.insert(canonical(s, t));
            return;
        }
        const Element target = first_missing(covered);
        std::vector<std::size_t> tried;
        for (Element x : s_elements_) {
            const std::size_t c = cls_.class_of[g_.mul(g_.inv(x), target)];
            if (std::find(tried.begin(), tried.end(), c) != tried.end()) continue;
            tried.push_back(c);
            const Subset& cl = cls_.classes[c];
            if (!products_[c] || t.size() + cl.size() > t_size || products_[c]->intersects(covered)) continue;
            t |= cl;
            extend(s, covered | *products_[c], t, t_size);
            t -= cl;
        }
    }

    const GroupTable& g_;
    const ClassPartition& cls_;
    EnumerationOptions opts_;
    Clock::time_point start_;
    std::uint64_t ticks_ = 0;
    std::size_t candidates_ = 0;
    std::vector<std::optional<Subset>> products_;
    std::vector<Element> s_elements_;
    std::set<Pair> found_;
};

std::vector<Element> generators_of(const GroupTable& g, const Subset& h) {
    std::vector<Element> gens;
    Subset span = g.trivial();
    h.for_each([&](Element e) {
        if (span.contains(e)) return;
        gens.push_back(e);
        Subset with = span;
        with.insert(e);
        span = generated_subgroup(g, with);
    });
    return gens;
}

}  // namespace

EnumerationResult enumerate_setdirect(const GroupTable& g, const EnumerationOptions& opts, std::string group_id) {
    const auto start = Clock::now();
    ExactCoverSearch search(g, opts);
    std::set<Pair> found = search.run();

    EnumerationResult r;
    r.group_id = std::move(group_id);
    r.candidates = search.candidates();

    auto keep = [&](const Pair& p) {
        const bool nontrivial = p.first.size() > 1 && p.second.size() > 1;
        const bool normalized = p.first.contains(g.identity()) && p.second.contains(g.identity());
        if ((opts.nontrivial_only && !nontrivial) || (opts.normalized_only && !normalized)) return;
        r.factorizations.push_back({p.first, p.second, true});
    };

    const Subset zg = center(g);
    if (opts.prune) {
        // Shifting a factorization by (z1, z2) gives a factorization, and two
        // shifts of X never pair up with each other, so an orbit has
        // |Z : Stab(X)| |Z : Stab(Y)| members. Its normalized members are the
        // shifts by inverses of elements of (X n Z) x (Y n Z).
        auto stabilizer_index = [&](const Subset& s) {
            std::size_t fixed = 0;
            zg.for_each([&](Element z) { fixed += left_translate(g, z, s) == s; });
            return zg.size() / fixed;
        };
        std::size_t visited = 0;
        for (const auto& p : found) {
            if ((++visited & 1023u) == 0 && seconds_since(start) > opts.time_budget_secs) {
                throw Error(ErrorCode::TimeBudgetExceeded,
                            "shift orbits exceeded " + std::to_string(opts.time_budget_secs) + " s");
            }
            Pair least = p;
            (p.first & zg).for_each([&](Element a) {
                const Subset x = left_translate(g, g.inv(a), p.first);
                (p.second & zg).for_each([&](Element b) {
                    Pair q = canonical(x, left_translate(g, g.inv(b), p.second));
                    if (!found.count(q)) inconsistency("normalized shift of a factorization is missing from the oracle");
                    if (q < least) least = std::move(q);
                });
            });
            if (!(least == p)) continue;
            const std::size_t size = stabilizer_index(p.first) * stabilizer_index(p.second);
            ++r.shift_orbits;
            r.total += size;
            if (p.first.size() > 1 && p.second.size() > 1) r.nontrivial += size;
        }
        r.normalized = found.size();
        if (opts.normalized_only) {
            for (const auto& p : found) keep(p);
        } else {
            const auto zs = zg.elements();
            auto translates = [&](const Subset& s) {
                std::vector<Subset> out;
                out.reserve(zs.size());
                for (Element z : zs) out.push_back(left_translate(g, z, s));
                return out;
            };
            std::unordered_set<Pair, PairHash> all;
            for (const auto& [x, y] : found) {
                const auto xs = translates(x);
                const auto ys = translates(y);
                for (const Subset& a : xs)
                    for (const Subset& b : ys) all.insert(canonical(a, b));
            }
            if (all.size() != r.total) inconsistency("central shifts disagree with the orbit sizes");
            std::vector<Pair> pairs(all.begin(), all.end());
            std::sort(pairs.begin(), pairs.end());
            for (const auto& p : pairs) keep(p);
        }
    } else {
        r.total = found.size();
        // Orbits of the central shifts, via union-find over generators of Z(G) x Z(G).
        std::unordered_map<Pair, std::size_t, PairHash> index;
        std::vector<const Pair*> by_index;
        for (const auto& p : found) {
            index.emplace(p, index.size());
            by_index.push_back(&p);
        }
        std::vector<std::size_t> parent(index.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        const auto gens = generators_of(g, zg);
        for (std::size_t i = 0; i < by_index.size(); ++i) {
            const Pair& p = *by_index[i];
            for (Element z : gens) {
                for (const Pair& q : {canonical(left_translate(g, z, p.first), p.second),
                                      canonical(p.first, left_translate(g, z, p.second))}) {
                    auto it = index.find(q);
                    if (it == index.end()) inconsistency("central shift of a factorization is missing from the oracle");
                    parent[root(i)] = root(it->second);
                }
            }
        }
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (root(i) == i) ++r.shift_orbits;
        for (const auto& p : found) {
            r.nontrivial += p.first.size() > 1 && p.second.size() > 1;
            r.normalized += p.first.contains(g.identity()) && p.second.contains(g.identity());
            keep(p);
        }
    }
    r.elapsed_secs = seconds_since(start);
    return r;
}

EnumerationResult enumerate_abelian_factorizations(const GroupTable& z, const EnumerationOptions& opts,
                                                   std::string group_id) {
    if (!z.is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian enumeration needs an abelian group");
    if (z.order() > 64) throw Error(ErrorCode::SearchSpaceTooLarge, "abelian enumeration is bounded by order 64");
    return enumerate_setdirect(z, opts, std::move(group_id));
}

std::optional<Subset> search_normal_transversal(const GroupTable& g, const Subset& n, const Subset& z) {
    if (!is_normal_subgroup(g, n)) throw Error(ErrorCode::NotNormalSubgroup, "N must be a normal subgroup");
    if (!is_subgroup(g, z) || !is_central(g, z) || !z.is_subset_of(n)) {
        throw Error(ErrorCode::PreconditionViolated, "Z must be a central subgroup inside N");
    }
    const auto& cls = g.classes();
    const auto inside = cls.classes_in(n);
    // Z C for every class C in N meeting each coset of Z at most once.
    std::map<std::size_t, Subset> spread;
    for (std::size_t c : inside) {
        Subset zc = product_set(g, z, cls.classes[c]);
        if (zc.size() == z.size() * cls.classes[c].size()) spread.emplace(c, std::move(zc));
    }
    const auto zs = z.elements();
    Subset outside = g.all() - n;

    std::optional<Subset> result;
    Subset chosen(g.order());
    auto rec = [&](auto&& self, const Subset& covered) -> void {
        if (result) return;
        if (covered.size() == g.order()) {
            result = chosen;
            return;
        }
        const Element target = first_missing(covered);
        std::vector<std::size_t> tried;
        for (Element s : zs) {
            const std::size_t c = cls.class_of[g.mul(s, target)];
            if (std::find(tried.begin(), tried.end(), c) != tried.end()) continue;
            tried.push_back(c);
            auto it = spread.find(c);
            if (it == spread.end() || it->second.intersects(covered)) continue;
            chosen |= cls.classes[c];
            self(self, covered | it->second);
            chosen -= cls.classes[c];
            if (result) return;
        }
    };
    rec(rec, outside);
    return result;
}

SuiteReport property_suite(const GroupTable& g, const SuiteOptions& opts, std::string group_id) {
    SuiteReport report;
    report.group_id = group_id;
    EnumerationOptions eo = opts.enumeration;
    // Shifts of the normalized pairs are covered by the central-shift property.
    eo.normalized_only = true;
    eo.nontrivial_only = false;
    const auto en = enumerate_setdirect(g, eo, std::move(group_id));
    report.factorizations = en.total;

    const auto& cls = g.classes();
    const Subset zg = center(g);
    const auto zs = zg.elements();
    const std::size_t n = g.order();

    auto property = [](std::string name) {
        PropertyResult p;
        p.name = std::move(name);
        return p;
    };
    PropertyResult certified = property("oracle-certified");
    PropertyResult centralizing = property("direct-implies-centralizing");
    PropertyResult intersection = property("intersection-at-most-one");
    PropertyResult central_pair = property("central-pair");
    PropertyResult exclusion = property("class-exclusion");
    PropertyResult main = property("main-theorem");
    PropertyResult slices = property("slice-cosets");
    PropertyResult shift = property("central-shift");
    PropertyResult association = property("association");
    PropertyResult criteria = property("criteria-agree");
    PropertyResult class_lemma = property("centralizing-classes");

    auto fail = [](PropertyResult& p, std::string witness) {
        if (p.passed) p.witness = std::move(witness);
        p.passed = false;
    };
    auto show = [&](const Subset& s) {
        std::string out = "{";
        s.for_each([&](Element e) { out += (out.size() > 1 ? "," : "") + g.label(e); });
        return out + "}";
    };

    for (const auto& f : en.factorizations) {
        const std::string w = show(f.x) + " x " + show(f.y);
        ++certified.checked;
        if (!certify(g, f.x, f.y).certified || f.x.size() * f.y.size() != n) fail(certified, w);

        ++centralizing.checked;
        if (commutator_set(g, f.x, f.y).size() != 1) fail(centralizing, w);

        ++intersection.checked;
        if ((f.x & f.y).size() > 1) fail(intersection, w);

        ++central_pair.checked;
        bool has_pair = false;
        for (Element z : zs) has_pair = has_pair || (f.x.contains(z) && f.y.contains(g.inv(z)));
        if (!has_pair) fail(central_pair, w);

        for (const auto& [a, b] : {std::pair{&f.x, &f.y}, std::pair{&f.y, &f.x}}) {
            for (std::size_t c : cls.classes_in(*a)) {
                const Subset& cl = cls.classes[c];
                if (cl.size() < 2) continue;
                ++exclusion.checked;
                if (b->intersects(cl) || b->intersects(inverse_set(g, cl))) fail(exclusion, w);
            }
        }

        ++main.checked;
        const auto mt = verify_main_theorem(g, f.x, f.y);
        if (!mt.verdict) {
            fail(main, w);
            continue;
        }
        for (const auto* family : {&mt.x_slices, &mt.y_slices}) {
            for (const auto& sl : *family) {
                if (sl.values.empty()) continue;
                ++slices.checked;
                bool closed = true;
                class_stabilizer(g, sl.rep, mt.z).for_each([&](Element s) {
                    closed = closed && left_translate(g, s, sl.values) == sl.values;
                });
                if (!closed) fail(slices, w + " at " + g.label(sl.rep));
            }
        }
    }

    std::mt19937_64 rng(opts.seed);
    for (std::size_t k = 0; k < opts.random_samples; ++k) {
        const Subset a = random_class_union(g, rng);
        const Subset b = random_class_union(g, rng);
        const Subset c = random_class_union(g, rng);
        const std::string w = show(a) + " " + show(b);
        ++criteria.checked;
        bool direct = false;
        try {
            direct = is_direct(g, a, b).direct();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InternalInconsistency) throw;
            fail(criteria, w);
        }
        if (direct) {
            ++centralizing.checked;
            if (commutator_set(g, a, b).size() != 1) fail(centralizing, w);
        }
        ++shift.checked;
        const Element z = zs[rng() % zs.size()];
        if (evaluate_directness(g, left_translate(g, z, a), b).direct() != evaluate_directness(g, a, b).direct())
            fail(shift, w + " shifted by " + g.label(z));

        const auto ab = evaluate_directness(g, a, b);
        if (ab.direct() && evaluate_directness(g, ab.product, c).direct()) {
            ++association.checked;
            const auto bc = evaluate_directness(g, b, c);
            if (!bc.direct() || !evaluate_directness(g, a, bc.product).direct()) fail(association, w + " " + show(c));
        }
    }

    // Minimal normal subgroups, for the class-pair statements.
    const auto normals = normal_subgroups(g);
    std::vector<Subset> minimal;
    for (const auto& m : normals) {
        if (m.size() == 1) continue;
        bool is_min = true;
        for (const auto& other : normals)
            if (other.size() > 1 && other.size() < m.size() && other.is_subset_of(m)) is_min = false;
        if (is_min) minimal.push_back(m);
    }
    report.unique_nonabelian_minimal_normal = minimal.size() == 1 && commutator_set(g, minimal[0], minimal[0]).size() > 1;

    bool cyclic = false;
    for (Element e = 0; e < n && !cyclic; ++e) cyclic = g.element_order(e) == n;
    PropertyResult pairs = property("class-pairs-non-direct");
    const std::size_t one = cls.class_of[g.identity()];
    for (std::size_t c = 0; c < cls.count(); ++c) {
        if (c == one) continue;
        for (std::size_t d = c; d < cls.count(); ++d) {
            if (d == one) continue;
            const Subset& cc = cls.classes[c];
            const Subset& dd = cls.classes[d];
            const std::string w = show(cc) + " " + show(dd);
            const bool direct = evaluate_directness(g, cc, dd).direct();
            if (direct && !report.direct_class_pair) report.direct_class_pair = {c, d};
            if (report.unique_nonabelian_minimal_normal) {
                ++pairs.checked;
                if (direct) fail(pairs, w);
            }
            if (commutator_set(g, cc, dd).size() == 1) {
                ++class_lemma.checked;
                const Subset gc = generated_subgroup(g, cc);
                const Subset gd = generated_subgroup(g, dd);
                const bool whole_cyclic = gc.size() == n && gd.size() == n && cyclic;
                const bool proper = gc.size() < n || gd.size() < n;
                if (!whole_cyclic && !proper) fail(class_lemma, w);
            }
        }
    }

    report.properties = {certified, centralizing, intersection, central_pair, exclusion, main, slices,
                         shift,     association,  criteria,     class_lemma};
    if (report.unique_nonabelian_minimal_normal) report.properties.push_back(pairs);
    return report;
}

}  // namespace setdirect
