#include "setdirect/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace setdirect {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
        case ErrorCode::NotCentral: return "NotCentral";
        case ErrorCode::NotIsomorphism: return "NotIsomorphism";
        case ErrorCode::EmptyGeneratingSet: return "EmptyGeneratingSet";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotNormalSubgroup: return "NotNormalSubgroup";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::NotSubgroup: return "NotSubgroup";
        case ErrorCode::NotAbelian: return "NotAbelian";
        case ErrorCode::NotCyclic: return "NotCyclic";
        case ErrorCode::IndexMismatch: return "IndexMismatch";
        case ErrorCode::SystemMismatch: return "SystemMismatch";
        case ErrorCode::InvalidChoice: return "InvalidChoice";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NotADirectFactorizationOfZ: return "NotADirectFactorizationOfZ";
        case ErrorCode::NotSemiRegular: return "NotSemiRegular";
        case ErrorCode::OrderNotPrimePowerAtLeastSquare: return "OrderNotPrimePowerAtLeastSquare";
        case ErrorCode::NotCertified: return "NotCertified";
        case ErrorCode::ContainmentViolated: return "ContainmentViolated";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::TimeBudgetExceeded: return "TimeBudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

std::size_t default_max_order() {
    if (const char* env = std::getenv("SETDIRECT_MAX_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

// ---------------------------------------------------------------------------
// ClassPartition

std::vector<std::size_t> ClassPartition::classes_in(const Subset& s) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].is_subset_of(s)) out.push_back(c);
    }
    return out;
}

Subset ClassPartition::union_of(const std::vector<std::size_t>& class_indices) const {
    Subset s(class_of.size());
    for (std::size_t c : class_indices) s |= classes.at(c);
    return s;
}

// ---------------------------------------------------------------------------
// GroupTable

struct GroupTable::Cache {
    std::once_flag once;
    ClassPartition classes;
};

GroupTable::GroupTable(std::size_t order, const std::vector<Element>& table, std::vector<std::string> labels,
                       bool check_associativity)
    : order_(order), cache_(std::make_shared<Cache>()) {
    if (order == 0) throw Error(ErrorCode::NotAGroup, "empty table");
    if (order > kMaxStorableOrder) {
        throw Error(ErrorCode::OrderLimitExceeded, "order " + std::to_string(order) + " exceeds storage limit");
    }
    if (table.size() != order * order) throw Error(ErrorCode::NotAGroup, "table is not square");

    table_.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= order) throw Error(ErrorCode::NotAGroup, "entry out of range");
        table_[i] = static_cast<std::uint16_t>(table[i]);
    }

    // Latin square: each row and column is a permutation.
    std::vector<std::uint32_t> seen(order, 0);
    std::uint32_t stamp = 0;
    for (std::size_t r = 0; r < order; ++r) {
        ++stamp;
        for (std::size_t c = 0; c < order; ++c) {
            auto& s = seen[table_[r * order + c]];
            if (s == stamp) throw Error(ErrorCode::NotAGroup, "row " + std::to_string(r) + " repeats an entry");
            s = stamp;
        }
    }
    for (std::size_t c = 0; c < order; ++c) {
        ++stamp;
        for (std::size_t r = 0; r < order; ++r) {
            auto& s = seen[table_[r * order + c]];
            if (s == stamp) throw Error(ErrorCode::NotAGroup, "column " + std::to_string(c) + " repeats an entry");
            s = stamp;
        }
    }

    std::optional<Element> id;
    for (Element e = 0; e < order && !id; ++e) {
        bool ok = true;
        for (Element x = 0; x < order && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) id = e;
    }
    if (!id) throw Error(ErrorCode::NotAGroup, "no identity element");
    identity_ = *id;

    inverse_.assign(order, 0);
    for (Element x = 0; x < order; ++x) {
        bool found = false;
        for (Element y = 0; y < order; ++y) {
            if (mul(x, y) == identity_) {
                if (mul(y, x) != identity_) throw Error(ErrorCode::NotAGroup, "left and right inverses differ");
                inverse_[x] = y;
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorCode::NotAGroup, "element without inverse");
    }

    if (check_associativity) {
        for (Element a = 0; a < order; ++a)
            for (Element b = 0; b < order; ++b) {
                const Element ab = mul(a, b);
                for (Element c = 0; c < order; ++c) {
                    if (mul(ab, c) != mul(a, mul(b, c))) {
                        throw Error(ErrorCode::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                                              std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                }
            }
    }

    if (labels.empty()) {
        labels.reserve(order);
        for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != order) throw Error(ErrorCode::NotAGroup, "label count does not match order");
    labels_ = std::move(labels);
}

Element GroupTable::power(Element a, long long k) const noexcept {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Element result = identity_;
    Element base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::size_t GroupTable::element_order(Element a) const noexcept {
    std::size_t k = 1;
    Element x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::optional<Element> GroupTable::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<Element>(i);
    }
    return std::nullopt;
}

bool GroupTable::is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

const ClassPartition& GroupTable::classes() const {
    std::call_once(cache_->once, [this] { cache_->classes = classes_under(*this, all(), all()); });
    return cache_->classes;
}

// ---------------------------------------------------------------------------
// Construction

GroupTable group_from_table(const std::vector<std::vector<long long>>& mult, std::vector<std::string> labels,
                            const GroupOptions& opts) {
    const std::size_t n = mult.size();
    if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
    if (n > opts.max_order) throw Error(ErrorCode::OrderLimitExceeded, "table order " + std::to_string(n));
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : mult) {
        if (row.size() != n) throw Error(ErrorCode::NotAGroup, "table is not square");
        for (long long v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorCode::NotAGroup, "entry out of range");
            flat.push_back(static_cast<Element>(v));
        }
    }
    return GroupTable(n, flat, std::move(labels), n <= opts.associativity_check_bound);
}

std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (done[start] || p[start] == start) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = p[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

namespace {

struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Element e : p) h = (h ^ e) * 1099511628211ULL;
        return h;
    }
};

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
    return r;
}

}  // namespace

GroupTable group_from_permutations(const std::vector<Permutation>& generators, const GroupOptions& opts) {
    std::size_t degree = 0;
    for (const auto& g : generators) degree = std::max(degree, g.size());
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        Permutation p(degree);
        std::vector<bool> hit(degree, false);
        for (std::size_t x = 0; x < degree; ++x) {
            p[x] = x < g.size() ? g[x] : static_cast<Element>(x);
            if (p[x] >= degree || hit[p[x]]) throw Error(ErrorCode::NotAGroup, "generator is not a bijection");
            hit[p[x]] = true;
        }
        gens.push_back(std::move(p));
    }

    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), Element{0});

    std::vector<Permutation> elements{identity};
    std::unordered_map<Permutation, Element, PermHash> index{{identity, 0}};
    // right[x * gens + k] = index of elements[x] * gens[k]
    std::vector<Element> right;
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = compose(elements[head], g);
            auto [it, inserted] = index.try_emplace(next, static_cast<Element>(elements.size()));
            if (inserted) {
                if (elements.size() + 1 > std::min(opts.max_order, kMaxStorableOrder)) {
                    throw Error(ErrorCode::OrderLimitExceeded,
                                "closure exceeds " + std::to_string(std::min(opts.max_order, kMaxStorableOrder)));
                }
                elements.push_back(std::move(next));
            }
            right.push_back(it->second);
        }
    }

    const std::size_t n = elements.size();
    const std::size_t k = gens.size();
    // Every non-identity element b was first reached as parent(b) * gens[via(b)].
    std::vector<Element> parent(n, 0), via(n, 0);
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::vector<Element> bfs_order{0};
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
        const Element x = bfs_order[head];
        for (std::size_t j = 0; j < k; ++j) {
            const Element y = right[x * k + j];
            if (!reached[y]) {
                reached[y] = true;
                parent[y] = x;
                via[y] = static_cast<Element>(j);
                bfs_order.push_back(y);
            }
        }
    }

    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
        table[std::size_t{a} * n] = a;
        for (std::size_t pos = 1; pos < n; ++pos) {
            const Element b = bfs_order[pos];
            const Element ab_parent = table[std::size_t{a} * n + parent[b]];
            table[std::size_t{a} * n + b] = right[std::size_t{ab_parent} * k + via[b]];
        }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements) labels.push_back(cycle_notation(p));
    return GroupTable(n, table, std::move(labels), false);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    if (n > kMaxStorableOrder) throw Error(ErrorCode::OrderLimitExceeded, "direct product too large");
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            table[std::size_t{x} * n + y] =
                static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Element x = 0; x < n; ++x) labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    return GroupTable(n, table, std::move(labels), false);
}

CentralProductGroup external_central_product(const GroupTable& m, const GroupTable& n,
                                             const std::vector<std::pair<Element, Element>>& pairing) {
    if (pairing.empty()) throw Error(ErrorCode::NotIsomorphism, "pairing must contain the identity pair");
    Subset zm(m.order()), zn(n.order());
    std::map<Element, Element> theta;
    for (auto [a, b] : pairing) {
        if (a >= m.order() || b >= n.order()) throw Error(ErrorCode::NotIsomorphism, "pairing index out of range");
        if (zn.contains(b) || theta.count(a)) throw Error(ErrorCode::NotIsomorphism, "pairing is not a bijection");
        theta[a] = b;
        zm.insert(a);
        zn.insert(b);
    }
    if (!is_subgroup(m, zm) || !is_central(m, zm)) throw Error(ErrorCode::NotCentral, "first components are not a central subgroup of M");
    if (!is_central(n, zn)) throw Error(ErrorCode::NotCentral, "second components are not central in N");
    for (auto [a, b] : theta)
        for (auto [c, d] : theta)
            if (theta.at(m.mul(a, c)) != n.mul(b, d)) throw Error(ErrorCode::NotIsomorphism, "pairing is not a homomorphism");

    const GroupTable prod = direct_product(m, n);
    const std::size_t nb = n.order();
    Subset kernel(prod.order());
    for (auto [a, b] : theta) kernel.insert(static_cast<Element>(a * nb + n.inv(b)));
    QuotientGroup q = quotient_group(prod, kernel);

    CentralProductGroup out{q.group, q.group.empty_subset(), q.group.empty_subset(), q.group.empty_subset()};
    for (Element a = 0; a < m.order(); ++a) out.left.insert(q.coset_of[a * nb + n.identity()]);
    for (Element b = 0; b < nb; ++b) out.right.insert(q.coset_of[m.identity() * nb + b]);
    for (auto [a, b] : theta) out.central.insert(q.coset_of[a * nb + n.identity()]);
    return out;
}

// ---------------------------------------------------------------------------
// Queries

ClassPartition classes_under(const GroupTable& g, const Subset& domain, const Subset& acting) {
    ClassPartition p;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    p.class_of.assign(g.order(), kNone);
    const auto actors = acting.elements();
    domain.for_each([&](Element x) {
        if (p.class_of[x] != kNone) return;
        Subset cls(g.order());
        for (Element a : actors) cls.insert(g.conj(x, a));
        const std::size_t idx = p.classes.size();
        cls.for_each([&](Element y) { p.class_of[y] = idx; });
        p.classes.push_back(std::move(cls));
    });
    // Discovery in increasing element order already sorts classes by minimal member.
    return p;
}

ClassPartition conjugacy_classes(const GroupTable& g) { return g.classes(); }

Subset center(const GroupTable& g) {
    Subset z(g.order());
    for (Element x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) z.insert(x);
    }
    return z;
}

Subset generated_subgroup(const GroupTable& g, const Subset& s) {
    if (s.empty()) throw Error(ErrorCode::EmptyGeneratingSet, "cannot generate from the empty set");
    const auto gens = s.elements();
    Subset h = g.trivial();
    std::vector<Element> frontier{g.identity()};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const Element x = frontier[head];
        for (Element y : gens) {
            const Element xy = g.mul(x, y);
            if (!h.contains(xy)) {
                h.insert(xy);
                frontier.push_back(xy);
            }
        }
    }
    return h;
}

Subset commutator_set(const GroupTable& g, const Subset& a, const Subset& b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "commutator set of an empty set");
    Subset out(g.order());
    const auto bs = b.elements();
    a.for_each([&](Element x) {
        for (Element y : bs) out.insert(g.commutator(x, y));
    });
    return out;
}

bool is_normal_subset(const GroupTable& g, const Subset& s) {
    const auto& cp = g.classes();
    bool ok = true;
    s.for_each([&](Element x) {
        if (ok && !cp.classes[cp.class_of[x]].is_subset_of(s)) ok = false;
    });
    return ok;
}

bool is_subgroup(const GroupTable& g, const Subset& s) {
    if (!s.contains(g.identity())) return false;
    const auto es = s.elements();
    for (Element a : es)
        for (Element b : es)
            if (!s.contains(g.mul(a, b))) return false;
    return true;
}

bool is_normal_subgroup(const GroupTable& g, const Subset& s) { return is_subgroup(g, s) && is_normal_subset(g, s); }

bool is_central(const GroupTable& g, const Subset& s) {
    bool ok = true;
    s.for_each([&](Element x) {
        for (Element y = 0; y < g.order() && ok; ++y) ok = g.mul(x, y) == g.mul(y, x);
    });
    return ok;
}

bool is_perfect(const GroupTable& g) {
    const Subset all = g.all();
    return generated_subgroup(g, commutator_set(g, all, all)) == all;
}

SetProduct set_product(const GroupTable& g, const Subset& a, const Subset& b) {
    SetProduct out{Subset(g.order()), std::vector<std::uint32_t>(g.order(), 0)};
    const auto bs = b.elements();
    a.for_each([&](Element x) {
        for (Element y : bs) {
            const Element xy = g.mul(x, y);
            ++out.multiplicity[xy];
            out.product.insert(xy);
        }
    });
    return out;
}

Subset product_set(const GroupTable& g, const Subset& a, const Subset& b) {
    Subset out(g.order());
    const auto bs = b.elements();
    a.for_each([&](Element x) {
        for (Element y : bs) out.insert(g.mul(x, y));
    });
    return out;
}

Subset inverse_set(const GroupTable& g, const Subset& s) {
    Subset out(g.order());
    s.for_each([&](Element x) { out.insert(g.inv(x)); });
    return out;
}

Subset left_translate(const GroupTable& g, Element x, const Subset& s) {
    Subset out(g.order());
    s.for_each([&](Element y) { out.insert(g.mul(x, y)); });
    return out;
}

QuotientGroup quotient_group(const GroupTable& g, const Subset& k) {
    if (!is_normal_subgroup(g, k)) throw Error(ErrorCode::NotNormalSubgroup, "quotient by a non-normal subset");
    constexpr Element kNone = static_cast<Element>(-1);
    std::vector<Element> coset_of(g.order(), kNone);
    std::vector<Element> reps;
    const auto ks = k.elements();
    for (Element x = 0; x < g.order(); ++x) {
        if (coset_of[x] != kNone) continue;
        const auto idx = static_cast<Element>(reps.size());
        for (Element y : ks) coset_of[g.mul(x, y)] = idx;
        reps.push_back(x);
    }
    const std::size_t n = reps.size();
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = coset_of[g.mul(reps[i], reps[j])];
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Element r : reps) labels.push_back(k.size() == 1 ? g.label(r) : "[" + g.label(r) + "]");
    return QuotientGroup{GroupTable(n, table, std::move(labels), false), std::move(coset_of)};
}

Subset EmbeddedGroup::embed(const Subset& local) const {
    Subset out(from_ambient.size());
    local.for_each([&](Element x) { out.insert(to_ambient.at(x)); });
    return out;
}

Subset EmbeddedGroup::restrict(const Subset& ambient) const {
    Subset out(group.order());
    ambient.for_each([&](Element x) {
        const auto& local = from_ambient.at(x);
        if (!local) throw Error(ErrorCode::ContainmentViolated, "element outside the embedded subgroup");
        out.insert(*local);
    });
    return out;
}

EmbeddedGroup subgroup_table(const GroupTable& g, const Subset& h) {
    if (!is_subgroup(g, h)) throw Error(ErrorCode::NotSubgroup, "subset is not a subgroup");
    EmbeddedGroup out;
    out.from_ambient.assign(g.order(), std::nullopt);
    // Identity first so the view follows the identity-at-zero convention.
    out.to_ambient.push_back(g.identity());
    h.for_each([&](Element x) {
        if (x != g.identity()) out.to_ambient.push_back(x);
    });
    for (std::size_t i = 0; i < out.to_ambient.size(); ++i) out.from_ambient[out.to_ambient[i]] = static_cast<Element>(i);
    const std::size_t n = out.to_ambient.size();
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = *out.from_ambient[g.mul(out.to_ambient[i], out.to_ambient[j])];
    std::vector<std::string> labels;
    for (Element x : out.to_ambient) labels.push_back(g.label(x));
    out.group = GroupTable(n, table, std::move(labels), false);
    return out;
}

namespace {

void sort_by_order_then_members(std::vector<Subset>& subs) {
    std::sort(subs.begin(), subs.end(), [](const Subset& a, const Subset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

}  // namespace

std::vector<Subset> abelian_subgroups(const GroupTable& g, const Subset& within) {
    if (!is_subgroup(g, within)) throw Error(ErrorCode::NotSubgroup, "ambient set is not a subgroup");
    std::unordered_set<Subset, SubsetHash> seen{g.trivial()};
    std::vector<Subset> out{g.trivial()};
    const auto elems = within.elements();
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Element x : elems) {
            if (out[head].contains(x)) continue;
            Subset gens = out[head];
            gens.insert(x);
            Subset h = generated_subgroup(g, gens);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    }
    sort_by_order_then_members(out);
    return out;
}

std::vector<Subset> normal_subgroups(const GroupTable& g) {
    const auto& cp = g.classes();
    std::unordered_set<Subset, SubsetHash> seen{g.trivial()};
    std::vector<Subset> out{g.trivial()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const Subset& cls : cp.classes) {
            if (cls.is_subset_of(out[head])) continue;
            Subset h = generated_subgroup(g, out[head] | cls);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    }
    sort_by_order_then_members(out);
    return out;
}

}  // namespace setdirect
