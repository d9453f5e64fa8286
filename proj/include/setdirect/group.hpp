#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setdirect/error.hpp"
#include "setdirect/subset.hpp"

namespace setdirect {

/// Bounds applied while building groups.
struct GroupOptions {
    std::size_t max_order = 20000;
    /// Tables up to this order get the full O(n^3) associativity check.
    std::size_t associativity_check_bound = 256;
};

/// Default bound for group orders, honouring SETDIRECT_MAX_ORDER when set.
std::size_t default_max_order();

/// Hard ceiling imposed by the 16-bit table storage.
inline constexpr std::size_t kMaxStorableOrder = 65535;

class GroupTable;

/// Conjugacy classes of a group, sorted by minimal member.
struct ClassPartition {
    std::vector<Subset> classes;
    std::vector<std::size_t> class_of;

    std::size_t count() const noexcept { return classes.size(); }
    /// Indices of the classes contained in a normal subset, in increasing order.
    std::vector<std::size_t> classes_in(const Subset& s) const;
    Subset union_of(const std::vector<std::size_t>& class_indices) const;
};

/// A finite group given by its full multiplication table.
///
/// Immutable after construction. Copies share the lazily computed class
/// partition, which is computed at most once even under concurrent access.
class GroupTable {
public:
    GroupTable() = default;

    /// Validates the Latin-square, identity and inverse properties of
    /// `table` (row-major, order*order entries). Associativity is checked
    /// exhaustively only when `check_associativity` is set.
    GroupTable(std::size_t order, const std::vector<Element>& table, std::vector<std::string> labels,
               bool check_associativity);

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
    Element inv(Element a) const noexcept { return inverse_[a]; }
    /// g^-1 x g
    Element conj(Element x, Element g) const noexcept { return mul(mul(inv(g), x), g); }
    /// [a,b] = a^-1 b^-1 a b
    Element commutator(Element a, Element b) const noexcept {
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    Element power(Element a, long long k) const noexcept;
    std::size_t element_order(Element a) const noexcept;

    const std::string& label(Element e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Element> find_label(std::string_view label) const;

    bool is_abelian() const noexcept;

    Subset empty_subset() const { return Subset(order_); }
    Subset all() const { return Subset::full(order_); }
    Subset singleton(Element e) const { return Subset(order_, {e}); }
    Subset trivial() const { return singleton(identity_); }

    /// Cached conjugacy classes.
    const ClassPartition& classes() const;

private:
    struct Cache;

    std::size_t order_ = 0;
    Element identity_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<Element> inverse_;
    std::vector<std::string> labels_;
    std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Construction

/// Builds a group from an explicit table. Throws NotAGroup when any group
/// axiom fails (associativity only checked up to opts.associativity_check_bound).
GroupTable group_from_table(const std::vector<std::vector<long long>>& mult,
                            std::vector<std::string> labels = {}, const GroupOptions& opts = {});

using Permutation = std::vector<Element>;

/// Cycle notation, "()" for the identity.
std::string cycle_notation(const Permutation& p);

/// The permutation group generated by `generators`, closed breadth-first.
/// Element 0 is the identity; products compose left to right, (pq)(x) = q(p(x)).
GroupTable group_from_permutations(const std::vector<Permutation>& generators,
                                   const GroupOptions& opts = {});

/// Direct product A x B, element (a,b) stored at index a*|B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

struct CentralProductGroup {
    GroupTable group;
    Subset left;     ///< image of M
    Subset right;    ///< image of N
    Subset central;  ///< image of the identified subgroup Z
};

/// M x N modulo {(z, theta(z)^-1)}, where `pairing` lists every (z, theta(z)).
/// Throws NotCentral when the pairs do not lie in central subgroups and
/// NotIsomorphism when theta is not an isomorphism onto its image.
CentralProductGroup external_central_product(const GroupTable& m, const GroupTable& n,
                                             const std::vector<std::pair<Element, Element>>& pairing);

// ---------------------------------------------------------------------------
// Queries

ClassPartition conjugacy_classes(const GroupTable& g);

/// Classes of the elements of `domain` under conjugation by `acting` only.
/// Used to compute M-classes inside an ambient group without building M.
ClassPartition classes_under(const GroupTable& g, const Subset& domain, const Subset& acting);

Subset center(const GroupTable& g);

/// Smallest subgroup containing `s`. Throws EmptyGeneratingSet.
Subset generated_subgroup(const GroupTable& g, const Subset& s);

/// { a^-1 b^-1 a b : a in A, b in B } as a set. Throws EmptySet.
Subset commutator_set(const GroupTable& g, const Subset& a, const Subset& b);

bool is_normal_subset(const GroupTable& g, const Subset& s);
bool is_subgroup(const GroupTable& g, const Subset& s);
bool is_normal_subgroup(const GroupTable& g, const Subset& s);
bool is_central(const GroupTable& g, const Subset& s);
bool is_perfect(const GroupTable& g);

struct SetProduct {
    Subset product;
    std::vector<std::uint32_t> multiplicity;  ///< indexed by element
};

SetProduct set_product(const GroupTable& g, const Subset& a, const Subset& b);

/// Plain product set AB without multiplicities.
Subset product_set(const GroupTable& g, const Subset& a, const Subset& b);
Subset inverse_set(const GroupTable& g, const Subset& s);
/// gS
Subset left_translate(const GroupTable& g, Element x, const Subset& s);

struct QuotientGroup {
    GroupTable group;
    std::vector<Element> coset_of;  ///< element of G -> element of G/K
};

/// G/K with cosets ordered by minimal member. Throws NotNormalSubgroup.
QuotientGroup quotient_group(const GroupTable& g, const Subset& k);

/// A subgroup re-wrapped as a group of its own, with the embedding.
struct EmbeddedGroup {
    GroupTable group;
    std::vector<Element> to_ambient;
    std::vector<std::optional<Element>> from_ambient;

    Subset embed(const Subset& local) const;
    /// Throws ContainmentViolated when `ambient` leaves the subgroup.
    Subset restrict(const Subset& ambient) const;
};

/// Throws NotSubgroup.
EmbeddedGroup subgroup_table(const GroupTable& g, const Subset& h);

/// All subgroups of an abelian group, sorted by (order, members).
std::vector<Subset> abelian_subgroups(const GroupTable& g, const Subset& within);

/// All normal subgroups, found by closing unions of classes; sorted by (order, members).
std::vector<Subset> normal_subgroups(const GroupTable& g);

}  // namespace setdirect
