#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setdirect/factorization.hpp"
#include "setdirect/group.hpp"

namespace setdirect {

struct EnumerationOptions {
    bool normalized_only = false;
    bool nontrivial_only = false;
    /// Search only normalized pairs and recover the rest by central shifts.
    /// Disable to run the plain search over all unions of classes.
    bool prune = true;
    double time_budget_secs = 60.0;
    /// Upper bound on the number of candidate smaller factors.
    std::uint64_t max_candidates = std::uint64_t{1} << 26;
};

struct EnumerationResult {
    std::string group_id;
    /// Unordered pairs, stored with the smaller side (by size, then members)
    /// as x, sorted. Filtered by the normalized/nontrivial options.
    std::vector<SetDirectFactorization> factorizations;
    std::size_t total = 0;         ///< all unordered pairs
    std::size_t nontrivial = 0;    ///< neither side a single element
    std::size_t normalized = 0;    ///< identity in both sides
    std::size_t shift_orbits = 0;  ///< orbits of Z(G) x Z(G) acting by (z1 X, z2 Y)
    std::size_t candidates = 0;    ///< smaller factors examined
    double elapsed_secs = 0.0;
};

/// Every unordered pair {X, Y} of normal subsets with G = X x Y, found by an
/// exact-cover search over unions of conjugacy classes using nothing but the
/// definition. Throws SearchSpaceTooLarge, TimeBudgetExceeded.
EnumerationResult enumerate_setdirect(const GroupTable& g, const EnumerationOptions& opts = {},
                                      std::string group_id = {});

/// Same search for an abelian group, where every subset is normal.
/// Throws NotAbelian, SearchSpaceTooLarge (order above 64 or too many candidates).
EnumerationResult enumerate_abelian_factorizations(const GroupTable& z, const EnumerationOptions& opts = {},
                                                   std::string group_id = {});

/// A normal subset of N meeting every coset of the central subgroup Z in
/// exactly one element, found by search, or nothing.
std::optional<Subset> search_normal_transversal(const GroupTable& g, const Subset& n, const Subset& z);

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string witness;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t random_samples = 200;
    EnumerationOptions enumeration;
};

struct SuiteReport {
    std::string group_id;
    std::size_t factorizations = 0;  ///< all unordered pairs; the checks run on the normalized ones
    std::vector<PropertyResult> properties;
    bool unique_nonabelian_minimal_normal = false;
    /// A direct product of two nontrivial classes (class indices), if any.
    std::optional<std::pair<std::size_t, std::size_t>> direct_class_pair;

    bool passed() const noexcept {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

/// Runs the cross-checks over normalized oracle factorizations and random class unions.
/// Throws SearchSpaceTooLarge, TimeBudgetExceeded from the enumeration.
SuiteReport property_suite(const GroupTable& g, const SuiteOptions& opts = {}, std::string group_id = {});

/// Uniformly random union of classes (each class kept with probability 1/2).
/// Nonempty unless the group is empty.
template <class Rng>
Subset random_class_union(const GroupTable& g, Rng& rng) {
    const auto& cls = g.classes();
    for (;;) {
        Subset s(g.order());
        for (const auto& c : cls.classes)
            if (rng() & 1u) s |= c;
        if (!s.empty()) return s;
    }
}

}  // namespace setdirect
