#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "setdirect/group.hpp"

namespace setdirect {

/// A certified central product G = M o_Z N: M and N are normal subgroups
/// centralizing each other, MN = G and Z = M n N is central.
struct CentralDecomposition {
    Subset m;
    Subset n;
    Subset z;
};

enum class CentralProductFailure { NotSubgroup, NotNormal, ProductNotG, NotCentralizing, IntersectionNotCentral };

std::string_view to_string(CentralProductFailure f) noexcept;

struct CentralProductCheck {
    std::optional<CentralDecomposition> decomposition;
    std::optional<CentralProductFailure> failure;

    explicit operator bool() const noexcept { return decomposition.has_value(); }
};

CentralProductCheck is_central_product(const GroupTable& g, const Subset& m, const Subset& n);

/// Every unordered pair of normal subgroups forming a central product,
/// oriented with |M| >= |N|. Throws OrderLimitExceeded above `max_order`.
std::vector<CentralDecomposition> enumerate_central_decompositions(const GroupTable& g, std::size_t max_order = 512);

struct ZOrbit {
    std::vector<std::size_t> classes;  ///< class indices of G, increasing
    Subset stabilizer;                 ///< subgroup of Z fixing each class of the orbit
};

/// The multiplication action D -> zD of a central subgroup on the classes inside a normal subset.
struct ZActionData {
    Subset ambient;
    Subset acting;
    std::vector<ZOrbit> orbits;  ///< ordered by smallest class index
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_of_class;  ///< npos for classes outside `ambient`

    bool semi_regular() const noexcept {
        for (const auto& o : orbits)
            if (o.stabilizer.size() != 1) return false;
        return true;
    }
};

/// Orbits of Z on the classes of G contained in `ambient`. The ambient set
/// must be normal and closed under multiplication by Z; when it is a
/// subgroup, Z must lie inside it. Throws NotNormal, NotCentral, NotSubgroup,
/// PreconditionViolated.
ZActionData z_orbits(const GroupTable& g, const Subset& ambient, const Subset& z);

/// Stabilizer of the class of `x` under multiplication by Z, computed as
/// {z : xz in x^G} and cross-checked against [x,G] n Z.
Subset class_stabilizer(const GroupTable& g, Element x, const Subset& z);

struct ZBracket {
    Subset set;        ///< [K,K] n Z
    Subset generated;  ///< <[K,K] n Z>
    /// The set equals the union of orbit stabilizers on the classes inside K.
    /// Only checked when Z <= K and K C_G(K) = G, where the identity applies.
    bool union_identity_checked = false;
};

ZBracket z_bracket(const GroupTable& g, const Subset& k, const Subset& z);

/// Central elements z != 1 with zC != C for every class C.
Subset semi_regular_elements(const GroupTable& g);

struct ClassCountReport {
    std::size_t k_g = 0;
    std::size_t k_z = 0;
    std::size_t k_g_mod_z = 0;
    std::size_t orbit_count = 0;
    bool semiregular = false;
};

/// k(G), k(Z), k(G/Z) from an explicitly built quotient, and the orbit count
/// of Z on the classes of G. Asserts orbit_count == k(G/Z) and
/// semiregular <=> k(G) == k(Z) k(G/Z).
ClassCountReport class_count_report(const GroupTable& g, const Subset& z);

/// Checks of the class structure of a central product G = M o_Z N.
struct CentralProductStructure {
    bool mutually_centralizing = false;
    bool m_classes_coincide = false;   ///< G-classes inside M equal the M-classes
    bool n_classes_coincide = false;
    bool classes_factor = false;       ///< every class C equals C_M C_N
    bool stabilizers_multiply = false; ///< Z_C = Z_{C_M} Z_{C_N}
    bool orbit_bijection = false;      ///< O(G) -> O(M) x O(N) is a bijection
    std::size_t orbits_g = 0;
    std::size_t orbits_m = 0;
    std::size_t orbits_n = 0;

    bool all() const noexcept {
        return mutually_centralizing && m_classes_coincide && n_classes_coincide && classes_factor &&
               stabilizers_multiply && orbit_bijection;
    }
};

CentralProductStructure verify_central_product_structure(const GroupTable& g, const CentralDecomposition& cp);

}  // namespace setdirect
