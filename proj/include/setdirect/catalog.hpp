#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "setdirect/group.hpp"

namespace setdirect {

/// A group together with subsets that have a name in its construction,
/// e.g. "left"/"right" for the two factors of a product.
struct NamedGroup {
    std::string name;
    GroupTable group;
    std::map<std::string, Subset> named;
};

// Builders. Labels follow the usual presentations: C_n uses z^k, D_2n uses
// r^i s^j written "r2s", quaternion groups use a^i b^j ("1,i,-1,-i,j,k,-j,-k"
// for Q8), abelian products use the supplied generator names.
GroupTable cyclic_group(std::size_t n);
GroupTable dihedral_group(std::size_t order);
GroupTable dicyclic_group(std::size_t order);
GroupTable symmetric_group(std::size_t degree);
GroupTable alternating_group(std::size_t degree);
GroupTable psl_2_7();
/// prod C_{orders[i]} with generators named `names[i]`; the first factor varies fastest.
GroupTable abelian_group(const std::vector<std::size_t>& orders, const std::vector<std::string>& names);

/// Resolves a catalog name, case-insensitively: "C12", "D10", "Q8", "Q16",
/// "S4", "A5", "A6", "PSL27", products "C3xC3xC2", "C2xS3", and central
/// products over a central involution "Q8oC4". Throws ParseError.
NamedGroup catalog_group(std::string_view name);

/// The fixed list of catalog entries of order at most `max_order`, ordered by
/// (order, name). Isomorphic duplicates of small groups are not repeated.
std::vector<std::string> catalog_names(std::size_t max_order);

}  // namespace setdirect
