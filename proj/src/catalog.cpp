#include "setdirect/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace setdirect {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
    if (k == 0) return "1";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

std::optional<std::size_t> parse_size(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
    if (s.size() > 6) return std::nullopt;
    return static_cast<std::size_t>(std::stoul(s));
}

[[noreturn]] void unknown(std::string_view name, const std::string& why) {
    throw Error(ErrorCode::ParseError, "unknown catalog group '" + std::string(name) + "': " + why);
}

std::vector<Permutation> three_cycles(std::size_t degree) {
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < degree; ++k) {
        Permutation p(degree);
        std::iota(p.begin(), p.end(), Element{0});
        p[0] = 1;
        p[1] = static_cast<Element>(k);
        p[k] = 0;
        gens.push_back(p);
    }
    return gens;
}

GroupTable simple_group(const std::string& key) {
    if (key == "q8") return dicyclic_group(8);
    if (key == "q16") return dicyclic_group(16);
    if (key == "psl27" || key == "psl(2,7)") return psl_2_7();
    const char head = key.empty() ? '\0' : key[0];
    const auto n = parse_size(key.substr(1));
    if (!n) unknown(key, "expected a letter followed by a number");
    switch (head) {
        case 'c':
            if (*n < 1 || *n > 64) unknown(key, "cyclic groups need 1 <= n <= 64");
            return cyclic_group(*n);
        case 'd':
            if (*n < 4 || *n % 2 != 0 || *n > 40) unknown(key, "dihedral groups need even order 4..40");
            return dihedral_group(*n);
        case 's':
            if (*n < 1 || *n > 5) unknown(key, "symmetric groups need degree <= 5");
            return symmetric_group(*n);
        case 'a':
            if (*n < 1 || *n > 6) unknown(key, "alternating groups need degree <= 6");
            return alternating_group(*n);
        default: unknown(key, "unrecognised family");
    }
}

std::optional<Element> central_involution(const GroupTable& g) {
    const Subset z = center(g);
    for (Element x : z.elements())
        if (g.element_order(x) == 2) return x;
    return std::nullopt;
}

NamedGroup central_product_of(const std::string& name, const std::vector<std::string>& parts) {
    NamedGroup acc{parts[0], simple_group(parts[0]), {}};
    for (std::size_t i = 1; i < parts.size(); ++i) {
        GroupTable rhs = simple_group(parts[i]);
        const auto a = central_involution(acc.group);
        const auto b = central_involution(rhs);
        if (!a || !b) unknown(name, "central product factors need a central involution");
        auto cp = external_central_product(acc.group, rhs, {{acc.group.identity(), rhs.identity()}, {*a, *b}});
        acc = NamedGroup{name, std::move(cp.group), {{"left", cp.left}, {"right", cp.right}, {"central", cp.central}}};
    }
    return acc;
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
    std::vector<Element> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(power_label("z", i));
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
    }
    return GroupTable(n, table, std::move(labels), false);
}

GroupTable dihedral_group(std::size_t order) {
    const std::size_t n = order / 2;
    std::vector<Element> table(order * order);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x % n, b = x / n;
        std::string r = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
        labels.push_back(b == 0 ? (r.empty() ? "1" : r) : r + "s");
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t c = y % n, d = y / n;
            // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
            const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
            table[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
        }
    }
    return GroupTable(order, table, std::move(labels), false);
}

GroupTable dicyclic_group(std::size_t order) {
    // a^i b^j with a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1
    const std::size_t two_m = order / 2, m = two_m / 2;
    std::vector<Element> table(order * order);
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t i = x % two_m, j = x / two_m;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t k = y % two_m, l = y / two_m;
            std::size_t e = j == 0 ? i + k : i + two_m - k;
            std::size_t t = j + l;
            if (t == 2) {
                e += m;
                t = 0;
            }
            table[x * order + y] = static_cast<Element>(e % two_m + two_m * t);
        }
    }
    std::vector<std::string> labels;
    if (order == 8) {
        labels = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
    } else {
        for (std::size_t x = 0; x < order; ++x) {
            const std::size_t i = x % two_m, j = x / two_m;
            std::string a = i == 0 ? "" : (i == 1 ? "a" : "a" + std::to_string(i));
            labels.push_back(j == 0 ? (a.empty() ? "1" : a) : a + "b");
        }
    }
    return GroupTable(order, table, std::move(labels), false);
}

GroupTable symmetric_group(std::size_t degree) {
    if (degree <= 1) return group_from_permutations({});
    Permutation swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), Element{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Element>((i + 1) % degree);
    return group_from_permutations({swap, cycle});
}

GroupTable alternating_group(std::size_t degree) {
    if (degree <= 2) return group_from_permutations({});
    return group_from_permutations(three_cycles(degree));
}

GroupTable psl_2_7() {
    // Action on the projective line over F_7, infinity = 7: x -> x+1 and x -> -1/x.
    return group_from_permutations({{1, 2, 3, 4, 5, 6, 0, 7}, {7, 6, 3, 2, 5, 4, 1, 0}});
}

GroupTable abelian_group(const std::vector<std::size_t>& orders, const std::vector<std::string>& names) {
    if (orders.size() != names.size()) throw std::invalid_argument("abelian_group: one name per factor");
    const std::size_t n = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> d;
        for (std::size_t o : orders) {
            d.push_back(x % o);
            x /= o;
        }
        return d;
    };
    auto index = [&](const std::vector<std::size_t>& d) {
        std::size_t x = 0, stride = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            x += d[i] * stride;
            stride *= orders[i];
        }
        return x;
    };
    std::vector<Element> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        const auto dx = digits(x);
        std::string label;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            if (dx[i] == 0) continue;
            if (!label.empty()) label += "*";
            label += power_label(names[i], dx[i]);
        }
        labels.push_back(label.empty() ? "1" : label);
        for (std::size_t y = 0; y < n; ++y) {
            const auto dy = digits(y);
            std::vector<std::size_t> s(orders.size());
            for (std::size_t i = 0; i < orders.size(); ++i) s[i] = (dx[i] + dy[i]) % orders[i];
            table[x * n + y] = static_cast<Element>(index(s));
        }
    }
    return GroupTable(n, table, std::move(labels), false);
}

NamedGroup catalog_group(std::string_view name) {
    const std::string key = lower(name);
    if (key.empty()) unknown(name, "empty name");

    // The abelian groups from the quasi-simple analysis keep their generator names.
    if (key == "c3xc3xc2") return {std::string(name), abelian_group({3, 3, 2}, {"g1", "g2", "g3"}), {}};
    if (key == "c3xc2xc2") return {std::string(name), abelian_group({3, 2, 2}, {"g1", "g2", "g3"}), {}};
    if (key == "c3xc3xc4") return {std::string(name), abelian_group({3, 3, 4}, {"g1", "g2", "g4"}), {}};

    const auto factors = split(key, 'x');
    if (factors.size() > 1) {
        const bool all_cyclic = std::all_of(factors.begin(), factors.end(), [](const std::string& f) {
            return f.size() > 1 && f[0] == 'c' && f.find('o') == std::string::npos && parse_size(f.substr(1));
        });
        if (all_cyclic) {
            std::vector<std::size_t> orders;
            std::vector<std::string> names;
            std::size_t total = 1;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                orders.push_back(*parse_size(factors[i].substr(1)));
                if (orders.back() == 0) unknown(name, "zero order factor");
                names.push_back("g" + std::to_string(i + 1));
                total *= orders.back();
            }
            if (total > kMaxStorableOrder) unknown(name, "product too large");
            return {std::string(name), abelian_group(orders, names), {}};
        }
        NamedGroup acc = catalog_group(factors[0]);
        Subset left_image;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            NamedGroup rhs = catalog_group(factors[i]);
            if (acc.group.order() * rhs.group.order() > kMaxStorableOrder) unknown(name, "product too large");
            GroupTable prod = direct_product(acc.group, rhs.group);
            const std::size_t nb = rhs.group.order();
            Subset left(prod.order()), right(prod.order());
            for (Element a = 0; a < acc.group.order(); ++a) left.insert(static_cast<Element>(a * nb + rhs.group.identity()));
            for (Element b = 0; b < nb; ++b) right.insert(static_cast<Element>(acc.group.identity() * nb + b));
            acc = NamedGroup{std::string(name), std::move(prod), {{"left", left}, {"right", right}}};
        }
        return acc;
    }

    const auto central_parts = split(key, 'o');
    if (central_parts.size() > 1) return central_product_of(std::string(name), central_parts);

    return {std::string(name), simple_group(key), {}};
}

namespace {

std::vector<std::pair<std::size_t, std::string>> build_catalog_index() {
    std::vector<std::string> names;
    for (std::size_t n = 1; n <= 64; ++n) names.push_back("C" + std::to_string(n));
    for (std::size_t n = 3; n <= 20; ++n) names.push_back("D" + std::to_string(2 * n));
    for (const char* extra :
         {"Q8", "Q16", "S3", "S4", "S5", "A4", "A5", "A6", "PSL27", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6",
          "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "C3xC6", "C2xC10", "C2xC12", "C2xC2xC6", "C3xC2xC2",
          "C3xC3xC2", "C3xC3xC4", "C2xC14", "C2xC16", "C4xC8", "C2xC4xC4", "C2xC2xC8", "C5xC5", "C6xC6", "C2xS3",
          "C3xS3", "C4xS3", "S3xS3", "C2xD8", "C2xQ8", "C3xQ8", "C2xA4", "C2xD10", "D8oC4", "Q8oC4", "Q8oQ8",
          "D8oD8"}) {
        names.emplace_back(extra);
    }
    std::vector<std::pair<std::size_t, std::string>> sized;
    for (auto& nm : names) sized.emplace_back(catalog_group(nm).group.order(), nm);
    std::stable_sort(sized.begin(), sized.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return sized;
}

}  // namespace

std::vector<std::string> catalog_names(std::size_t max_order) {
    static const auto index = build_catalog_index();
    std::vector<std::string> out;
    for (const auto& [order, nm] : index)
        if (order <= max_order) out.push_back(nm);
    return out;
}

}  // namespace setdirect
