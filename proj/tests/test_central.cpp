#include <gtest/gtest.h>

#include "setdirect/catalog.hpp"
#include "setdirect/central.hpp"
#include "support/brute.hpp"

using namespace setdirect;

namespace {

bool contains_pair(const std::vector<CentralDecomposition>& list, const Subset& m, const Subset& n) {
    for (const auto& d : list)
        if ((d.m == m && d.n == n) || (d.m == n && d.n == m)) return true;
    return false;
}

}  // namespace

TEST(IsCentralProduct, KleinFourIsDirect) {
    const auto v = catalog_group("C2xC2").group;
    const Subset a = brute::labels(v, {"1", "g1"});
    const Subset b = brute::labels(v, {"1", "g2"});
    auto r = is_central_product(v, a, b);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.decomposition->z, v.trivial());
}

TEST(IsCentralProduct, ExternalProductImages) {
    const auto d8 = dihedral_group(8);
    const auto c4 = cyclic_group(4);
    auto ext = external_central_product(d8, c4, {{0, 0}, {*d8.find_label("r2"), *c4.find_label("z^2")}});
    auto r = is_central_product(ext.group, ext.left, ext.right);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.decomposition->z.size(), 2u);
    EXPECT_EQ(r.decomposition->z, ext.central);
}

TEST(IsCentralProduct, Failures) {
    const auto s3 = symmetric_group(3);
    const Subset a3 = normal_subgroups(s3)[1];
    auto r = is_central_product(s3, a3, s3.all());
    EXPECT_FALSE(r);
    EXPECT_EQ(*r.failure, CentralProductFailure::IntersectionNotCentral);

    const auto s4 = symmetric_group(4);
    const auto ns = normal_subgroups(s4);
    EXPECT_EQ(*is_central_product(s4, ns[1], ns[2]).failure, CentralProductFailure::ProductNotG);

    const Subset t = generated_subgroup(s3, s3.singleton(*s3.find_label("(0 1)")));
    EXPECT_EQ(*is_central_product(s3, t, a3).failure, CentralProductFailure::NotNormal);
    EXPECT_EQ(*is_central_product(s3, s3.classes().classes[1], a3).failure, CentralProductFailure::NotSubgroup);

    // <i> and <j> in Q8: normal, product is Q8, intersection {1,-1} central,
    // but i and j do not commute.
    const auto q8 = dicyclic_group(8);
    const Subset i = generated_subgroup(q8, brute::labels(q8, {"i"}));
    const Subset j = generated_subgroup(q8, brute::labels(q8, {"j"}));
    EXPECT_EQ(*is_central_product(q8, i, j).failure, CentralProductFailure::NotCentralizing);
}

TEST(IsCentralProduct, WholeGroupWithItself) {
    const auto s3 = symmetric_group(3);
    EXPECT_EQ(*is_central_product(s3, s3.all(), s3.all()).failure, CentralProductFailure::IntersectionNotCentral);
    const auto c6 = cyclic_group(6);
    auto r = is_central_product(c6, c6.all(), c6.all());
    ASSERT_TRUE(r);
    EXPECT_EQ(r.decomposition->z, c6.all());
}

TEST(EnumerateCentral, S3) {
    const auto s3 = symmetric_group(3);
    auto list = enumerate_central_decompositions(s3);
    ASSERT_EQ(list.size(), 1u);
    EXPECT_EQ(list[0].m, s3.all());
    EXPECT_EQ(list[0].n, s3.trivial());
}

TEST(EnumerateCentral, Q8IncludesCentre) {
    const auto q8 = dicyclic_group(8);
    auto list = enumerate_central_decompositions(q8);
    EXPECT_TRUE(contains_pair(list, q8.all(), center(q8)));
    for (const auto& d : list) EXPECT_TRUE(is_central_product(q8, d.m, d.n));
}

TEST(EnumerateCentral, AbelianHasEveryCoveringPair) {
    const auto g = catalog_group("C2xC4").group;
    const auto subs = abelian_subgroups(g, g.all());
    auto list = enumerate_central_decompositions(g);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i; j < subs.size(); ++j)
            if (product_set(g, subs[i], subs[j]).size() == g.order()) {
                ++expected;
                EXPECT_TRUE(contains_pair(list, subs[i], subs[j]));
            }
    EXPECT_EQ(list.size(), expected);
}

TEST(EnumerateCentral, AlwaysContainsGWithEachCentralSubgroup) {
    for (const char* name : {"D8", "Q16", "C2xQ8", "Q8oC4", "C3xS3"}) {
        const auto g = catalog_group(name).group;
        auto list = enumerate_central_decompositions(g);
        for (const auto& z : abelian_subgroups(g, center(g))) EXPECT_TRUE(contains_pair(list, g.all(), z)) << name;
    }
}

TEST(EnumerateCentral, OrderBound) {
    const auto g = catalog_group("A6").group;
    EXPECT_THROW(enumerate_central_decompositions(g, 100), Error);
}

TEST(ZOrbits, Examples) {
    const auto q8 = dicyclic_group(8);
    auto trivial = z_orbits(q8, q8.all(), q8.trivial());
    EXPECT_EQ(trivial.orbits.size(), q8.classes().count());
    for (const auto& o : trivial.orbits) EXPECT_EQ(o.stabilizer.size(), 1u);

    auto data = z_orbits(q8, q8.all(), center(q8));
    const std::size_t ci = q8.classes().class_of[*q8.find_label("i")];
    const auto& orbit = data.orbits[data.orbit_of_class[ci]];
    EXPECT_EQ(orbit.classes.size(), 1u);
    EXPECT_EQ(orbit.stabilizer, center(q8));
    EXPECT_EQ(data.orbits.size(), 4u);

    const auto c4 = cyclic_group(4);
    auto cyc = z_orbits(c4, c4.all(), c4.all());
    ASSERT_EQ(cyc.orbits.size(), 1u);
    EXPECT_EQ(cyc.orbits[0].classes.size(), 4u);
    EXPECT_EQ(cyc.orbits[0].stabilizer, c4.trivial());
}

TEST(ZOrbits, Errors) {
    const auto s3 = symmetric_group(3);
    const auto q8 = dicyclic_group(8);
    EXPECT_THROW(z_orbits(s3, s3.singleton(*s3.find_label("(0 1)")), s3.trivial()), Error);
    try {
        z_orbits(q8, q8.all(), generated_subgroup(q8, brute::labels(q8, {"i"})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCentral);
    }
    try {
        z_orbits(q8, q8.trivial(), center(q8));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
    }
}

TEST(ZOrbits, NormalSubsetAmbient) {
    // The set of elements of order 4 in C8 is normal and closed under <z^4>.
    const auto c8 = cyclic_group(8);
    const Subset ambient = brute::labels(c8, {"z^2", "z^6"});
    auto data = z_orbits(c8, ambient, brute::labels(c8, {"1", "z^4"}));
    ASSERT_EQ(data.orbits.size(), 1u);
    EXPECT_EQ(data.orbits[0].classes.size(), 2u);
}

TEST(ClassStabilizer, Examples) {
    const auto q8 = dicyclic_group(8);
    EXPECT_EQ(class_stabilizer(q8, q8.identity(), center(q8)), q8.trivial());
    EXPECT_EQ(class_stabilizer(q8, *q8.find_label("i"), center(q8)), center(q8));
    const auto c6 = cyclic_group(6);
    for (Element e = 0; e < 6; ++e) EXPECT_EQ(class_stabilizer(c6, e, c6.all()), c6.trivial());
    const auto s3 = symmetric_group(3);
    EXPECT_THROW(class_stabilizer(s3, 0, s3.all()), Error);
}

TEST(ClassStabilizer, AgreesWithBruteForceEverywhere) {
    for (const auto& name : catalog_names(64)) {
        const auto g = catalog_group(name).group;
        const Subset zg = center(g);
        const auto classes = brute::classes(g);
        for (Element x = 0; x < g.order(); ++x) {
            brute::ElementSet expected;
            const brute::ElementSet* cls = nullptr;
            for (const auto& c : classes)
                if (c.count(x)) cls = &c;
            zg.for_each([&](Element z) {
                if (cls->count(g.mul(x, z))) expected.insert(z);
            });
            EXPECT_EQ(brute::to_set(class_stabilizer(g, x, zg)), expected) << name << " " << g.label(x);
        }
    }
}

TEST(ZBracket, Examples) {
    const auto v = catalog_group("C2xC2").group;
    auto ab = z_bracket(v, v.all(), v.all());
    EXPECT_EQ(ab.set, v.trivial());
    EXPECT_EQ(ab.generated, v.trivial());

    const auto q8 = dicyclic_group(8);
    auto q = z_bracket(q8, q8.all(), center(q8));
    EXPECT_EQ(q.set, center(q8));
    EXPECT_EQ(q.generated, center(q8));
    EXPECT_TRUE(q.union_identity_checked);

    const auto d10 = dihedral_group(10);
    auto d = z_bracket(d10, d10.all(), d10.trivial());
    EXPECT_EQ(d.set, d10.trivial());
    EXPECT_EQ(d.generated, d10.trivial());
}

TEST(ZBracket, UnionOfStabilizersOnCentralProductFactors) {
    for (const char* name : {"Q8oC4", "D8oC4", "Q8oQ8", "C2xQ8", "C3xQ8", "C4xS3"}) {
        const auto g = catalog_group(name).group;
        for (const auto& d : enumerate_central_decompositions(g)) {
            EXPECT_TRUE(z_bracket(g, d.m, d.z).union_identity_checked) << name;
            EXPECT_TRUE(z_bracket(g, d.n, d.z).union_identity_checked) << name;
        }
    }
}

TEST(SemiRegular, Examples) {
    const auto c5 = cyclic_group(5);
    EXPECT_EQ(semi_regular_elements(c5), c5.all() - c5.trivial());
    const auto q8 = dicyclic_group(8);
    EXPECT_TRUE(semi_regular_elements(q8).empty());
    const auto c4 = cyclic_group(4);
    EXPECT_EQ(semi_regular_elements(c4), c4.all() - c4.trivial());
}

TEST(SemiRegular, MatchesDefinition) {
    for (const auto& name : catalog_names(64)) {
        const auto g = catalog_group(name).group;
        const auto classes = brute::classes(g);
        brute::ElementSet expected;
        for (Element z : brute::center(g)) {
            if (z == g.identity()) continue;
            bool moves_all = true;
            for (const auto& c : classes) {
                brute::ElementSet shifted;
                for (Element x : c) shifted.insert(g.mul(z, x));
                moves_all = moves_all && shifted != c;
            }
            if (moves_all) expected.insert(z);
        }
        EXPECT_EQ(brute::to_set(semi_regular_elements(g)), expected) << name;
    }
}

TEST(ClassCounts, Examples) {
    const auto q8 = dicyclic_group(8);
    auto r = class_count_report(q8, center(q8));
    EXPECT_EQ(r.k_g, 5u);
    EXPECT_EQ(r.k_z, 2u);
    EXPECT_EQ(r.k_g_mod_z, 4u);
    EXPECT_EQ(r.orbit_count, 4u);
    EXPECT_FALSE(r.semiregular);

    const auto c4 = cyclic_group(4);
    auto c = class_count_report(c4, brute::labels(c4, {"1", "z^2"}));
    EXPECT_EQ(c.k_g, 4u);
    EXPECT_EQ(c.k_z, 2u);
    EXPECT_EQ(c.k_g_mod_z, 2u);
    EXPECT_EQ(c.orbit_count, 2u);
    EXPECT_TRUE(c.semiregular);

    const auto s4 = symmetric_group(4);
    auto t = class_count_report(s4, s4.trivial());
    EXPECT_EQ(t.k_g, t.k_g_mod_z);
    EXPECT_EQ(t.k_g, t.orbit_count);
    EXPECT_TRUE(t.semiregular);

    EXPECT_THROW(class_count_report(s4, normal_subgroups(s4)[1]), Error);
}

TEST(ClassCounts, AllCentralSubgroups) {
    for (const auto& name : catalog_names(64)) {
        const auto g = catalog_group(name).group;
        for (const auto& z : abelian_subgroups(g, center(g))) {
            auto r = class_count_report(g, z);  // asserts both identities internally
            EXPECT_EQ(r.k_z, z.size());
            EXPECT_EQ(r.orbit_count, r.k_g_mod_z);
        }
    }
}

TEST(CentralProductStructure, EveryDecompositionUpTo64) {
    for (const auto& name : catalog_names(64)) {
        const auto g = catalog_group(name).group;
        if (g.order() > 32 && g.is_abelian()) continue;  // many pairs, nothing new
        for (const auto& d : enumerate_central_decompositions(g)) {
            auto s = verify_central_product_structure(g, d);
            EXPECT_TRUE(s.all()) << name << " |M|=" << d.m.size() << " |N|=" << d.n.size();
            EXPECT_EQ(s.orbits_g, s.orbits_m * s.orbits_n);
        }
    }
}
