#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "complex.hpp"
#include "errors.hpp"
#include "helpers.hpp"

using namespace ts;
using namespace ts::testhelp;

TEST_CASE("tate objects") {
    auto H = f2tau();
    TateComplex Z1 = tate_object(H, 0, 1);
    CHECK(Z1.size() == 1);
    CHECK(Z1.gen(0).bd == Bidegree{0, 1});
    CHECK(Z1.entries().empty());
    CHECK_THROWS_AS(tate_object(H, 0, -1), NonEffectiveTwist);
}

TEST_CASE("cone of the identity has a unit entry") {
    auto H = f2tau();
    ConeResult c = cone(identity_morphism(tate_object(H, 0, 0)));
    REQUIRE(c.cone.size() == 2);
    CHECK(c.cone.gen(0).bd == Bidegree{1, 0});
    CHECK(c.cone.gen(1).bd == Bidegree{0, 0});
    CHECK(c.cone.entry(1, 0) == H->one());
    CHECK(c.cone.entry(0, 1).is_zero());
    CHECK(validate_complex(c.cone).empty());
}

TEST_CASE("cone of multiplication by the twist class") {
    auto H = f2tau();
    TateComplex K = k_tau(H);
    REQUIRE(K.size() == 2);
    CHECK(K.gen(0).bd == Bidegree{1, 0});
    CHECK(K.gen(1).bd == Bidegree{0, 1});
    CHECK(K.entry(1, 0) == H->element("tau"));
    CHECK(validate_complex(K).empty());

    ConeResult c = cone(tau_map(H));
    CHECK(c.triangle.g.entry(1, 0) == H->one());  // inclusion of the target
    CHECK(c.triangle.h.entry(0, 0) == H->one());  // projection onto the shifted source
    CHECK(is_chain_map(c.triangle.g));
    CHECK(is_chain_map(c.triangle.h));
}

TEST_CASE("cone rejects non-chain-maps and wrong degrees") {
    auto H = f2tau();
    TateComplex A = cone(identity_morphism(tate_object(H, 0, 0))).cone;
    // the projector onto the shifted generator does not commute with the differential
    GradedMorphism bad(A, A, 0);
    bad.set_entry(0, 0, H->one());
    CHECK_THROWS_AS(cone(bad), NotChainMap);
    GradedMorphism wrong_degree(A, A, 1);
    CHECK_THROWS_AS(cone(wrong_degree), NotChainMap);
}

TEST_CASE("shift negates the differential and composes additively") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex K1 = shift(K, 1);
    CHECK(K1.gen(0).bd == Bidegree{2, 0});
    CHECK(K1.entry(1, 0) == -H3->element("tau"));
    CHECK(shift(K, -1).entry(1, 0) == -H3->element("tau"));
    CHECK(shift(shift(K, 1), 2).same_as(shift(K, 3)));
    CHECK(shift(shift(K, 1), -1).same_as(K));
    // morphism shift keeps entries
    GradedMorphism t = tau_map(H3);
    CHECK(shift(t, 1).entry(0, 0) == H3->element("tau"));
    CHECK(is_chain_map(shift(t, 1)));
}

TEST_CASE("twist moves weights and guards effectivity") {
    auto H = f2tau();
    TateComplex K = k_tau(H);
    TateComplex K2 = twist(K, 2);
    CHECK(K2.gen(0).bd == Bidegree{1, 2});
    CHECK(K2.gen(1).bd == Bidegree{0, 3});
    CHECK(K2.entry(1, 0) == H->element("tau"));
    CHECK(twist(K2, -2).same_as(K));
    CHECK_THROWS_AS(twist(K, -1), NonEffectiveTwist);
    CHECK(twist(tate_object(H, 0, 0), 1).same_as(tate_object(H, 0, 1)));
}

TEST_CASE("direct sum concatenates and uniquifies names") {
    auto H = f2tau();
    TateComplex Z = tate_object(H, 0, 0);
    TateComplex S = direct_sum(Z, Z);
    REQUIRE(S.size() == 2);
    CHECK(S.gen(0).name == "z");
    CHECK(S.gen(1).name == "z'");
    TateComplex S2 = direct_sum(S, k_tau(H));
    CHECK(validate_complex(S2).empty());
    CHECK(S2.entry(3, 2) == H->element("tau"));
}

TEST_CASE("tensor square of the tau cone") {
    auto H = f2tau();
    TateComplex K = k_tau(H);
    TateComplex T = tensor(K, K);
    REQUIRE(T.size() == 4);
    CHECK(T.gen(0).bd == Bidegree{2, 0});
    CHECK(T.gen(1).bd == Bidegree{1, 1});
    CHECK(T.gen(2).bd == Bidegree{1, 1});
    CHECK(T.gen(3).bd == Bidegree{0, 2});
    RingElement tau = H->element("tau");
    CHECK(T.entry(2, 0) == tau);  // delta (x) id
    CHECK(T.entry(1, 0) == tau);  // id (x) delta through an odd generator, sign invisible mod 2
    CHECK(T.entry(3, 1) == tau);
    CHECK(T.entry(3, 2) == tau);
    CHECK(validate_complex(T).empty());
}

TEST_CASE("tensor signs square to zero away from characteristic two") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex T = tensor(K, K);  // square-zero is asserted inside
    RingElement tau = H3->element("tau");
    CHECK(T.entry(2, 0) == tau);
    CHECK(T.entry(1, 0) == -tau);  // the left factor's odd generator flips id (x) delta
    CHECK(validate_complex(T).empty());

    auto HR = builtin_ring("f3-rho-tau");
    GradedMorphism rho(tate_object(HR, 0, 0), tate_object(HR, 1, 1), 0);
    rho.set_entry(0, 0, HR->element("rho"));
    TateComplex Kr = cone(rho).cone;
    GradedMorphism t(tate_object(HR, 0, 0), tate_object(HR, 0, 1), 0);
    t.set_entry(0, 0, HR->element("tau"));
    TateComplex mixed = tensor(Kr, cone(t).cone);
    CHECK(validate_complex(mixed).empty());
    CHECK(validate_complex(tensor(mixed, Kr)).empty());
}

TEST_CASE("tensor is associative and unital on the nose") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex Z1 = tate_object(H3, 0, 1);
    TateComplex A = tensor(tensor(K, shift(K, 1)), Z1);
    TateComplex B = tensor(K, tensor(shift(K, 1), Z1));
    CHECK(same_entries(A, B));
    TateComplex unit = tate_object(H3, 0, 0);
    CHECK(same_entries(tensor(unit, K), K));
    CHECK(same_entries(tensor(K, unit), K));
}

TEST_CASE("braiding is a chain map and an involution") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex L = shift(twist(K, 1), 1);
    GradedMorphism s = braiding(K, L);
    CHECK(is_chain_map(s));
    CHECK(compose(braiding(L, K), s) == identity_morphism(tensor(K, L)));
}

TEST_CASE("interchange maps between shifted tensors are chain maps") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex L = twist(cone(identity_morphism(tate_object(H3, 0, 1))).cone, 1);
    CHECK(is_chain_map(interchange_left(K, L)));
    CHECK(is_chain_map(interchange_right(K, L)));
}

TEST_CASE("morphism tensors respect composition") {
    auto H3 = f3tau();
    TateComplex K = k_tau(H3);
    TateComplex Z = tate_object(H3, 0, 0);
    GradedMorphism t = tau_map(H3);
    ConeResult c = cone(t);
    // (g . f) (x) id = (g (x) id) . (f (x) id) with a degree-0 and a degree-0 map
    GradedMorphism lhs = tensor_id(compose(c.triangle.g, t), K);
    GradedMorphism rhs = compose(tensor_id(c.triangle.g, K), tensor_id(t, K));
    CHECK(lhs == rhs);
    GradedMorphism lhs2 = id_tensor(K, compose(c.triangle.g, t));
    GradedMorphism rhs2 = compose(id_tensor(K, c.triangle.g), id_tensor(K, t));
    CHECK(lhs2 == rhs2);
    CHECK(is_chain_map(tensor_id(t, K)));
    CHECK(is_chain_map(id_tensor(K, t)));
    // mixed-degree composition: the projection out of a cone has degree 0,
    // but pair it with the degree-1 differential viewed as a morphism
    GradedMorphism d = differential_morphism(K);
    GradedMorphism a = compose(id_tensor(Z, d), id_tensor(Z, d));
    CHECK(a.is_zero());
}

TEST_CASE("base change along the weight augmentation kills the differential") {
    auto H = f2tau();
    auto unit = builtin_ring("unit-F2");
    RingMorphism aug{H, unit, {}};
    for (const auto& s : H->symbols())
        aug.images.insert_or_assign(s.name, s.name == H->unit_name() ? unit->one() : unit->zero(s.bd));
    CHECK(validate_ring_morphism(aug).empty());
    TateComplex K = k_tau(H);
    TateComplex B = base_change(aug, K);
    CHECK(B.size() == 2);
    CHECK(B.entries().empty());
    GradedMorphism idK = identity_morphism(K);
    GradedMorphism idB = base_change(aug, idK);
    CHECK(idB == identity_morphism(B));
}

TEST_CASE("random objects are deterministic, bounded, and valid") {
    auto H = f2tau();
    RandomParams params;
    params.max_generators = 4;
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull}) {
        TateComplex M = random_object(H, params, seed);
        CHECK(M.size() <= 4);
        CHECK(validate_complex(M).empty());
        CHECK(M.same_as(random_object(H, params, seed)));
    }
    CHECK(!random_object(H, params, 1).same_as(random_object(H, params, 2)));
    auto H3 = f3tau();
    for (std::uint64_t seed : {5ull, 6ull}) {
        TateComplex M = random_object(H3, params, seed);
        CHECK(validate_complex(M).empty());
    }
}

TEST_CASE("validators catch square and effectivity violations") {
    auto H = f2tau();
    RingElement tau = H->element("tau");
    TateComplex bad(H, {{"a", {2, 0}}, {"b", {1, 1}}, {"c", {0, 2}}});
    bad.set_entry(1, 0, tau);
    bad.set_entry(2, 1, tau);
    ValidationReport rep = validate_complex(bad);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].find("square") != std::string::npos);

    // set_entry itself rejects wrong shapes; zero values are always accepted
    TateComplex Z = tate_object(H, 0, 0);
    TateComplex W = tate_object(H, 0, 1);
    GradedMorphism f(Z, W, 0);
    CHECK_THROWS_AS(f.set_entry(0, 0, H->one()), ShapeMismatch);  // needs bidegree (0,1)
    GradedMorphism g(W, Z, 0);
    g.set_entry(0, 0, H->zero({0, -1}));
    CHECK(g.is_zero());
    CHECK_THROWS_AS(f.set_entry(1, 0, tau), ShapeMismatch);  // index out of range
}

TEST_CASE("ring mismatch is rejected across constructions") {
    auto H2 = f2tau();
    auto H3 = f3tau();
    CHECK_THROWS_AS(direct_sum(tate_object(H2, 0, 0), tate_object(H3, 0, 0)), RingMismatch);
    CHECK_THROWS_AS(tensor(tate_object(H2, 0, 0), tate_object(H3, 0, 0)), RingMismatch);
    CHECK_THROWS_AS(GradedMorphism(tate_object(H2, 0, 0), tate_object(H3, 0, 0), 0), RingMismatch);
}
