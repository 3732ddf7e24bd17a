#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builtin_rings.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "helpers.hpp"
#include "homalg.hpp"
#include "matrix.hpp"
#include "slice.hpp"

using namespace ts;
using namespace ts::testhelp;

TEST_CASE("weight truncations carve out a subcomplex and a quotient") {
    for (const auto& R : {f2tau(), f3tau()}) {
        TateComplex K = k_tau(R);

        TateComplex hi = pi_ge(K, 1);
        REQUIRE(hi.size() == 1);
        CHECK(hi.gen(0).bd == Bidegree{0, 1});
        TateComplex lo = pi_lt(K, 1);
        REQUIRE(lo.size() == 1);
        CHECK(lo.gen(0).bd == Bidegree{1, 0});

        CHECK(pi_ge(K, 0).same_as(K));
        CHECK(pi_lt(K, 0).size() == 0);
        CHECK(pi_ge(K, 2).size() == 0);
        CHECK(pi_lt(K, 2).same_as(K));

        CHECK(pi_ge(pi_ge(K, 1), 1).same_as(pi_ge(K, 1)));
        CHECK(pi_lt(pi_lt(K, 1), 1).same_as(pi_lt(K, 1)));
        CHECK(pi_lt(pi_ge(K, 1), 1).size() == 0);
        CHECK(pi_ge(pi_lt(K, 1), 1).size() == 0);

        REQUIRE(slice(K, 0).size() == 1);
        CHECK(slice(K, 0).gen(0).bd == Bidegree{1, 0});
        REQUIRE(slice(K, 1).size() == 1);
        CHECK(slice(K, 1).gen(0).bd == Bidegree{0, 1});
    }
}

TEST_CASE("the weight triangle negates the mixed differential block") {
    auto R3 = f3tau();
    TateComplex K = k_tau(R3);
    Triangle st = slice_triangle(K, 1);
    REQUIRE(st.X.size() == 1);
    REQUIRE(st.Z.size() == 1);
    CHECK(st.f.entry(1, 0) == R3->one());
    CHECK(st.g.entry(0, 0) == R3->one());
    CHECK(st.h.entry(0, 0) == -R3->element("tau"));
    CHECK(is_distinguished(st));

    auto R2 = f2tau();
    TateComplex K2 = k_tau(R2);
    CHECK(slice_triangle(K2, 1).h.entry(0, 0) == R2->element("tau"));
    CHECK(is_distinguished(slice_triangle(K2, 1)));

    TateComplex KK = tensor(K2, K2);
    CHECK(is_distinguished(slice_triangle(KK, 1)));
    CHECK(is_distinguished(slice_triangle(KK, 2)));
}

TEST_CASE("slices split an object into pure weights") {
    auto R = f2tau();
    TateComplex K = k_tau(R);

    auto sl = slices(K);
    REQUIRE(sl.size() == 2);
    CHECK(sl[0].first == 0);
    REQUIRE(sl[0].second.size() == 1);
    CHECK(sl[0].second.gen(0).bd == Bidegree{1, 0});
    CHECK(sl[1].first == 1);
    REQUIRE(sl[1].second.size() == 1);
    CHECK(sl[1].second.gen(0).bd == Bidegree{0, 1});

    auto slKK = slices(tensor(K, K));
    REQUIRE(slKK.size() == 3);
    CHECK(slKK[0].first == 0);
    REQUIRE(slKK[0].second.size() == 1);
    CHECK(slKK[0].second.gen(0).bd == Bidegree{2, 0});
    CHECK(slKK[1].first == 1);
    REQUIRE(slKK[1].second.size() == 2);
    CHECK(slKK[1].second.gen(0).bd == Bidegree{1, 1});
    CHECK(slKK[1].second.gen(1).bd == Bidegree{1, 1});
    CHECK(slKK[2].first == 2);
    REQUIRE(slKK[2].second.size() == 1);
    CHECK(slKK[2].second.gen(0).bd == Bidegree{0, 2});

    TateComplex unit = tate_object(R, 0, 0);
    CHECK(slices(cone(identity_morphism(unit)).cone).empty());
    CHECK(slices(zero_complex(R)).empty());
    auto pruned = slices(direct_sum(tate_object(R, 0, 1), cone(identity_morphism(unit)).cone));
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0].first == 1);
    CHECK(pruned[0].second.size() == 1);
}

TEST_CASE("no maps point from high weight to low weight") {
    auto R = f3tau();
    TateComplex K = k_tau(R);
    for (int d = -1; d <= 1; ++d) {
        CHECK(hom_space(pi_ge(K, 1), pi_lt(K, 1), d).dim() == 0);
        CHECK(hom_space(slice(K, 1), slice(K, 0), d).dim() == 0);
    }
}

TEST_CASE("weight blocks of chain maps") {
    auto R = f3tau();
    TateComplex K = k_tau(R);

    GradedMorphism id0 = slice_morphism(identity_morphism(K), 0);
    CHECK(id0.entry(0, 0) == R->one());
    CHECK(is_isomorphism(id0));

    GradedMorphism tau = tau_map(R);
    CHECK(slice_morphism(tau, 0).target().size() == 0);
    CHECK(slice_morphism(tau, 1).source().size() == 0);

    GradedMorphism z = slice_morphism(zero_morphism(K, K, -1), 0);
    CHECK(z.degree() == -1);
    CHECK(z.entries().empty());

    GradedMorphism bad(K, K, 0);
    bad.set_entry(0, 0, R->one());  // kills the twisted part, not closed
    CHECK_THROWS_AS(slice_morphism(bad, 0), NotChainMap);
}

TEST_CASE("a chain map induces blocks plus a connecting-square witness") {
    auto R3 = f3tau();
    TateComplex K = k_tau(R3);

    SlicedMorphism idk = induced_slice_morphism(identity_morphism(K), 1);
    CHECK(idk.ge == identity_morphism(pi_ge(K, 1)));
    CHECK(idk.lt == identity_morphism(pi_lt(K, 1)));
    CHECK(idk.sn == identity_morphism(slice(K, 1)));
    CHECK(idk.witness.entries().empty());

    GradedMorphism tau = tau_map(R3);
    SlicedMorphism ind = induced_slice_morphism(tau, 1);
    CHECK(ind.ge.source().size() == 0);
    CHECK(ind.lt.target().size() == 0);
    CHECK(ind.sn.source().size() == 0);
    CHECK(ind.sn.target().size() == 1);
    CHECK(ind.witness.degree() == -1);
    REQUIRE(ind.witness.source().size() == 1);
    CHECK(ind.witness.entry(0, 0) == -R3->element("tau"));

    auto R2 = f2tau();
    CHECK(induced_slice_morphism(tau_map(R2), 1).witness.entry(0, 0) == R2->element("tau"));

    CHECK_THROWS_AS(induced_slice_morphism(zero_morphism(K, K, -1), 1), NotChainMap);
    GradedMorphism bad(K, K, 0);
    bad.set_entry(0, 0, R3->one());
    CHECK_THROWS_AS(induced_slice_morphism(bad, 1), NotChainMap);
}

TEST_CASE("the upper truncation is a twist of an effective object") {
    auto R = f2tau();
    TateComplex K = k_tau(R);

    PiGeViaHom ph = pi_ge_via_hom(K, 1);
    REQUIRE(ph.object.size() == 1);
    CHECK(ph.object.gen(0).bd == Bidegree{0, 0});
    CHECK(twist(ph.object, 1).same_as(pi_ge(K, 1)));
    CHECK(ph.compare.entry(0, 0) == R->one());
    CHECK(is_isomorphism(ph.compare));

    PiGeViaHom whole = pi_ge_via_hom(K, 0);
    CHECK(whole.object.same_as(K));

    PiGeViaHom pkk = pi_ge_via_hom(tensor(K, K), 1);
    REQUIRE(pkk.object.size() == 3);
    CHECK(pkk.object.gen(0).bd == Bidegree{1, 0});
    CHECK(pkk.object.gen(1).bd == Bidegree{1, 0});
    CHECK(pkk.object.gen(2).bd == Bidegree{0, 1});
}

TEST_CASE("the lower truncation is recovered from the dual pairing") {
    auto R3 = f3tau();
    TateComplex K = k_tau(R3);

    PiLtViaDual pl = pi_lt_via_dual(K, 1);
    REQUIRE(pl.object.size() == 1);
    CHECK(pl.object.gen(0).bd == Bidegree{1, 0});
    CHECK(pl.compare.entry(0, 0) == -R3->one());
    CHECK(pl.psi.entry(0, 0) == -R3->one());
    CHECK(is_isomorphism(pl.compare));
    CHECK(is_chain_map(pl.psi));

    auto R2 = f2tau();
    CHECK(pi_lt_via_dual(k_tau(R2), 1).psi.entry(0, 0) == R2->one());

    CHECK_THROWS_AS(pi_lt_via_dual(K, 0), MalformedInput);

    PiLtViaDual p2 = pi_lt_via_dual(tensor(K, K), 2);
    CHECK(p2.object.size() == 3);
    CHECK(is_isomorphism(p2.compare));
}

TEST_CASE("low-weight probes see the same maps through the lower truncation") {
    auto R = f3tau();
    TateComplex K = k_tau(R);
    PiLtViaDual pl = pi_lt_via_dual(K, 1);
    const Field& F = R->field();

    // Maps out of K into a low-weight target factor through the truncation:
    // precomposition with psi is a bijection on hom classes.
    for (int p = -2; p <= 2; ++p) {
        TateComplex Y = tate_object(R, p, 0);
        HomSpace from = hom_space(pl.object, Y, 0);
        HomSpace to = hom_space(K, Y, 0);
        REQUIRE(from.dim() == to.dim());
        if (from.dim() == 0) continue;
        Matrix mat(static_cast<size_t>(to.dim()), static_cast<size_t>(from.dim()), F);
        for (int i = 0; i < from.dim(); ++i) {
            auto coords = to.coordinates_of(compose(from.representatives()[i], pl.psi));
            for (int j = 0; j < to.dim(); ++j) mat.at(j, i) = coords[j];
        }
        CHECK(mat.rank() == static_cast<size_t>(from.dim()));
    }

    // Weight-1 content is genuinely gone.
    CHECK(hom_space(tate_object(R, 0, 1), K, 0).dim() == 1);
    CHECK(hom_space(tate_object(R, 0, 1), pl.object, 0).dim() == 0);
}

TEST_CASE("recognizing a weight decomposition from its two maps") {
    auto R3 = f3tau();
    TateComplex K = k_tau(R3);
    Triangle st = slice_triangle(K, 1);

    RecognizedSliceTriangle rec = recognize_slice_triangle(st.f, st.g, 1);
    CHECK(rec.triangle.h.entry(0, 0) == -R3->element("tau"));
    CHECK(is_distinguished(rec.triangle));
    CHECK(is_isomorphism(rec.glue));
    CHECK(is_isomorphism(rec.to_pi_ge));
    CHECK(is_isomorphism(rec.to_pi_lt));
    CHECK(rec.glue.source().size() == 3);

    // Rescaling the quotient map flips the connecting map it reconstructs.
    Scalar minus = -Scalar::one(R3->field());
    RecognizedSliceTriangle rec2 = recognize_slice_triangle(st.f, st.g.scaled(minus), 1);
    CHECK(rec2.triangle.h.entry(0, 0) == R3->element("tau"));
    CHECK(is_distinguished(rec2.triangle));

    auto R2 = f2tau();
    Triangle st2 = slice_triangle(k_tau(R2), 1);
    CHECK(recognize_slice_triangle(st2.f, st2.g, 1).triangle.h.entry(0, 0) ==
          R2->element("tau"));
}

TEST_CASE("recognition rejects inputs that are not a weight decomposition") {
    auto R = f3tau();
    TateComplex K = k_tau(R);
    Triangle st = slice_triangle(K, 1);

    CHECK_THROWS_AS(recognize_slice_triangle(zero_morphism(K, K, -1), st.g, 1), NotChainMap);
    CHECK_THROWS_AS(recognize_slice_triangle(st.f, st.f, 1), ShapeMismatch);

    // First object has essential weight below the cut.
    GradedMorphism low(tate_object(R, 0, 0), K, 0);
    low.set_entry(1, 0, R->element("tau"));
    REQUIRE(is_chain_map(low));
    try {
        recognize_slice_triangle(low, st.g, 1);
        CHECK(false);
    } catch (const ConditionFailed& e) {
        CHECK(e.index == 1);
    }

    // Last object has essential weight at or above the cut.
    try {
        recognize_slice_triangle(st.f, identity_morphism(K), 1);
        CHECK(false);
    } catch (const ConditionFailed& e) {
        CHECK(e.index == 2);
    }

    // First map fails to match the high weights.
    try {
        recognize_slice_triangle(zero_morphism(tate_object(R, 0, 1), K, 0), st.g, 1);
        CHECK(false);
    } catch (const ConditionFailed& e) {
        CHECK(e.index == 3);
    }

    // Second map fails to match the low weights.
    try {
        recognize_slice_triangle(st.f, zero_morphism(K, tate_object(R, 1, 0), 0), 1);
        CHECK(false);
    } catch (const ConditionFailed& e) {
        CHECK(e.index == 4);
    }
}

TEST_CASE("random objects respect the weight decomposition") {
    auto R = builtin_ring("f3-rho-tau");
    RandomParams params;
    params.max_generators = 3;
    params.max_twist = 2;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        TateComplex M = random_object(R, params, seed);
        CHECK(pi_ge(M, 1).size() + pi_lt(M, 1).size() == M.size());
        CHECK(pi_ge(pi_ge(M, 1), 1).same_as(pi_ge(M, 1)));
        for (int d = -1; d <= 1; ++d) CHECK(hom_space(pi_ge(M, 1), pi_lt(M, 1), d).dim() == 0);
        CHECK(is_distinguished(slice_triangle(M, 1)));
        SlicedMorphism ind = induced_slice_morphism(identity_morphism(M), 1);
        CHECK(ind.ge == identity_morphism(pi_ge(M, 1)));
        CHECK(ind.lt == identity_morphism(pi_lt(M, 1)));
        PiGeViaHom ph = pi_ge_via_hom(M, 1);
        CHECK(twist(ph.object, 1).same_as(pi_ge(M, 1)));
        PiLtViaDual pl = pi_lt_via_dual(M, 1);
        CHECK(is_isomorphism(pl.compare));
        CHECK(is_chain_map(pl.psi));
    }
}
