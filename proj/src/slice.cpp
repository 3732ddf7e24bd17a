#include "slice.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace ts {

namespace {

std::vector<size_t> twist_selection(const TateComplex& M, int lo, int hi) {
    std::vector<size_t> keep;
    for (size_t k = 0; k < M.size(); ++k)
        if (M.gen(k).bd.q >= lo && M.gen(k).bd.q <= hi) keep.push_back(k);
    return keep;
}

// Positions of the selected generators inside M; M.size() marks "not kept".
std::vector<size_t> position_map(const TateComplex& M, const std::vector<size_t>& keep) {
    std::vector<size_t> pos(M.size(), M.size());
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
    return pos;
}

TateComplex span_of(const TateComplex& M, const std::vector<size_t>& keep) {
    std::vector<Generator> gens;
    for (size_t k : keep) gens.push_back(M.gen(k));
    TateComplex r(M.ring(), std::move(gens));
    std::vector<size_t> pos = position_map(M, keep);
    for (const auto& [key, v] : M.entries())
        if (pos[key.first] != M.size() && pos[key.second] != M.size())
            r.set_entry(pos[key.first], pos[key.second], v);
    return r;
}

int max_twist(const TateComplex& M) {
    int q = -1;
    for (const auto& g : M.generators()) q = std::max(q, g.bd.q);
    return q;
}

void require_plain_chain_map(const GradedMorphism& f, const char* what) {
    if (f.degree() != 0) throw NotChainMap(std::string(what) + " needs a degree-0 chain map");
    if (!is_chain_map(f)) throw NotChainMap(std::string(what) + " input does not commute with the differentials");
}

TateComplex raw_pi_ge(const TateComplex& M, int n) {
    int top = max_twist(M);
    return span_of(M, twist_selection(M, n, top < n ? n : top));
}

Triangle raw_slice_triangle(const TateComplex& M, int n) {
    TateComplex X = raw_pi_ge(M, n);
    TateComplex Z = pi_lt(M, n);
    std::vector<size_t> hiKeep = twist_selection(M, n, std::max(max_twist(M), n));
    std::vector<size_t> loKeep = twist_selection(M, 0, n - 1);
    std::vector<size_t> hi = position_map(M, hiKeep), lo = position_map(M, loKeep);

    GradedMorphism incl(X, M, 0);
    for (size_t i = 0; i < hiKeep.size(); ++i) incl.set_entry(hiKeep[i], i, M.ring()->one());
    GradedMorphism proj(M, Z, 0);
    for (size_t i = 0; i < loKeep.size(); ++i) proj.set_entry(i, loKeep[i], M.ring()->one());
    GradedMorphism conn(Z, shift(X, 1), 0);
    for (const auto& [key, v] : M.entries())
        if (hi[key.first] != M.size() && lo[key.second] != M.size())
            conn.set_entry(hi[key.first], lo[key.second], -v);
    if (!is_chain_map(incl) || !is_chain_map(proj) || !is_chain_map(conn))
        throw Error("slice_triangle: structure maps fail to be chain maps");
    return {X, M, Z, incl, proj, conn};
}

TateComplex raw_slice(const TateComplex& M, int n) {
    return span_of(M, twist_selection(M, n, n));
}

}  // namespace

TateComplex pi_ge(const TateComplex& M, int n) { return raw_pi_ge(M, n); }

TateComplex pi_lt(const TateComplex& M, int n) { return span_of(M, twist_selection(M, 0, n - 1)); }

Triangle slice_triangle(const TateComplex& M, int n) {
    Triangle t = raw_slice_triangle(M, n);
    if (!is_distinguished(t)) throw Error("slice_triangle: triangle failed certification");
    return t;
}

TateComplex slice(const TateComplex& M, int n) {
    TateComplex s = raw_slice(M, n);
    // Certify against the cone of the inclusion of the next-higher truncation.
    TateComplex hi0 = raw_pi_ge(M, n);
    if (hi0.size() == 0) return s;
    TateComplex hi1 = raw_pi_ge(M, n + 1);
    GradedMorphism up(hi1, hi0, 0);
    {
        size_t at = 0;
        for (size_t i = 0; i < hi0.size(); ++i)
            if (hi0.gen(i).bd.q >= n + 1) up.set_entry(i, at++, M.ring()->one());
    }
    ConeResult c = cone(up);
    GradedMorphism onto(c.cone, s, 0);
    {
        size_t at = 0;
        for (size_t i = 0; i < hi0.size(); ++i)
            if (hi0.gen(i).bd.q == n) onto.set_entry(at++, hi1.size() + i, M.ring()->one());
    }
    if (!is_chain_map(onto) || !is_isomorphism(onto))
        throw Error("slice: subquotient disagrees with the cone presentation");
    return s;
}

std::vector<std::pair<int, TateComplex>> slices(const TateComplex& M) {
    std::vector<std::pair<int, TateComplex>> out;
    for (int n = 0; n <= max_twist(M); ++n) {
        TateComplex s = minimize(slice(M, n)).reduced;
        if (s.size() > 0) out.emplace_back(n, s);
    }
    return out;
}

GradedMorphism slice_morphism(const GradedMorphism& f, int i) {
    if (!is_chain_map(f)) throw NotChainMap("slice_morphism input does not commute with the differentials");
    const TateComplex& M = f.source();
    const TateComplex& N = f.target();
    std::vector<size_t> srcKeep = twist_selection(M, i, i), tgtKeep = twist_selection(N, i, i);
    std::vector<size_t> src = position_map(M, srcKeep), tgt = position_map(N, tgtKeep);
    GradedMorphism out(raw_slice(M, i), raw_slice(N, i), f.degree());
    for (const auto& [key, v] : f.entries())
        if (tgt[key.first] != N.size() && src[key.second] != M.size())
            out.set_entry(tgt[key.first], src[key.second], v);
    if (!is_chain_map(out)) throw Error("slice_morphism: weight block is not a chain map");
    return out;
}

SlicedMorphism induced_slice_morphism(const GradedMorphism& f, int n) {
    require_plain_chain_map(f, "induced_slice_morphism");
    const TateComplex& M = f.source();
    const TateComplex& N = f.target();
    TateComplex Mge = pi_ge(M, n), Mlt = pi_lt(M, n);
    TateComplex Nge = pi_ge(N, n), Nlt = pi_lt(N, n);
    std::vector<size_t> srcHi = position_map(M, twist_selection(M, n, std::max(max_twist(M), n)));
    std::vector<size_t> srcLo = position_map(M, twist_selection(M, 0, n - 1));
    std::vector<size_t> tgtHi = position_map(N, twist_selection(N, n, std::max(max_twist(N), n)));
    std::vector<size_t> tgtLo = position_map(N, twist_selection(N, 0, n - 1));

    GradedMorphism ge(Mge, Nge, 0), lt(Mlt, Nlt, 0);
    GradedMorphism witness(Mlt, shift(Nge, 1), -1);
    for (const auto& [key, v] : f.entries()) {
        auto [j, k] = key;
        if (tgtHi[j] != N.size() && srcHi[k] != M.size()) ge.set_entry(tgtHi[j], srcHi[k], v);
        if (tgtLo[j] != N.size() && srcLo[k] != M.size()) lt.set_entry(tgtLo[j], srcLo[k], v);
        if (tgtHi[j] != N.size() && srcLo[k] != M.size())
            witness.set_entry(tgtHi[j], srcLo[k], -v);
    }
    if (!is_chain_map(ge) || !is_chain_map(lt))
        throw Error("induced_slice_morphism: diagonal blocks fail to be chain maps");
    Triangle tM = raw_slice_triangle(M, n), tN = raw_slice_triangle(N, n);
    if (!(compose(tN.f, ge) == compose(f, tM.f)) || !(compose(tN.g, f) == compose(lt, tM.g)))
        throw Error("induced_slice_morphism: truncation squares do not commute");
    GradedMorphism residual = compose(tN.h, lt) - compose(shift(ge, 1), tM.h);
    if (!(residual == boundary_of(witness)))
        throw Error("induced_slice_morphism: connecting square witness is wrong");
    // The low block is the unique completion up to homotopy: no maps point
    // from the high part of the source to the low part of the target.
    if (hom_space(Mge, Nlt, 0).dim() != 0)
        throw Error("induced_slice_morphism: completion is not unique");
    return {ge, lt, slice_morphism(f, n), witness};
}

PiGeViaHom pi_ge_via_hom(const TateComplex& M, int n) {
    std::vector<size_t> keep = twist_selection(M, n, std::max(max_twist(M), n));
    std::vector<Generator> gens;
    for (size_t k : keep) {
        Generator g = M.gen(k);
        g.bd.q -= n;
        gens.push_back(g);
    }
    TateComplex object(M.ring(), std::move(gens));
    std::vector<size_t> pos = position_map(M, keep);
    for (const auto& [key, v] : M.entries())
        if (pos[key.first] != M.size() && pos[key.second] != M.size())
            object.set_entry(pos[key.first], pos[key.second], v);

    TateComplex restored = twist(object, n);
    TateComplex target = pi_ge(M, n);
    if (!restored.same_as(target)) throw Error("pi_ge_via_hom: presentations differ");
    GradedMorphism compare(restored, target, 0);
    for (size_t i = 0; i < keep.size(); ++i) compare.set_entry(i, i, M.ring()->one());
    if (!is_chain_map(compare)) throw Error("pi_ge_via_hom: comparison is not a chain map");
    return {object, compare};
}

PiLtViaDual pi_lt_via_dual(const TateComplex& M, int n) {
    if (n < 1) throw MalformedInput("pi_lt_via_dual needs a positive cut");
    const BigradedRing& ring = *M.ring();
    Scalar one = Scalar::one(ring.field());

    InternalHom first = dualize(M, n - 1);           // dual of the twist-below-n quotient
    InternalHom second = dualize(first.dual, n - 1);  // and back
    const TateComplex& psi_target = second.dual;
    TateComplex Q = pi_lt(M, n);
    if (psi_target.size() != Q.size()) throw Error("pi_lt_via_dual: double dual has wrong rank");

    GradedMorphism compare(psi_target, Q, 0);
    for (size_t i = 0; i < Q.size(); ++i)
        compare.set_entry(i, i, Q.gen(i).bd.p % 2 == 0 ? ring.one() : -ring.one());
    if (!is_chain_map(compare)) throw Error("pi_lt_via_dual: comparison is not a chain map");

    // psi is pinned down by pairing against the dual, up to homotopy.
    TateComplex paired = tensor(M, first.dual);
    MorphismSolver solver;
    int psi = solver.add_unknown(M, psi_target, 0);
    int w = solver.add_unknown(paired, tate_object(M.ring(), 0, n - 1), -1);
    GradedMorphism dPsi = differential_morphism(psi_target);
    GradedMorphism dM = differential_morphism(M);
    solver.add_equation({{psi, dPsi, std::nullopt, one}, {psi, std::nullopt, dM, -one}},
                        zero_morphism(M, psi_target, 1));
    GradedMorphism rhs = compose(first.evaluation, braiding(M, first.dual));
    GradedMorphism dT = differential_morphism(rhs.target());
    solver.add_equation({{psi, second.evaluation, std::nullopt, one, 0, first.dual},
                         {w, dT, std::nullopt, -one},
                         {w, std::nullopt, differential_morphism(paired), -one}},
                        rhs);
    auto sol = solver.solve();
    if (!sol) throw NoSolution("pi_lt_via_dual: no pairing-compatible map exists");

    GradedMorphism proj(M, Q, 0);
    {
        std::vector<size_t> keep = twist_selection(M, 0, n - 1);
        for (size_t i = 0; i < keep.size(); ++i) proj.set_entry(i, keep[i], ring.one());
    }
    if (!is_nullhomotopic(compose(compare, (*sol)[0]) - proj))
        throw Error("pi_lt_via_dual: comparison does not recover the projection");
    return {psi_target, (*sol)[0], compare, (*sol)[1]};
}

RecognizedSliceTriangle recognize_slice_triangle(const GradedMorphism& a, const GradedMorphism& b,
                                                 int n) {
    require_plain_chain_map(a, "recognize_slice_triangle");
    require_plain_chain_map(b, "recognize_slice_triangle");
    if (!b.source().same_as(a.target()))
        throw ShapeMismatch("the two maps do not share the middle object");
    const TateComplex& M0 = a.source();
    const TateComplex& M1 = a.target();
    const TateComplex& M2 = b.target();

    for (const auto& g : minimize(M0).reduced.generators())
        if (g.bd.q < n)
            throw ConditionFailed(1, "first object carries essential twist " +
                                         std::to_string(g.bd.q) + " below " + std::to_string(n));
    for (const auto& g : minimize(M2).reduced.generators())
        if (g.bd.q >= n)
            throw ConditionFailed(2, "last object carries essential twist " +
                                         std::to_string(g.bd.q) + " at or above " +
                                         std::to_string(n));
    int top = std::max(max_twist(M0), max_twist(M1));
    for (int i = n; i <= top; ++i)
        if (!is_isomorphism(slice_morphism(a, i)))
            throw ConditionFailed(3, "first map is not an equivalence in weight " +
                                         std::to_string(i));
    for (int i = 0; i < n; ++i)
        if (!is_isomorphism(slice_morphism(b, i)))
            throw ConditionFailed(4, "second map is not an equivalence in weight " +
                                         std::to_string(i));
    if (hom_space(M0, M2, 0).dim() != 0)
        throw ConditionFailed(5, "maps from the first to the last object do not vanish");
    auto h = is_nullhomotopic(compose(b, a));
    if (!h) throw ConditionFailed(6, "the composite is not null-homotopic");

    ConeResult ca = cone(a);
    GradedMorphism glue(ca.cone, M2, 0);
    for (const auto& [key, v] : h->entries()) glue.set_entry(key.first, key.second, v);
    for (const auto& [key, v] : b.entries()) glue.set_entry(key.first, M0.size() + key.second, v);
    if (!is_chain_map(glue)) throw Error("recognize_slice_triangle: glued map is not a chain map");
    if (!is_isomorphism(glue))
        throw ConditionFailed(7, "the glued map from the cone is not invertible");
    auto inverse = homotopy_inverse(glue);
    if (!inverse) throw Error("recognize_slice_triangle: invertible glue has no inverse");
    GradedMorphism conn = compose(ca.triangle.h, *inverse);

    // Compare with the canonical weight decomposition of the middle object.
    Triangle st = raw_slice_triangle(M1, n);
    const Field& F = M0.ring()->field();
    Scalar one = Scalar::one(F);
    MorphismSolver solver;
    int alpha = solver.add_unknown(M0, st.X, 0);
    int beta = solver.add_unknown(M2, st.Z, 0);
    int w1 = solver.add_unknown(M0, M1, -1);
    int w2 = solver.add_unknown(M1, st.Z, -1);
    int w3 = solver.add_unknown(M2, shift(st.X, 1), -1);
    solver.add_equation({{alpha, differential_morphism(st.X), std::nullopt, one},
                         {alpha, std::nullopt, differential_morphism(M0), -one}},
                        zero_morphism(M0, st.X, 1));
    solver.add_equation({{beta, differential_morphism(st.Z), std::nullopt, one},
                         {beta, std::nullopt, differential_morphism(M2), -one}},
                        zero_morphism(M2, st.Z, 1));
    solver.add_equation({{alpha, st.f, std::nullopt, one},
                         {w1, differential_morphism(M1), std::nullopt, -one},
                         {w1, std::nullopt, differential_morphism(M0), -one}},
                        a);
    solver.add_equation({{beta, std::nullopt, b, one},
                         {w2, differential_morphism(st.Z), std::nullopt, -one},
                         {w2, std::nullopt, differential_morphism(M1), -one}},
                        st.g);
    solver.add_equation({{beta, st.h, std::nullopt, one},
                         {alpha, std::nullopt, conn, -one, 1},
                         {w3, differential_morphism(shift(st.X, 1)), std::nullopt, -one},
                         {w3, std::nullopt, differential_morphism(M2), -one}},
                        zero_morphism(M2, shift(st.X, 1), 0));
    auto sol = solver.solve();
    if (!sol)
        throw ConditionFailed(8, "no comparison with the canonical weight decomposition exists");
    if (!is_isomorphism((*sol)[0]) || !is_isomorphism((*sol)[1]))
        throw ConditionFailed(8, "comparison with the canonical decomposition is not invertible");
    return {Triangle{M0, M1, M2, a, b, conn}, glue, (*sol)[0], (*sol)[1]};
}

}  // namespace ts
