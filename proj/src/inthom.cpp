#include "inthom.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"
#include "matrix.hpp"

namespace ts {

namespace {

Scalar sgn(const Field& f, int exponent) {
    return (exponent % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

void assert_square_zero(const TateComplex& M, const char* what) {
    GradedMorphism d = differential_morphism(M);
    if (!compose(d, d).is_zero()) throw Error(std::string(what) + ": differential does not square to zero");
}

// Indices of the generators that pair into twist n, in original order.
// Generators of twist above n span a subcomplex, so these present the
// quotient that the dual actually sees.
std::vector<size_t> kept_indices(const TateComplex& M, int n) {
    std::vector<size_t> kept;
    for (size_t k = 0; k < M.size(); ++k)
        if (M.gen(k).bd.q <= n) kept.push_back(k);
    return kept;
}

}  // namespace

InternalHom dualize_to(const TateComplex& M, int n, int s) {
    const BigradedRing& ring = *M.ring();
    std::vector<size_t> kept = kept_indices(M, n);
    std::vector<size_t> dual_of(M.size(), M.size());
    std::vector<Generator> gens;
    for (size_t i = 0; i < kept.size(); ++i) {
        const Generator& g = M.gen(kept[i]);
        dual_of[kept[i]] = i;
        gens.push_back({g.name + "*", {s - g.bd.p, n - g.bd.q}});
    }
    TateComplex dual(M.ring(), std::move(gens));
    for (const auto& [key, v] : M.entries()) {
        auto [k, m] = key;  // original entry: generator m -> generator k
        if (dual_of[k] == M.size() || dual_of[m] == M.size()) continue;
        int pk = M.gen(k).bd.p, pm = M.gen(m).bd.p;
        dual.set_entry(dual_of[m], dual_of[k], v.scaled(sgn(ring.field(), 1 + s + pk + pk * pm)));
    }
    assert_square_zero(dual, "dualize");

    GradedMorphism e(tensor(dual, M), tate_object(M.ring(), s, n), 0);
    for (size_t i = 0; i < kept.size(); ++i) e.set_entry(0, i * M.size() + kept[i], ring.one());
    if (!is_chain_map(e)) throw Error("dualize: evaluation pairing is not a chain map");
    return {dual, e, M, n, s};
}

InternalHom dualize(const TateComplex& M, int n) { return dualize_to(M, n, 0); }

GradedMorphism dual_morphism(const GradedMorphism& f, int n) {
    if (f.degree() != 0) throw NotChainMap("dual_morphism needs a degree-0 chain map");
    if (!is_chain_map(f)) throw NotChainMap("dual_morphism input does not commute with the differentials");
    const TateComplex& M = f.source();
    const TateComplex& N = f.target();
    const Field& F = M.ring()->field();
    InternalHom dM = dualize(M, n), dN = dualize(N, n);
    std::vector<size_t> dualM(M.size(), M.size()), dualN(N.size(), N.size());
    {
        std::vector<size_t> keptM = kept_indices(M, n), keptN = kept_indices(N, n);
        for (size_t i = 0; i < keptM.size(); ++i) dualM[keptM[i]] = i;
        for (size_t i = 0; i < keptN.size(); ++i) dualN[keptN[i]] = i;
    }
    GradedMorphism out(dN.dual, dM.dual, 0);
    for (const auto& [key, v] : f.entries()) {
        auto [j, l] = key;  // f sends generator l of M to generator j of N
        if (dualN[j] == N.size() || dualM[l] == M.size()) continue;
        out.set_entry(dualM[l], dualN[j], v.scaled(sgn(F, v.bidegree().p * M.gen(l).bd.p)));
    }
    if (!is_chain_map(out)) throw Error("dual_morphism: result is not a chain map");
    return out;
}

InthomVerification verify_inthom(const InternalHom& ih, std::uint64_t seed) {
    InthomVerification report;
    const RingPtr& ring = ih.argument.ring();
    TateComplex T = tate_object(ring, ih.shift_deg, ih.twist);

    int lo = 0, hi = 0;
    for (const auto& g : ih.dual.generators()) {
        lo = std::min(lo, g.bd.p);
        hi = std::max(hi, g.bd.p);
    }
    std::vector<TateComplex> probes;
    for (int q = 0; q <= ring->window().q_max; ++q)
        for (int p = lo - 1; p <= hi + 1; ++p) probes.push_back(tate_object(ring, p, q));
    RandomParams params;
    params.max_generators = 3;
    params.max_twist = std::min(2, ring->window().q_max);
    for (int i = 1; i <= 5; ++i) probes.push_back(random_object(ring, params, seed + i));
    report.probes = static_cast<int>(probes.size());

    for (size_t pi = 0; pi < probes.size(); ++pi) {
        const TateComplex& P = probes[pi];
        for (int d = -1; d <= 1; ++d) {
            std::string where = "probe " + std::to_string(pi) + " shift " + std::to_string(d);
            try {
                HomSpace into_dual = hom_space(P, ih.dual, d);
                HomSpace pairing = hom_space(tensor(P, ih.argument), T, d);
                ++report.checks;
                if (into_dual.dim() != pairing.dim()) {
                    report.failures.push_back(where + ": hom dimensions disagree");
                    continue;
                }
                int dim = into_dual.dim();
                if (dim == 0) continue;
                Matrix mat(dim, dim, ring->field());
                bool bad = false;
                for (int c = 0; c < dim && !bad; ++c) {
                    GradedMorphism through =
                        compose(ih.evaluation, tensor_id(into_dual.representatives()[c], ih.argument));
                    try {
                        auto coords = pairing.coordinates_of(through);
                        for (int r = 0; r < dim; ++r) mat.at(r, c) = coords[r];
                    } catch (const NotChainMap&) {
                        report.failures.push_back(where + ": pairing with the evaluation is not closed");
                        bad = true;
                    }
                }
                if (!bad && mat.rank() != static_cast<size_t>(dim))
                    report.failures.push_back(where + ": pairing is not bijective on hom classes");
            } catch (const WindowOverflow&) {
                ++report.skipped;
            }
        }
    }
    return report;
}

InthomComparison compare_inthoms(const InternalHom& a, const InternalHom& b) {
    if (!a.argument.same_as(b.argument) || a.twist != b.twist || a.shift_deg != b.shift_deg)
        throw ShapeMismatch("internal homs answer different questions");
    const Field& F = a.argument.ring()->field();
    Scalar one = Scalar::one(F), minus = -one;
    TateComplex T = tate_object(a.argument.ring(), a.shift_deg, a.twist);
    TateComplex paired = tensor(a.dual, a.argument);

    MorphismSolver solver;
    int phi = solver.add_unknown(a.dual, b.dual, 0);
    int w = solver.add_unknown(paired, T, -1);
    GradedMorphism dA = differential_morphism(a.dual);
    GradedMorphism dB = differential_morphism(b.dual);
    GradedMorphism dT = differential_morphism(T);
    GradedMorphism dP = differential_morphism(paired);
    solver.add_equation({{phi, dB, std::nullopt, one}, {phi, std::nullopt, dA, minus}},
                        zero_morphism(a.dual, b.dual, 1));
    // evaluation of b through (phi (x) id) differs from that of a by D(w)
    solver.add_equation({{phi, b.evaluation, std::nullopt, one, 0, a.argument},
                         {w, dT, std::nullopt, one},
                         {w, std::nullopt, dP, one}},
                        a.evaluation);
    auto sol = solver.solve();
    if (!sol) throw NoSolution("no evaluation-compatible comparison exists");
    for (const auto& k : solver.kernel_basis())
        if (!is_nullhomotopic(k[0]))
            throw NotUnique("evaluation-compatible comparison is not unique up to homotopy");
    if (!is_isomorphism((*sol)[0])) throw Error("comparison between internal homs is not invertible");
    return {(*sol)[0], (*sol)[1]};
}

ShiftCompat shift_compat(const TateComplex& M, int n) {
    const RingPtr& ringp = M.ring();
    const BigradedRing& ring = *ringp;
    const Field& F = ring.field();
    InternalHom base = dualize(M, n);
    std::vector<size_t> kept = kept_indices(M, n);

    // Dual of the shift, against the shifted dual. The comparison is the
    // diagonal of signs (-1)^p indexed by the original generator degrees;
    // both directions are asserted to be mutually inverse chain maps.
    InternalHom up = dualize(shift(M, 1), n);
    TateComplex down = shift(base.dual, -1);
    GradedMorphism desuspend(up.dual, down, 0);
    GradedMorphism lift(down, up.dual, 0);
    for (size_t i = 0; i < kept.size(); ++i) {
        RingElement c = ring.one().scaled(sgn(F, M.gen(kept[i]).bd.p));
        desuspend.set_entry(i, i, c);
        lift.set_entry(i, i, c);
    }
    if (!is_chain_map(desuspend) || !is_chain_map(lift))
        throw Error("shift_compat: desuspension comparison is not a chain map");
    if (!(compose(desuspend, lift) == identity_morphism(down)) ||
        !(compose(lift, desuspend) == identity_morphism(up.dual)))
        throw Error("shift_compat: desuspension comparison is not invertible");
    // The pairing transported onto shift(dual, -1) carries the same signs.
    GradedMorphism transported = compose(up.evaluation, tensor_id(lift, shift(M, 1)));
    GradedMorphism expected(tensor(down, shift(M, 1)), tate_object(ringp, 0, n), 0);
    for (size_t i = 0; i < kept.size(); ++i)
        expected.set_entry(0, i * M.size() + kept[i], ring.one().scaled(sgn(F, M.gen(kept[i]).bd.p)));
    if (!(transported == expected))
        throw Error("shift_compat: transported pairing has unexpected signs");

    // Pairing into z(n)[1], against the shifted dual: the presentations
    // coincide on the nose and the comparison is the identity.
    InternalHom shifted = dualize_to(M, n, 1);
    TateComplex up_target = shift(base.dual, 1);
    if (!shifted.dual.same_as(up_target)) throw Error("shift_compat: suspension duals differ");
    GradedMorphism suspend(shifted.dual, up_target, 0);
    for (size_t i = 0; i < kept.size(); ++i) suspend.set_entry(i, i, ring.one());
    if (!is_chain_map(suspend)) throw Error("shift_compat: suspension comparison is not a chain map");
    return {desuspend, suspend};
}

ConeInthom inthom_of_cone(const GradedMorphism& f, int n) {
    ConeResult c = cone(f);
    const TateComplex& X = f.source();
    const TateComplex& Y = f.target();
    const TateComplex& Z = c.cone;
    Scalar one = Scalar::one(X.ring()->field());

    InternalHom ihX = dualize(X, n);
    InternalHom ihZ = dualize(Z, n);

    // Dualize the projection Z -> X[1], then identify the dual of X[1]
    // with the shifted dual of X to get the connecting map of duals.
    GradedMorphism Dpi = dual_morphism(c.triangle.h, n);
    ShiftCompat sc = shift_compat(X, n);
    GradedMorphism lift(sc.desuspend.target(), sc.desuspend.source(), 0);
    for (const auto& [key, v] : sc.desuspend.entries()) lift.set_entry(key.first, key.second, v);
    GradedMorphism glue = compose(Dpi, lift);  // shift(dual X, -1) -> dual Z
    if (!is_chain_map(glue)) throw Error("inthom_of_cone: dualized connecting map is not a chain map");

    ConeResult dual_cone = cone(glue);
    const TateComplex& Yc = dual_cone.cone;
    Triangle tri{ihZ.dual,
                 Yc,
                 shift(shift(ihX.dual, -1), 1),
                 dual_cone.triangle.g,
                 dual_cone.triangle.h,
                 -shift(dual_cone.triangle.f, 1)};

    TateComplex T = tate_object(X.ring(), 0, n);
    TateComplex pairedY = tensor(Yc, Y);
    TateComplex pairedL = tensor(ihZ.dual, Y);
    TateComplex pairedR = tensor(Yc, X);
    GradedMorphism dT = differential_morphism(T);
    GradedMorphism rhsL = compose(ihZ.evaluation, id_tensor(ihZ.dual, c.triangle.g));
    GradedMorphism rhsR = compose(ihX.evaluation, tensor_id(tri.g, X));
    GradedMorphism along_incl = tensor_id(tri.f, Y);
    GradedMorphism along_input = id_tensor(Yc, f);

    // First look for an evaluation making both gluing squares commute on
    // the nose; if the strict system has no solution, allow homotopies.
    auto attempt = [&](bool strict)
        -> std::optional<std::tuple<GradedMorphism, GradedMorphism, GradedMorphism>> {
        MorphismSolver solver;
        int e = solver.add_unknown(pairedY, T, 0);
        int wL = strict ? -1 : solver.add_unknown(pairedL, T, -1);
        int wR = strict ? -1 : solver.add_unknown(pairedR, T, -1);
        solver.add_equation({{e, dT, std::nullopt, one},
                             {e, std::nullopt, differential_morphism(pairedY), -one}},
                            zero_morphism(pairedY, T, 1));
        std::vector<MorphismSolver::Term> left{{e, std::nullopt, along_incl, one}};
        std::vector<MorphismSolver::Term> right{{e, std::nullopt, along_input, one}};
        if (!strict) {
            left.push_back({wL, dT, std::nullopt, one});
            left.push_back({wL, std::nullopt, differential_morphism(pairedL), one});
            right.push_back({wR, dT, std::nullopt, one});
            right.push_back({wR, std::nullopt, differential_morphism(pairedR), one});
        }
        solver.add_equation(std::move(left), rhsL);
        solver.add_equation(std::move(right), rhsR);
        auto sol = solver.solve();
        if (!sol) return std::nullopt;
        GradedMorphism ev = (*sol)[0];
        GradedMorphism zL = strict ? zero_morphism(pairedL, T, -1) : (*sol)[1];
        GradedMorphism zR = strict ? zero_morphism(pairedR, T, -1) : (*sol)[2];
        return std::make_tuple(ev, zL, zR);
    };

    auto found = attempt(true);
    if (!found) found = attempt(false);
    if (!found) throw NoSolution("no evaluation satisfies the gluing squares of the cone");
    auto [ev, wL, wR] = *found;
    return {{Yc, ev, Y, n, 0}, tri, wL, wR};
}

InternalHom tensor_inthom(const TateComplex& X, const TateComplex& Y, int n, int m) {
    for (const auto& g : X.generators())
        if (g.bd.q > n)
            throw ConditionFailed(1, "left factor has twist " + std::to_string(g.bd.q) +
                                         " above " + std::to_string(n));
    for (const auto& g : Y.generators())
        if (g.bd.q > m)
            throw ConditionFailed(2, "right factor has twist " + std::to_string(g.bd.q) +
                                         " above " + std::to_string(m));
    const BigradedRing& ring = *X.ring();
    InternalHom ihX = dualize(X, n);
    InternalHom ihY = dualize(Y, m);
    TateComplex dual = tensor(ihX.dual, ihY.dual);
    TateComplex argument = tensor(X, Y);
    GradedMorphism e(tensor(dual, argument), tate_object(X.ring(), 0, n + m), 0);
    size_t nx = X.size(), ny = Y.size();
    for (size_t a = 0; a < nx; ++a)
        for (size_t b = 0; b < ny; ++b) {
            size_t slot = (a * ny + b) * (nx * ny) + (a * ny + b);
            e.set_entry(0, slot,
                        ring.one().scaled(sgn(ring.field(), X.gen(a).bd.p * Y.gen(b).bd.p)));
        }
    if (!is_chain_map(e)) throw Error("tensor_inthom: product pairing is not a chain map");
    return {dual, e, argument, n + m, 0};
}

}  // namespace ts
