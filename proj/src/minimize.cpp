#include <optional>
#include <utility>

#include "errors.hpp"
#include "homalg.hpp"

namespace ts {

namespace {

GradedMorphism retarget(const GradedMorphism& f, const TateComplex& src, const TateComplex& tgt) {
    GradedMorphism r(src, tgt, f.degree());
    for (const auto& [key, v] : f.entries()) r.set_entry(key.first, key.second, v);
    return r;
}

struct Conjugation {
    TateComplex next;
    GradedMorphism fwd;  // next -> cur, the change of basis
    GradedMorphism bwd;  // cur -> next, its inverse
};

Conjugation conjugate(const TateComplex& cur, const GradedMorphism& W, const GradedMorphism& Winv) {
    GradedMorphism d_new = compose(compose(Winv, differential_morphism(cur)), W);
    TateComplex next(cur.ring(), cur.generators());
    for (const auto& [key, v] : d_new.entries()) next.set_entry(key.first, key.second, v);
    return {next, retarget(W, next, cur), retarget(Winv, cur, next)};
}

}  // namespace

Minimization minimize(const TateComplex& M) {
    const auto& ring = *M.ring();
    TateComplex cur = M;
    GradedMorphism i = identity_morphism(M);
    GradedMorphism r = identity_morphism(M);
    GradedMorphism h = zero_morphism(M, M, -1);

    for (;;) {
        // First differential entry of bidegree (0,0) with an invertible value.
        std::optional<std::pair<size_t, size_t>> pivot;
        RingElement a_inv = ring.one();
        for (const auto& [key, v] : cur.entries()) {
            if (!(v.bidegree() == Bidegree{0, 0})) continue;
            if (auto inv = ring.invert(v)) {
                pivot = key;
                a_inv = *inv;
                break;
            }
        }
        if (!pivot) break;
        auto [j0, k0] = *pivot;

        // Clear row j0 with a column operation: U = id - E[k0][m] a^-1 delta[j0][m].
        {
            GradedMorphism U = identity_morphism(cur);
            GradedMorphism Uinv = identity_morphism(cur);
            for (size_t m = 0; m < cur.size(); ++m) {
                if (m == k0) continue;
                RingElement b = cur.entry(j0, m);
                if (b.is_zero()) continue;
                RingElement prod = ring.mul(a_inv, b);
                U.set_entry(k0, m, -prod);
                Uinv.set_entry(k0, m, prod);
            }
            Conjugation c = conjugate(cur, U, Uinv);
            i = compose(i, c.fwd);
            r = compose(c.bwd, r);
            cur = c.next;
        }

        // Clear column k0 with a row operation: V = id + E[j][j0] delta[j][k0] a^-1.
        {
            GradedMorphism V = identity_morphism(cur);
            GradedMorphism Vinv = identity_morphism(cur);
            for (size_t j = 0; j < cur.size(); ++j) {
                if (j == j0) continue;
                RingElement d = cur.entry(j, k0);
                if (d.is_zero()) continue;
                RingElement prod = ring.mul(d, a_inv);
                V.set_entry(j, j0, prod);
                Vinv.set_entry(j, j0, -prod);
            }
            Conjugation c = conjugate(cur, V, Vinv);
            i = compose(i, c.fwd);
            r = compose(c.bwd, r);
            cur = c.next;
        }

        // The pivot pair is now an isolated summand: row j0 and column k0
        // hold only the pivot, row k0 and column j0 vanish by square-zero.
        for (size_t m = 0; m < cur.size(); ++m) {
            if (m != k0 && !cur.entry(j0, m).is_zero()) throw Error("minimize: pivot row not cleared");
            if (m != j0 && !cur.entry(m, k0).is_zero()) throw Error("minimize: pivot column not cleared");
            if (!cur.entry(k0, m).is_zero() || !cur.entry(m, j0).is_zero())
                throw Error("minimize: split summand still interacts");
        }

        std::vector<size_t> kept;
        for (size_t m = 0; m < cur.size(); ++m)
            if (m != j0 && m != k0) kept.push_back(m);
        std::vector<Generator> gens;
        for (size_t m : kept) gens.push_back(cur.gen(m));
        TateComplex next(cur.ring(), std::move(gens));
        for (size_t a = 0; a < kept.size(); ++a)
            for (size_t b = 0; b < kept.size(); ++b) {
                RingElement v = cur.entry(kept[a], kept[b]);
                if (!v.is_zero()) next.set_entry(a, b, v);
            }
        GradedMorphism inc(next, cur, 0);
        GradedMorphism pr(cur, next, 0);
        for (size_t a = 0; a < kept.size(); ++a) {
            inc.set_entry(kept[a], a, ring.one());
            pr.set_entry(a, kept[a], ring.one());
        }
        GradedMorphism h_pair(cur, cur, -1);
        h_pair.set_entry(k0, j0, a_inv);

        h = h + compose(compose(i, h_pair), r);
        i = compose(i, inc);
        r = compose(pr, r);
        cur = next;
    }

    if (!(compose(r, i) == identity_morphism(cur)))
        throw Error("minimize: retraction is not a left inverse");
    if (!(identity_morphism(M) - compose(i, r) - boundary_of(h)).is_zero())
        throw Error("minimize: homotopy bookkeeping failed");
    return {cur, i, r, h};
}

}  // namespace ts
