#include "complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "homalg.hpp"

namespace ts {

namespace {

Scalar sign_of(const Field& f, int exponent) {
    return (exponent % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

// Append primes until every name is unique.
std::vector<Generator> uniquify(std::vector<Generator> gens) {
    std::set<std::string> seen;
    for (auto& g : gens) {
        while (seen.count(g.name)) g.name += "'";
        seen.insert(g.name);
    }
    return gens;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_structure(*b)) throw RingMismatch("coefficient rings differ");
}

bool presentation_equal(const TateComplex& a, const TateComplex& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (!(a.gen(k) == b.gen(k))) return false;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = 0; k < a.size(); ++k)
            if (!(a.entry(j, k) == b.entry(j, k))) return false;
    return true;
}

void assert_square_zero(const TateComplex& M, const char* what) {
    GradedMorphism d = differential_morphism(M);
    if (!compose(d, d).is_zero()) throw Error(std::string(what) + ": differential does not square to zero");
}

}  // namespace

// ---- TateComplex ----

TateComplex::TateComplex(RingPtr ring, std::vector<Generator> gens)
    : ring_(std::move(ring)), gens_(uniquify(std::move(gens))) {
    if (!ring_) throw MalformedInput("complex needs a coefficient ring");
    for (const auto& g : gens_) {
        if (g.bd.q < 0) throw NonEffectiveTwist("generator " + g.name + " has negative twist");
        if (g.name.empty()) throw MalformedInput("empty generator name");
    }
}

RingElement TateComplex::entry(size_t j, size_t k) const {
    auto it = diff_.find({j, k});
    if (it != diff_.end()) return it->second;
    return ring_->zero(entry_bidegree(j, k));
}

void TateComplex::set_entry(size_t j, size_t k, const RingElement& v) {
    if (j >= size() || k >= size()) throw ShapeMismatch("differential index out of range");
    Bidegree want = entry_bidegree(j, k);
    if (v.is_zero()) {
        diff_.erase({j, k});
        return;
    }
    if (!(v.bidegree() == want)) throw ShapeMismatch("differential entry bidegree mismatch");
    if (BigradedRing::forced_zero(want))
        throw ShapeMismatch("nonzero differential entry in a forced-zero bidegree");
    if (!ring_->in_window(want)) throw WindowOverflow("differential entry outside ring window");
    diff_.insert_or_assign({j, k}, v);
}

bool TateComplex::same_as(const TateComplex& o) const {
    if (!ring_ || !o.ring_) return !ring_ && !o.ring_;
    if (ring_.get() != o.ring_.get() && !ring_->same_structure(*o.ring_)) return false;
    return presentation_equal(*this, o);
}

// ---- GradedMorphism ----

GradedMorphism::GradedMorphism(TateComplex source, TateComplex target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    require_same_ring(source_.ring(), target_.ring());
}

RingElement GradedMorphism::entry(size_t j, size_t k) const {
    auto it = entries_.find({j, k});
    if (it != entries_.end()) return it->second;
    return source_.ring()->zero(entry_bidegree(j, k));
}

void GradedMorphism::set_entry(size_t j, size_t k, const RingElement& v) {
    if (j >= target_.size() || k >= source_.size()) throw ShapeMismatch("morphism index out of range");
    Bidegree want = entry_bidegree(j, k);
    if (v.is_zero()) {
        entries_.erase({j, k});
        return;
    }
    if (!(v.bidegree() == want)) throw ShapeMismatch("morphism entry bidegree mismatch");
    if (BigradedRing::forced_zero(want))
        throw ShapeMismatch("nonzero morphism entry in a forced-zero bidegree");
    if (!source_.ring()->in_window(want)) throw WindowOverflow("morphism entry outside ring window");
    entries_.insert_or_assign({j, k}, v);
}

bool GradedMorphism::is_zero() const {
    for (const auto& [key, v] : entries_)
        if (!v.is_zero()) return false;
    return true;
}

bool GradedMorphism::operator==(const GradedMorphism& o) const {
    if (degree_ != o.degree_) return false;
    if (!source_.same_as(o.source_) || !target_.same_as(o.target_)) return false;
    for (size_t j = 0; j < target_.size(); ++j)
        for (size_t k = 0; k < source_.size(); ++k)
            if (!(entry(j, k) == o.entry(j, k))) return false;
    return true;
}

GradedMorphism GradedMorphism::operator+(const GradedMorphism& o) const {
    if (degree_ != o.degree_ || !source_.same_as(o.source_) || !target_.same_as(o.target_))
        throw ShapeMismatch("morphism sum shape mismatch");
    GradedMorphism r(source_, target_, degree_);
    for (size_t j = 0; j < target_.size(); ++j)
        for (size_t k = 0; k < source_.size(); ++k) {
            RingElement s = entry(j, k) + o.entry(j, k);
            if (!s.is_zero()) r.set_entry(j, k, s);
        }
    return r;
}

GradedMorphism GradedMorphism::operator-(const GradedMorphism& o) const { return *this + (-o); }

GradedMorphism GradedMorphism::operator-() const {
    return scaled(-Scalar::one(source_.ring()->field()));
}

GradedMorphism GradedMorphism::scaled(const Scalar& c) const {
    GradedMorphism r(source_, target_, degree_);
    for (const auto& [key, v] : entries_) {
        RingElement s = v.scaled(c);
        if (!s.is_zero()) r.set_entry(key.first, key.second, s);
    }
    return r;
}

// ---- constructions ----

TateComplex zero_complex(RingPtr ring) { return TateComplex(std::move(ring), {}); }

TateComplex tate_object(RingPtr ring, int p, int q) {
    if (q < 0) throw NonEffectiveTwist("negative twist is not representable");
    return TateComplex(std::move(ring), {Generator{"z", {p, q}}});
}

TateComplex shift(const TateComplex& M, int n) {
    std::vector<Generator> gens = M.generators();
    for (auto& g : gens) g.bd.p += n;
    TateComplex r(M.ring(), std::move(gens));
    Scalar s = sign_of(M.ring()->field(), n);
    for (const auto& [key, v] : M.entries()) r.set_entry(key.first, key.second, v.scaled(s));
    return r;
}

GradedMorphism shift(const GradedMorphism& f, int n) {
    GradedMorphism r(shift(f.source(), n), shift(f.target(), n), f.degree());
    for (const auto& [key, v] : f.entries()) r.set_entry(key.first, key.second, v);
    return r;
}

TateComplex twist(const TateComplex& M, int n) {
    std::vector<Generator> gens = M.generators();
    for (auto& g : gens) {
        if (g.bd.q + n < 0) throw NonEffectiveTwist("twist would make generator " + g.name + " non-effective");
        g.bd.q += n;
    }
    TateComplex r(M.ring(), std::move(gens));
    for (const auto& [key, v] : M.entries()) r.set_entry(key.first, key.second, v);
    return r;
}

GradedMorphism twist(const GradedMorphism& f, int n) {
    GradedMorphism r(twist(f.source(), n), twist(f.target(), n), f.degree());
    for (const auto& [key, v] : f.entries()) r.set_entry(key.first, key.second, v);
    return r;
}

TateComplex direct_sum(const TateComplex& M, const TateComplex& N) {
    require_same_ring(M.ring(), N.ring());
    std::vector<Generator> gens = M.generators();
    gens.insert(gens.end(), N.generators().begin(), N.generators().end());
    TateComplex r(M.ring(), std::move(gens));
    for (const auto& [key, v] : M.entries()) r.set_entry(key.first, key.second, v);
    size_t off = M.size();
    for (const auto& [key, v] : N.entries()) r.set_entry(key.first + off, key.second + off, v);
    return r;
}

GradedMorphism direct_sum_morphism(const GradedMorphism& f, const GradedMorphism& g) {
    if (f.degree() != g.degree()) throw ShapeMismatch("direct sum needs equal degrees");
    GradedMorphism r(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                     f.degree());
    for (const auto& [key, v] : f.entries()) r.set_entry(key.first, key.second, v);
    size_t row_off = f.target().size(), col_off = f.source().size();
    for (const auto& [key, v] : g.entries()) r.set_entry(key.first + row_off, key.second + col_off, v);
    return r;
}

GradedMorphism identity_morphism(const TateComplex& M) {
    GradedMorphism r(M, M, 0);
    for (size_t k = 0; k < M.size(); ++k) r.set_entry(k, k, M.ring()->one());
    return r;
}

GradedMorphism zero_morphism(const TateComplex& M, const TateComplex& N, int degree) {
    return GradedMorphism(M, N, degree);
}

GradedMorphism differential_morphism(const TateComplex& M) {
    GradedMorphism r(M, M, 1);
    for (const auto& [key, v] : M.entries()) r.set_entry(key.first, key.second, v);
    return r;
}

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f) {
    if (!f.target().same_as(g.source())) throw ShapeMismatch("composition: middle objects differ");
    GradedMorphism r(f.source(), g.target(), f.degree() + g.degree());
    const auto& ring = *f.source().ring();
    for (size_t j = 0; j < g.target().size(); ++j)
        for (size_t k = 0; k < f.source().size(); ++k) {
            RingElement acc = ring.zero(r.entry_bidegree(j, k));
            for (size_t m = 0; m < f.target().size(); ++m) {
                RingElement a = g.entry(j, m);
                RingElement b = f.entry(m, k);
                if (a.is_zero() || b.is_zero()) continue;
                acc = acc + ring.mul(a, b);
            }
            if (!acc.is_zero()) r.set_entry(j, k, acc);
        }
    return r;
}

bool is_chain_map(const GradedMorphism& f) {
    GradedMorphism lhs = compose(differential_morphism(f.target()), f);
    if (f.degree() % 2 != 0) lhs = -lhs;
    GradedMorphism rhs = compose(f, differential_morphism(f.source()));
    return (lhs - rhs).is_zero();
}

ConeResult cone(const GradedMorphism& f) {
    if (f.degree() != 0) throw NotChainMap("cone needs a degree-0 chain map");
    if (!is_chain_map(f)) throw NotChainMap("cone input does not commute with the differentials");
    const TateComplex& M = f.source();
    const TateComplex& N = f.target();
    std::vector<Generator> gens;
    gens.reserve(M.size() + N.size());
    for (const auto& g : M.generators()) gens.push_back({g.name, {g.bd.p + 1, g.bd.q}});
    for (const auto& g : N.generators()) gens.push_back(g);
    TateComplex C(M.ring(), std::move(gens));
    size_t off = M.size();
    Scalar minus = -Scalar::one(M.ring()->field());
    for (const auto& [key, v] : M.entries()) C.set_entry(key.first, key.second, v.scaled(minus));
    for (const auto& [key, v] : N.entries()) C.set_entry(key.first + off, key.second + off, v);
    for (const auto& [key, v] : f.entries()) C.set_entry(key.first + off, key.second, v);
    assert_square_zero(C, "cone");

    GradedMorphism incl(N, C, 0);
    for (size_t l = 0; l < N.size(); ++l) incl.set_entry(l + off, l, N.ring()->one());
    GradedMorphism proj(C, shift(M, 1), 0);
    for (size_t k = 0; k < M.size(); ++k) proj.set_entry(k, k, M.ring()->one());
    return ConeResult{C, Triangle{M, N, C, f, incl, proj}};
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "*" + b + ")"; }

}  // namespace

TateComplex tensor(const TateComplex& M, const TateComplex& N) {
    require_same_ring(M.ring(), N.ring());
    const auto& ring = *M.ring();
    std::vector<Generator> gens;
    gens.reserve(M.size() * N.size());
    for (const auto& a : M.generators())
        for (const auto& b : N.generators())
            gens.push_back({pair_name(a.name, b.name), a.bd + b.bd});
    TateComplex T(M.ring(), std::move(gens));
    size_t nN = N.size();
    // delta_M (x) id: sign (-1)^(a*p_l) with a the p-degree of the entry.
    for (const auto& [key, v] : M.entries()) {
        int a = v.bidegree().p;
        for (size_t l = 0; l < nN; ++l) {
            Scalar s = sign_of(ring.field(), a * N.gen(l).bd.p);
            T.set_entry(key.first * nN + l, key.second * nN + l, v.scaled(s));
        }
    }
    // id (x) delta_N: sign (-1)^(p_k).
    for (const auto& [key, v] : N.entries()) {
        for (size_t k = 0; k < M.size(); ++k) {
            Scalar s = sign_of(ring.field(), M.gen(k).bd.p);
            T.set_entry(k * nN + key.first, k * nN + key.second, v.scaled(s));
        }
    }
    assert_square_zero(T, "tensor");
    return T;
}

GradedMorphism tensor_id(const GradedMorphism& f, const TateComplex& N) {
    GradedMorphism r(tensor(f.source(), N), tensor(f.target(), N), f.degree());
    const auto& ring = *N.ring();
    size_t nN = N.size();
    for (const auto& [key, v] : f.entries()) {
        int u = v.bidegree().p;
        for (size_t l = 0; l < nN; ++l) {
            Scalar s = sign_of(ring.field(), u * N.gen(l).bd.p);
            r.set_entry(key.first * nN + l, key.second * nN + l, v.scaled(s));
        }
    }
    return r;
}

GradedMorphism id_tensor(const TateComplex& M, const GradedMorphism& g) {
    GradedMorphism r(tensor(M, g.source()), tensor(M, g.target()), g.degree());
    const auto& ring = *M.ring();
    size_t nSrc = g.source().size();
    size_t nTgt = g.target().size();
    for (const auto& [key, v] : g.entries())
        for (size_t k = 0; k < M.size(); ++k) {
            Scalar s = sign_of(ring.field(), g.degree() * M.gen(k).bd.p);
            r.set_entry(k * nTgt + key.first, k * nSrc + key.second, v.scaled(s));
        }
    return r;
}

GradedMorphism braiding(const TateComplex& M, const TateComplex& N) {
    GradedMorphism r(tensor(M, N), tensor(N, M), 0);
    const auto& ring = *M.ring();
    size_t nN = N.size();
    size_t nM = M.size();
    for (size_t k = 0; k < nM; ++k)
        for (size_t l = 0; l < nN; ++l) {
            Scalar s = sign_of(ring.field(), M.gen(k).bd.p * N.gen(l).bd.p);
            r.set_entry(l * nM + k, k * nN + l, ring.one().scaled(s));
        }
    return r;
}

GradedMorphism interchange_left(const TateComplex& M, const TateComplex& N) {
    GradedMorphism r(tensor(shift(M, 1), N), shift(tensor(M, N), 1), 0);
    for (size_t i = 0; i < r.source().size(); ++i) r.set_entry(i, i, M.ring()->one());
    return r;
}

GradedMorphism interchange_right(const TateComplex& M, const TateComplex& N) {
    GradedMorphism r(tensor(M, shift(N, 1)), shift(tensor(M, N), 1), 0);
    const auto& ring = *M.ring();
    size_t nN = N.size();
    for (size_t k = 0; k < M.size(); ++k) {
        Scalar s = sign_of(ring.field(), M.gen(k).bd.p);
        for (size_t l = 0; l < nN; ++l) r.set_entry(k * nN + l, k * nN + l, ring.one().scaled(s));
    }
    return r;
}

TateComplex base_change(const RingMorphism& rho, const TateComplex& M) {
    if (!rho.source || !rho.target) throw MalformedInput("base change needs a ring morphism");
    if (M.ring().get() != rho.source.get() && !M.ring()->same_structure(*rho.source))
        throw RingMismatch("base change: complex lives over a different ring");
    TateComplex r(rho.target, M.generators());
    for (const auto& [key, v] : M.entries()) {
        RingElement w = rho.apply(v);
        if (!w.is_zero()) r.set_entry(key.first, key.second, w);
    }
    assert_square_zero(r, "base_change");
    return r;
}

GradedMorphism base_change(const RingMorphism& rho, const GradedMorphism& f) {
    GradedMorphism r(base_change(rho, f.source()), base_change(rho, f.target()), f.degree());
    for (const auto& [key, v] : f.entries()) {
        RingElement w = rho.apply(v);
        if (!w.is_zero()) r.set_entry(key.first, key.second, w);
    }
    return r;
}

TateComplex random_object(RingPtr ring, const RandomParams& params, std::uint64_t seed) {
    if (params.max_generators < 1 || params.degree_lo > params.degree_hi || params.max_twist < 0)
        throw MalformedInput("random_object: bad parameters");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    const Field& F = ring->field();
    auto random_nonzero = [&]() {
        if (F.finite()) return Scalar::from_int(F, 1 + draw(static_cast<int>(F.characteristic()) - 1));
        int v = draw(5) - 2;
        if (v == 0) v = 1;
        return Scalar::from_int(F, v);
    };
    int span = params.degree_hi - params.degree_lo + 1;
    TateComplex M = tate_object(ring, params.degree_lo + draw(span), draw(params.max_twist + 1));
    while (static_cast<int>(M.size()) < params.max_generators) {
        TateComplex T = tate_object(ring, params.degree_lo + draw(span), draw(params.max_twist + 1));
        bool into = draw(2) == 0;
        const TateComplex& src = into ? T : M;
        const TateComplex& tgt = into ? M : T;
        GradedMorphism f = zero_morphism(src, tgt, 0);
        try {
            std::vector<GradedMorphism> basis = chain_maps(src, tgt, 0);
            for (const auto& b : basis)
                if (draw(100) < params.density) f = f + b.scaled(random_nonzero());
        } catch (const WindowOverflow&) {
            // This pairing is not representable in the ring window; fall back
            // to a plain summand so the build still makes progress.
        }
        M = cone(f).cone;
    }
    std::vector<Generator> gens = M.generators();
    for (size_t k = 0; k < gens.size(); ++k) gens[k].name = "r" + std::to_string(k);
    TateComplex R(ring, std::move(gens));
    for (const auto& [key, v] : M.entries()) R.set_entry(key.first, key.second, v);
    return R;
}

ValidationReport validate_complex(const TateComplex& M) {
    ValidationReport report;
    if (!M.ring()) {
        report.push_back("complex has no coefficient ring");
        return report;
    }
    for (const auto& g : M.generators())
        if (g.bd.q < 0) report.push_back("generator " + g.name + " has negative twist");
    for (const auto& [key, v] : M.entries()) {
        auto [j, k] = key;
        std::string where = "entry (" + M.gen(j).name + " <- " + M.gen(k).name + ")";
        if (v.is_zero()) continue;
        if (!(v.bidegree() == M.entry_bidegree(j, k))) report.push_back(where + " has the wrong bidegree");
        if (M.gen(j).bd.q < M.gen(k).bd.q) report.push_back(where + " raises into a lower twist");
        if (BigradedRing::forced_zero(v.bidegree())) report.push_back(where + " is nonzero in a forced-zero bidegree");
    }
    GradedMorphism d = differential_morphism(M);
    GradedMorphism sq = compose(d, d);
    for (size_t j = 0; j < M.size(); ++j)
        for (size_t k = 0; k < M.size(); ++k)
            if (!sq.entry(j, k).is_zero())
                report.push_back("differential square is nonzero at (" + M.gen(j).name + " <- " +
                                 M.gen(k).name + "): " + sq.entry(j, k).str());
    return report;
}

ValidationReport validate_morphism(const GradedMorphism& f) {
    ValidationReport report;
    for (const auto& [key, v] : f.entries()) {
        auto [j, k] = key;
        if (v.is_zero()) continue;
        std::string where =
            "entry (" + f.target().gen(j).name + " <- " + f.source().gen(k).name + ")";
        if (!(v.bidegree() == f.entry_bidegree(j, k))) report.push_back(where + " has the wrong bidegree");
        if (BigradedRing::forced_zero(v.bidegree())) report.push_back(where + " is nonzero in a forced-zero bidegree");
    }
    return report;
}

}  // namespace ts
