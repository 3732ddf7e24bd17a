#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ts {

struct Generator {
    std::string name;
    Bidegree bd;
    bool operator==(const Generator& o) const { return name == o.name && bd == o.bd; }
};

// Finite twisted complex: generators z(q_k)[p_k] with a square-zero matrix
// differential over the coefficient ring. Entry (j,k) maps generator k into
// generator j and lives in ring bidegree (p_j - p_k + 1, q_j - q_k).
class TateComplex {
public:
    TateComplex() = default;
    TateComplex(RingPtr ring, std::vector<Generator> gens);

    const RingPtr& ring() const { return ring_; }
    size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(size_t k) const { return gens_[k]; }

    Bidegree entry_bidegree(size_t j, size_t k) const {
        return {gens_[j].bd.p - gens_[k].bd.p + 1, gens_[j].bd.q - gens_[k].bd.q};
    }
    RingElement entry(size_t j, size_t k) const;
    // Nonzero out-of-window values throw WindowOverflow; forced-zero
    // bidegrees only accept zero. Zero values clear the slot.
    void set_entry(size_t j, size_t k, const RingElement& v);
    const std::map<std::pair<size_t, size_t>, RingElement>& entries() const { return diff_; }

    bool same_as(const TateComplex& o) const;  // identical presentation

private:
    RingPtr ring_;
    std::vector<Generator> gens_;
    std::map<std::pair<size_t, size_t>, RingElement> diff_;
};

// Degree-d matrix of ring elements between two complexes. Entry (j,k) lives
// in bidegree (p_j - p_k + d, q_j - q_k). Chain maps are degree 0 with
// delta_N f = f delta_M; for general degree d the closed condition is
// (-1)^d delta_N f = f delta_M (= degree-0 maps into the d-fold shift).
class GradedMorphism {
public:
    GradedMorphism() = default;
    GradedMorphism(TateComplex source, TateComplex target, int degree);

    const TateComplex& source() const { return source_; }
    const TateComplex& target() const { return target_; }
    int degree() const { return degree_; }

    Bidegree entry_bidegree(size_t j, size_t k) const {
        return {target_.gen(j).bd.p - source_.gen(k).bd.p + degree_,
                target_.gen(j).bd.q - source_.gen(k).bd.q};
    }
    RingElement entry(size_t j, size_t k) const;
    void set_entry(size_t j, size_t k, const RingElement& v);
    const std::map<std::pair<size_t, size_t>, RingElement>& entries() const { return entries_; }

    bool is_zero() const;
    bool operator==(const GradedMorphism& o) const;
    GradedMorphism operator+(const GradedMorphism& o) const;
    GradedMorphism operator-(const GradedMorphism& o) const;
    GradedMorphism operator-() const;
    GradedMorphism scaled(const Scalar& c) const;

private:
    TateComplex source_, target_;
    int degree_ = 0;
    std::map<std::pair<size_t, size_t>, RingElement> entries_;
};

// X --f--> Y --g--> Z --h--> X[1]
struct Triangle {
    TateComplex X, Y, Z;
    GradedMorphism f, g, h;
};

// ---- constructions ----

TateComplex zero_complex(RingPtr ring);
TateComplex tate_object(RingPtr ring, int p, int q);  // single generator z(q)[p]

TateComplex shift(const TateComplex& M, int n);
GradedMorphism shift(const GradedMorphism& f, int n);
TateComplex twist(const TateComplex& M, int n);
GradedMorphism twist(const GradedMorphism& f, int n);

TateComplex direct_sum(const TateComplex& M, const TateComplex& N);
// Block-diagonal sum of two morphisms of equal degree.
GradedMorphism direct_sum_morphism(const GradedMorphism& f, const GradedMorphism& g);

GradedMorphism identity_morphism(const TateComplex& M);
GradedMorphism zero_morphism(const TateComplex& M, const TateComplex& N, int degree);
// The differential viewed as a degree-1 endomorphism.
GradedMorphism differential_morphism(const TateComplex& M);

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f);

bool is_chain_map(const GradedMorphism& f);  // the twisted closed condition above

struct ConeResult {
    TateComplex cone;
    Triangle triangle;  // M -> N -> cone -> M[1]
};
ConeResult cone(const GradedMorphism& f);

TateComplex tensor(const TateComplex& M, const TateComplex& N);
GradedMorphism tensor_id(const GradedMorphism& f, const TateComplex& N);   // f (x) id_N
GradedMorphism id_tensor(const TateComplex& M, const GradedMorphism& g);   // id_M (x) g
GradedMorphism braiding(const TateComplex& M, const TateComplex& N);       // M(x)N -> N(x)M
// (M[1]) (x) N -> (M (x) N)[1]  (identity entries)
GradedMorphism interchange_left(const TateComplex& M, const TateComplex& N);
// M (x) (N[1]) -> (M (x) N)[1]  (signs on the left factor)
GradedMorphism interchange_right(const TateComplex& M, const TateComplex& N);

TateComplex base_change(const RingMorphism& rho, const TateComplex& M);
GradedMorphism base_change(const RingMorphism& rho, const GradedMorphism& f);

struct RandomParams {
    int max_generators = 4;
    int max_twist = 2;
    int degree_lo = -1;
    int degree_hi = 2;
    int density = 60;  // percent chance each solution-basis map enters a cone step
};
TateComplex random_object(RingPtr ring, const RandomParams& params, std::uint64_t seed);

ValidationReport validate_complex(const TateComplex& M);
ValidationReport validate_morphism(const GradedMorphism& f);

}  // namespace ts
