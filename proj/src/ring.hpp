#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace ts {

struct Bidegree {
    int p = 0;
    int q = 0;
    bool operator==(const Bidegree& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Bidegree& o) const { return !(*this == o); }
    bool operator<(const Bidegree& o) const { return p != o.p ? p < o.p : q < o.q; }
    Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
    Bidegree operator-(const Bidegree& o) const { return {p - o.p, q - o.q}; }
};

// Accumulates human-readable invariant violations; empty means valid.
using ValidationReport = std::vector<std::string>;

class BigradedRing;
using RingPtr = std::shared_ptr<const BigradedRing>;

// Homogeneous element of one bigraded piece. coeffs is indexed by the
// ring's ordered basis of that bidegree (size 0 when the piece is zero).
class RingElement {
public:
    RingElement() = default;
    RingElement(const BigradedRing* ring, Bidegree bd, std::vector<Scalar> coeffs)
        : ring_(ring), bd_(bd), coeffs_(std::move(coeffs)) {}

    const BigradedRing* ring() const { return ring_; }
    Bidegree bidegree() const { return bd_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    bool is_zero() const;
    bool operator==(const RingElement& o) const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(const Scalar& c) const;

    std::string str() const;  // e.g. "tau + rho*tau", "0"

private:
    const BigradedRing* ring_ = nullptr;
    Bidegree bd_{0, 0};
    std::vector<Scalar> coeffs_;
};

// A finitely supported bigraded algebra over an exact field, given by an
// ordered basis per bidegree and an extensional multiplication table.
// Immutable after construction.
class BigradedRing {
public:
    struct Window {
        int p_min, p_max, q_max;
        bool operator==(const Window& o) const {
            return p_min == o.p_min && p_max == o.p_max && q_max == o.q_max;
        }
    };
    struct Symbol {
        std::string name;
        Bidegree bd;
    };
    // target expansion of a product of two basis symbols, by symbol name
    using Expansion = std::vector<std::pair<std::string, Scalar>>;

    BigradedRing(Field base, Window window, std::vector<Symbol> symbols, std::string unit,
                 std::map<std::pair<std::string, std::string>, Expansion> table);

    const Field& field() const { return base_; }
    const Window& window() const { return window_; }

    bool in_window(Bidegree bd) const {
        return bd.p >= window_.p_min && bd.p <= window_.p_max && bd.q >= 0 && bd.q <= window_.q_max;
    }
    // Bidegrees where the ring vanishes identically, window or not.
    static bool forced_zero(Bidegree bd) { return bd.q < 0 || (bd.q == 0 && bd.p < 0); }

    size_t dim(Bidegree bd) const;
    const std::vector<std::string>& basis(Bidegree bd) const;  // empty for absent pieces

    const std::vector<Symbol>& symbols() const { return symbols_; }
    const std::string& unit_name() const { return unit_; }
    std::optional<Bidegree> symbol_bidegree(const std::string& name) const;

    RingElement zero(Bidegree bd) const;
    RingElement one() const;
    // The basis symbol as an element; MalformedInput if unknown.
    RingElement element(const std::string& name) const;
    RingElement element(Bidegree bd, const std::vector<Scalar>& coeffs) const;

    // Bilinear product. Forced-zero targets give zero; a nonzero*nonzero
    // product landing outside the window throws WindowOverflow.
    RingElement mul(const RingElement& x, const RingElement& y) const;

    // Product of two basis symbols (by global index); zero when omitted.
    const RingElement& table_entry(size_t left, size_t right) const;

    size_t symbol_count() const { return symbols_.size(); }
    size_t symbol_index(const std::string& name) const;  // MalformedInput if unknown
    // (bidegree, position) -> global symbol index
    size_t global_index(Bidegree bd, size_t pos) const;

    // Inverse in the (0,0) part if one exists (solves x*a = a*x = 1).
    std::optional<RingElement> invert(const RingElement& a) const;

    bool same_structure(const BigradedRing& o) const;

private:
    Field base_;
    Window window_;
    std::vector<Symbol> symbols_;
    std::string unit_;
    std::map<Bidegree, std::vector<std::string>> basis_;
    std::map<Bidegree, std::vector<size_t>> basis_global_;
    std::map<std::string, size_t> index_;
    std::map<std::pair<size_t, size_t>, RingElement> table_;
    RingElement zero_elt_;  // shared zero of an absent bidegree

    friend ValidationReport validate_ring(const BigradedRing&);
};

ValidationReport validate_ring(const BigradedRing& H);

// Bidegree-preserving map given on basis symbols.
struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::map<std::string, RingElement> images;  // every source symbol

    RingElement apply(const RingElement& x) const;
};

ValidationReport validate_ring_morphism(const RingMorphism& rho);

struct PolyGenerator {
    std::string name;
    Bidegree bd;
};
// relation: the monomial with these generator exponents is zero
using MonomialRelation = std::vector<int>;

// Free graded-commutative algebra on the generators (signs on odd p only;
// odd-p generators square to zero away from characteristic 2), modulo
// monomial relations, truncated to the window.
RingPtr make_polynomial_ring(const Field& base, const std::vector<PolyGenerator>& gens,
                             const std::vector<MonomialRelation>& relations,
                             const BigradedRing::Window& window);

}  // namespace ts
