#pragma once

#include <map>
#include <optional>
#include <vector>

#include "complex.hpp"
#include "matrix.hpp"

namespace ts {

// D(h) = (-1)^d delta_target h + h delta_source, where d = h.degree() + 1 is
// the degree of the result. Closed degree-d maps modulo the image of D are
// the maps up to homotopy.
GradedMorphism boundary_of(const GradedMorphism& h);

// Linear system whose unknowns are graded morphisms and whose equations are
// sums of constant-coefficient sandwiches  sum_i c_i * left_i . T(u_i) . right_i = rhs,
// where T may first shift the unknown or tensor it with an identity. All
// transforms act entrywise-linearly, so the system stays linear.
class MorphismSolver {
public:
    struct Term {
        int unknown;
        std::optional<GradedMorphism> left;   // defaults to identity on u.target
        std::optional<GradedMorphism> right;  // defaults to identity on u.source
        Scalar coeff;
        int shift_by = 0;                          // u -> shift(u, shift_by)
        std::optional<TateComplex> tensor_right{};  // u -> u (x) id_W
        std::optional<TateComplex> tensor_left{};   // u -> id_W (x) u
    };

    int add_unknown(const TateComplex& source, const TateComplex& target, int degree);
    void add_equation(std::vector<Term> terms, const GradedMorphism& rhs);

    std::optional<std::vector<GradedMorphism>> solve() const;
    std::vector<std::vector<GradedMorphism>> kernel_basis() const;

private:
    struct Slot {
        size_t j, k;       // target/source generator indices
        Bidegree bd;
        size_t offset;     // column offset of this slot's first coordinate
        size_t dim;
    };
    struct Unknown {
        TateComplex source, target;
        int degree;
        std::vector<Slot> slots;
        size_t offset = 0;  // global column offset
        size_t total = 0;
    };
    struct Equation {
        std::vector<Term> terms;
        GradedMorphism rhs;
    };

    GradedMorphism unit_column(const Unknown& u, size_t column_in_unknown) const;
    void assemble(Matrix& A, std::vector<Scalar>& b) const;
    std::vector<GradedMorphism> unflatten(const std::vector<Scalar>& x) const;

    std::vector<Unknown> unknowns_;
    std::vector<Equation> equations_;
    size_t columns_ = 0;
};

// Basis of the closed degree-d maps M -> N (no homotopies quotiented out).
std::vector<GradedMorphism> chain_maps(const TateComplex& M, const TateComplex& N, int degree);

// Closed degree-d maps modulo boundaries, with chosen representatives.
class HomSpace {
public:
    int dim() const { return dim_; }
    int closed_dim() const { return closed_dim_; }
    int boundary_dim() const { return boundary_dim_; }
    const std::vector<GradedMorphism>& representatives() const { return reps_; }

    // Coordinates of a closed map with respect to the representatives,
    // modulo boundaries. Throws NotChainMap if f is not closed.
    std::vector<Scalar> coordinates_of(const GradedMorphism& f) const;

private:
    friend HomSpace hom_space(const TateComplex&, const TateComplex&, int);
    struct Slot {
        size_t j, k;
        Bidegree bd;
        size_t offset;
        size_t dim;
    };
    std::vector<Scalar> flatten(const GradedMorphism& f) const;

    TateComplex source_, target_;
    int degree_ = 0;
    int dim_ = 0, closed_dim_ = 0, boundary_dim_ = 0;
    std::vector<GradedMorphism> reps_;
    std::vector<Slot> slots_;
    size_t total_ = 0;
    Matrix decode_{0, 0, Field::prime(2)};  // [boundary basis | representative basis]
    size_t boundary_cols_ = 0;
};

HomSpace hom_space(const TateComplex& M, const TateComplex& N, int degree);

std::optional<GradedMorphism> is_nullhomotopic(const GradedMorphism& f);

struct HomotopyTable {
    std::map<Bidegree, int> dims;        // only computable spots are present
    std::vector<Bidegree> skipped;       // spots whose hom space left the ring window
};
HomotopyTable homotopy_groups(const TateComplex& M, int p_lo, int p_hi, int q_lo, int q_hi);
HomotopyTable homotopy_groups(const TateComplex& M);

// Exhaustive-enumeration cross-check of hom_space(...).dim() over a finite
// field. Counts closed maps and boundaries by brute force, sharing no linear
// algebra with hom_space. bound caps the enumeration at 2^bound candidates
// (default from TATE_SLICE_ORACLE_BOUND, else 20).
int brute_oracle_hom(const TateComplex& M, const TateComplex& N, int degree, int bound = -1);

struct Minimization {
    TateComplex reduced;
    GradedMorphism incl;      // reduced -> M
    GradedMorphism retr;      // M -> reduced, retr . incl = id
    GradedMorphism homotopy;  // id_M - incl . retr = D(homotopy)
};
// Splits off invertible differential entries until none remain. The reduced
// complex has no unit entries in its differential and is homotopy equivalent
// to the input via the recorded maps.
Minimization minimize(const TateComplex& M);

bool is_contractible(const TateComplex& M);
// Two-sided inverse up to homotopy of a degree-0 chain map, if one exists.
std::optional<GradedMorphism> homotopy_inverse(const GradedMorphism& f);
bool is_isomorphism(const GradedMorphism& f);  // degree-0 chain map invertible up to homotopy
bool is_distinguished(const Triangle& T);

}  // namespace ts
