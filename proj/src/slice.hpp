#pragma once

#include <utility>
#include <vector>

#include "complex.hpp"
#include "homalg.hpp"
#include "inthom.hpp"

namespace ts {

// Subcomplex spanned by the generators of twist at least n. Twist
// monotonicity of differentials makes this span closed under the
// differential, so no further data is needed.
TateComplex pi_ge(const TateComplex& M, int n);

// Quotient by that subcomplex: the generators of twist below n, with the
// mixed entries dropped.
TateComplex pi_lt(const TateComplex& M, int n);

// The triangle  pi_ge -> M -> pi_lt -> pi_ge[1]  with the canonical
// inclusion, projection, and the connecting map carried by the mixed block
// of the differential. Distinguished-ness is certified on every call.
Triangle slice_triangle(const TateComplex& M, int n);

// The weight-n subquotient: generators of twist exactly n with the entries
// between them. Certified on every call against the cone of the inclusion
// pi_ge(M, n+1) -> pi_ge(M, n).
TateComplex slice(const TateComplex& M, int n);

// All nonzero weights of M: (n, minimal model of the weight-n subquotient),
// in increasing n, omitting weights whose subquotient is contractible.
std::vector<std::pair<int, TateComplex>> slices(const TateComplex& M);

// Weight-i block of a morphism. Exactly a chain map, of the same degree.
GradedMorphism slice_morphism(const GradedMorphism& f, int i);

// A degree-0 chain map is upper triangular for the twist filtration; its
// diagonal blocks commute with the inclusion and projection squares exactly
// and with the connecting maps up to the recorded homotopy (the off-diagonal
// block, negated).
struct SlicedMorphism {
    GradedMorphism ge;       // pi_ge(source, n) -> pi_ge(target, n)
    GradedMorphism lt;       // pi_lt(source, n) -> pi_lt(target, n)
    GradedMorphism sn;       // slice(source, n) -> slice(target, n)
    GradedMorphism witness;  // connecting squares commute up to this homotopy
};
SlicedMorphism induced_slice_morphism(const GradedMorphism& f, int n);

// pi_ge(M, n), exhibited as the n-fold twist of a complex of maps out of
// z(n). compare is the tautological identification.
struct PiGeViaHom {
    TateComplex object;       // maps z(n) -> M, as a complex
    GradedMorphism compare;   // twist(object, n) -> pi_ge(M, n)
};
PiGeViaHom pi_ge_via_hom(const TateComplex& M, int n);

// pi_lt(M, n), recovered as the double dual against z(n-1). psi is the
// universal-property map from M, compare the strict identification of the
// double dual with the quotient, and the two agree with the canonical
// projection up to homotopy. Needs n >= 1.
struct PiLtViaDual {
    TateComplex object;      // double dual of the twist-below-n quotient
    GradedMorphism psi;      // M -> object, solved from the pairings
    GradedMorphism compare;  // object -> pi_lt(M, n), a strict iso
    GradedMorphism witness;  // pairing compatibility homotopy for psi
};
PiLtViaDual pi_lt_via_dual(const TateComplex& M, int n);

// Certifies that  a : M0 -> M1,  b : M1 -> M2  is a weight-decomposition
// triangle at n: M0 carries the weights >= n, M2 the weights < n, and the
// pair glues into a distinguished triangle. Throws ConditionFailed with the
// index of the first failing requirement:
//   1  the minimal model of M0 has a generator of twist below n
//   2  the minimal model of M2 has a generator of twist at least n
//   3  a is not a weight equivalence in some weight >= n
//   4  b is not a weight equivalence in some weight < n
//   5  maps M0 -> M2 do not all vanish up to homotopy
//   6  b after a is not null-homotopic
//   7  the glued map cone(a) -> M2 is not invertible up to homotopy
//   8  the comparison with the canonical triangle of M1 does not exist
//      or is not invertible
struct RecognizedSliceTriangle {
    Triangle triangle;        // M0 -> M1 -> M2 with the induced connecting map
    GradedMorphism glue;      // cone(a) -> M2
    GradedMorphism to_pi_ge;  // M0 -> pi_ge(M1, n), equivalence under M1
    GradedMorphism to_pi_lt;  // M2 -> pi_lt(M1, n), equivalence over M1
};
RecognizedSliceTriangle recognize_slice_triangle(const GradedMorphism& a, const GradedMorphism& b,
                                                 int n);

}  // namespace ts
