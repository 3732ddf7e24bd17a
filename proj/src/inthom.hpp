#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "homalg.hpp"

namespace ts {

// A dual object together with its evaluation pairing
//   evaluation : dual (x) argument -> z(twist)[shift_deg].
struct InternalHom {
    TateComplex dual;
    GradedMorphism evaluation;
    TateComplex argument;
    int twist = 0;
    int shift_deg = 0;
};

// Dual of the twist-at-most-n quotient of M against z(n)[s]. Generators of
// twist above n do not pair into z(n) and are dropped; the remaining ones
// dualize to (s - p, n - q) with the evaluation given by the identity
// pairing. The evaluation is asserted to be a chain map.
InternalHom dualize_to(const TateComplex& M, int n, int s);
InternalHom dualize(const TateComplex& M, int n);  // s = 0

// Contravariant dual of a degree-0 chain map: dualize(N,n).dual -> dualize(M,n).dual.
GradedMorphism dual_morphism(const GradedMorphism& f, int n);

// Checks the universal property of an internal hom candidate by probing:
// for probe objects P and representable shifts d, pairing with the
// evaluation must identify maps P -> dual of degree d with maps
// P (x) argument -> z(twist)[shift] of degree d, up to homotopy.
struct InthomVerification {
    int probes = 0;
    int checks = 0;
    int skipped = 0;  // shifts whose hom spaces leave the ring window
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
InthomVerification verify_inthom(const InternalHom& ih, std::uint64_t seed = 0);

// Canonical comparison between two internal-hom candidates for the same
// argument and target: the unique-up-to-homotopy map intertwining the
// evaluations. Throws NoSolution / NotUnique, and Error when the comparison
// exists but is not invertible.
struct InthomComparison {
    GradedMorphism iso;      // a.dual -> b.dual
    GradedMorphism witness;  // evaluations agree up to this homotopy
};
InthomComparison compare_inthoms(const InternalHom& a, const InternalHom& b);

// Compatibility of dualization with the shift, in both directions.
struct ShiftCompat {
    GradedMorphism desuspend;  // dualize(shift(M,1), n).dual -> shift(dualize(M, n).dual, -1)
    GradedMorphism suspend;    // dualize_to(M, n, 1).dual   -> shift(dualize(M, n).dual, 1)
};
ShiftCompat shift_compat(const TateComplex& M, int n);

// Internal hom of a cone, assembled as the cone of the dualized connecting
// map, with an evaluation solved from the two gluing squares. The returned
// triangle is dual(cone) -> dual(middle) -> dual(source) -> [1].
struct ConeInthom {
    InternalHom hom;
    Triangle dual_triangle;
    GradedMorphism left_witness;   // evaluation restricted along the inclusion
    GradedMorphism right_witness;  // evaluation against the cone input
};
ConeInthom inthom_of_cone(const GradedMorphism& f, int n);

// dual(X, n) (x) dual(Y, m) as an internal hom of X (x) Y at twist n + m.
// Requires every twist of X at most n and of Y at most m.
InternalHom tensor_inthom(const TateComplex& X, const TateComplex& Y, int n, int m);

}  // namespace ts
