#pragma once

#include "builtin_rings.hpp"
#include "complex.hpp"
#include "ring.hpp"

namespace ts::testhelp {

inline RingPtr f2tau() {
    static RingPtr r = builtin_ring("f2-tau");
    return r;
}
inline RingPtr f3tau() {
    static RingPtr r = builtin_ring("f3-tau");
    return r;
}
inline RingPtr qtau() {
    static RingPtr r = builtin_ring("q-tau");
    return r;
}

// Multiplication by the weight-(0,1) class, as a chain map z -> z(1).
inline GradedMorphism tau_map(const RingPtr& ring) {
    GradedMorphism f(tate_object(ring, 0, 0), tate_object(ring, 0, 1), 0);
    f.set_entry(0, 0, ring->element("tau"));
    return f;
}

// Two-generator complex z(1)[0] <--tau-- z[1]-shape: the cone of tau_map.
inline TateComplex k_tau(const RingPtr& ring) { return cone(tau_map(ring)).cone; }

// Equality of presentations up to generator names (bidegrees and entries).
inline bool same_entries(const TateComplex& a, const TateComplex& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (!(a.gen(k).bd == b.gen(k).bd)) return false;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = 0; k < a.size(); ++k)
            if (!(a.entry(j, k) == b.entry(j, k))) return false;
    return true;
}

}  // namespace ts::testhelp
