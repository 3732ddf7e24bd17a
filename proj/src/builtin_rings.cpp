#include "builtin_rings.hpp"

#include "errors.hpp"

namespace ts {

BigradedRing::Window default_window() { return {-6, 6, 4}; }

const std::vector<std::string>& builtin_ring_names() {
    static const std::vector<std::string> names = {
        "unit-Q",    "unit-F2",    "unit-F3",       "f2-tau",        "q-tau",
        "f3-tau",    "f2-rho-tau", "q-rho-tau",     "f3-rho-tau",    "f2-exterior-e",
        "q-exterior-e", "f3-exterior-e"};
    return names;
}

RingPtr builtin_ring(const std::string& name) { return builtin_ring(name, default_window()); }

RingPtr builtin_ring(const std::string& name, const BigradedRing::Window& w) {
    auto field_of = [&](const std::string& n) {
        if (n.rfind("f2", 0) == 0) return Field::prime(2);
        if (n.rfind("f3", 0) == 0) return Field::prime(3);
        return Field::rationals();
    };
    if (name == "unit-Q") return make_polynomial_ring(Field::rationals(), {}, {}, w);
    if (name == "unit-F2") return make_polynomial_ring(Field::prime(2), {}, {}, w);
    if (name == "unit-F3") return make_polynomial_ring(Field::prime(3), {}, {}, w);
    if (name == "f2-tau" || name == "q-tau" || name == "f3-tau")
        return make_polynomial_ring(field_of(name), {{"tau", {0, 1}}}, {}, w);
    if (name == "f2-rho-tau" || name == "q-rho-tau" || name == "f3-rho-tau")
        return make_polynomial_ring(field_of(name), {{"rho", {1, 1}}, {"tau", {0, 1}}}, {}, w);
    if (name == "f2-exterior-e" || name == "q-exterior-e" || name == "f3-exterior-e")
        return make_polynomial_ring(field_of(name), {{"e", {1, 0}}}, {}, w);
    throw UnknownRing("no builtin ring named '" + name + "'");
}

}  // namespace ts
