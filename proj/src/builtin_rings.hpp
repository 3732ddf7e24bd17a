#pragma once

#include <string>
#include <vector>

#include "ring.hpp"

namespace ts {

// Named example rings. Throws UnknownRing for names not in builtin_ring_names().
RingPtr builtin_ring(const std::string& name);
RingPtr builtin_ring(const std::string& name, const BigradedRing::Window& window);

const std::vector<std::string>& builtin_ring_names();

BigradedRing::Window default_window();

}  // namespace ts
