#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ring.hpp"
#include "serialize.hpp"

namespace ts {

// Batch verification of the library's structural claims over a seeded corpus
// of random objects and morphisms. Each named check sweeps one family of
// identities (truncation orthogonality, slice decompositions, duality
// comparisons, triangle axioms, oracle cross-checks) and records a pass/fail
// per instance. Reports are deterministic for a fixed config: records are
// sorted by a canonical key and the only run-dependent field is the timing,
// which the serialized form can omit.

// Check names accepted by SuiteConfig::checks, in canonical order.
const std::vector<std::string>& suite_check_names();

struct SuiteConfig {
    std::string ring_spec = "builtin:f2-tau";         // "builtin:NAME" or a ring file path
    std::optional<BigradedRing::Window> window;       // window override for builtin rings
    int objects = 8;                                  // random corpus size
    int max_generators = 3;
    int max_twist = 2;
    int probes = 3;                                   // representability probe budget
    std::uint64_t seed = 1;
    std::vector<std::string> checks;                  // empty = all of suite_check_names()

    RingPtr resolve_ring() const;
    Json to_json() const;
};

struct CheckRecord {
    std::string check;     // which family
    std::string instance;  // which inputs, human-readable and unique per family
    bool pass = false;
    bool skipped = false;  // instance left the ring window or needs a finite field
    std::string note;
    Json witness;          // on failure: self-contained inputs for replay_check
    long long micros = 0;

    Json to_json(bool with_timing) const;
};

struct Report {
    Json config;
    std::vector<CheckRecord> records;  // sorted by (check, instance)
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    bool all_passed() const { return failed == 0; }
    Json to_json(bool with_timing = true) const;
    std::string text() const;
};

Report run_suite(const SuiteConfig& cfg);

// Re-runs one serialized check instance (the witness a failing record
// carries). The same bytes always reproduce the same outcome, so a recorded
// failure re-fails identically.
CheckRecord replay_check(const Json& witness);

}  // namespace ts
