#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gausslink/bracket.hpp"
#include "gausslink/diagram.hpp"
#include "gausslink/moves.hpp"

namespace gausslink {

struct VerifySuiteConfig {
    uint64_t random_seed = 0;
    int trials = 1000;
    int max_crossings = 12;
    std::vector<MoveKind> kinds = all_move_kinds();
};

struct Counterexample {
    std::string gauss_code;
    std::string site_json;
    long long expected = 0;
    long long actual = 0;
};

struct Verdict {
    std::string claim_id;
    bool pass = false;
    long long checks = 0;  // individual assertions evaluated
    std::string detail;
    std::optional<Counterexample> counterexample;
};

/// Deterministic pseudo-random valid diagram: arrow count <= max_crossings,
/// endpoints on uniformly random slots, random signs and directions; every
/// component length comes out even.
GaussDiagram random_diagram(uint64_t seed, int components, int max_crossings);

/// Theorem-checking harness. Each check replays deterministically from the
/// config seed and ships a replayable counterexample on failure.
Verdict check_s_invariance(const VerifySuiteConfig& cfg);
Verdict check_t_behavior(const VerifySuiteConfig& cfg);
Verdict check_relators(const VerifySuiteConfig& cfg);
Verdict check_table2(const VerifySuiteConfig& cfg);

std::vector<Verdict> run_all_checks(const VerifySuiteConfig& cfg);
std::vector<Verdict> run_checks(const VerifySuiteConfig& cfg,
                                const std::vector<std::string>& claim_ids);

std::string verdict_to_json(const Verdict& v);

/// The three subtraction relators: each is a (before - after) pair of
/// based two-circle two-arrow fragments read off the Omega3a triangle,
/// indexed by which strand (0 = top, 1 = middle, 2 = bottom) sits alone on
/// the second circle. Patterns carry the fragment's signs; `mode` controls
/// how they are matched.
PatternSum relator_pattern_sum(int lone_strand, Equivalence mode);

/// The same relators as plain diagram pairs (before, after), for pairing
/// patterns against them.
std::pair<GaussDiagram, GaussDiagram> relator_diagrams(int lone_strand);

}  // namespace gausslink
