#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcanet/relation.hpp"

namespace lcanet {

// How many facts each rule inserted first. R1 counts one fact per supp+
// member whose reflexive fact was not already in R. The R2/R3 split depends
// on the worklist schedule and is diagnostic only; the closure itself is the
// unique least fixpoint and schedule-independent.
struct RuleCounters {
    std::uint64_t r1 = 0;
    std::uint64_t r2 = 0;
    std::uint64_t r3 = 0;
};

struct ClosureResult {
    Relation closure;                 // R+
    std::vector<Pair> support_plus;   // supp+_R, sorted by PairId
    Bitset support_plus_mask;         // same set as a bitset over pair ids
    RuleCounters rule_applications;
};

// The +-closure: least relation containing R that is reflexive on supp+_R,
// transitive, and cross-consistent. Worklist evaluation; reflexivity is
// applied once up front, after which the support never grows (asserted at
// the fixpoint).
ClosureResult plus_closure(const Relation& R);

// Condition X1 violations: all (ab, xx) in R+ with ab != xx, sorted by
// (PairId, PairId). Empty iff X1 holds.
std::vector<std::pair<Pair, Pair>> check_x1(const ClosureResult& closure);

// Condition X2 violations. A violation exists when (ab, xy) is in tc(R),
// (xy, ab) is not in tc(R), and yet (xy, ab) is in R+. Each reported entry is
// the forbidden closure fact (xy, ab), sorted by (PairId, PairId). Empty iff
// X2 holds.
std::vector<std::pair<Pair, Pair>> check_x2(const Relation& R, const ClosureResult& closure);

struct RealizabilityVerdict {
    bool realizable = false;
    std::vector<std::pair<Pair, Pair>> x1_violations;
    std::vector<std::pair<Pair, Pair>> x2_violations;
    // Realizable with tc(R) asymmetric.
    bool strict = false;
    // Present iff tc(R) is not asymmetric: a fact (p, q) of tc(R) whose
    // reverse also holds.
    std::optional<std::pair<Pair, Pair>> asymmetry_witness;
};

// Realizable iff X1 and X2 hold for R+. The verdict always carries the strict
// answer as well.
RealizabilityVerdict is_realizable(const Relation& R);
RealizabilityVerdict is_strictly_realizable(const Relation& R);

// Same verdict from an already computed closure of R; avoids re-closing when
// the caller needs both.
RealizabilityVerdict evaluate_realizability(const Relation& R, const ClosureResult& closure);

// cl(R) for realizable R; equals R+. Throws NotRealizable otherwise.
Relation classical_closure(const Relation& R);

} // namespace lcanet
