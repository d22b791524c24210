#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcanet/canonical.hpp"
#include "lcanet/closure.hpp"
#include "lcanet/dag.hpp"
#include "lcanet/relation.hpp"

namespace lcanet {

// R_S: R plus (aa,ab) and (bb,ab) for every two-element pair ab that occurs
// in S but not in supp+_R. Throws LeafSetMismatch.
Relation augment(const Relation& R, const Relation& S);

struct PairVerdict {
    bool ok = false;
    // Realizability of the augmented relation R_S (condition (a)).
    RealizabilityVerdict base;
    // Condition (b) witnesses: S entries {p,q} with p and q comparable in
    // R_S+. One entry per unordered constraint, ordered (lesser PairId first),
    // sorted.
    std::vector<std::pair<Pair, Pair>> comparability_violations;
    // N_{R_S} when ok.
    std::optional<Dag> network;
};

// Joint realization of order constraints R and incomparability constraints S.
// S is interpreted symmetrically. Entries (p,p) in S are rejected with
// InvalidInput: a vertex is never incomparable with itself, so such an entry
// is a malformed constraint, not an unrealizable one.
//
// Succeeds iff R_S is realizable and no S entry is comparable in R_S+; the
// returned network is re-verified to leave every S pair's LCAs incomparable.
PairVerdict realize_pair(const Relation& R, const Relation& S);

} // namespace lcanet
