#pragma once

#include <cstdint>
#include <string>

#include "lcanet/dag.hpp"
#include "lcanet/relation.hpp"

namespace lcanet {

// Deterministic input generation for the property-test suite. The same spec
// always produces the same object: the PRNG is std::mt19937_64 seeded
// directly, consumed as raw 64-bit draws ("mt19937_64/raw"), never through
// standard-library distributions (their streams are not pinned by the
// standard).
struct RandomSpec {
    enum class Mode { relation, dag };

    std::size_t leaf_count = 0;
    double constraint_density = 0.0;   // fact probability / arc probability
    std::uint64_t seed = 0;
    Mode mode = Mode::relation;
};

std::string to_string(const RandomSpec& spec);

// "a".."z" for n <= 26, otherwise zero-padded "l000", "l001", ...
LeafSet default_leaf_set(std::size_t n);

// Literal fixpoint under the closure rules: reflexivity once, then full
// triple scans (transitivity) and full sextuple scans (cross-consistency),
// inserting as it goes, repeated until a whole sweep adds nothing. No
// worklists, no indexes; this is the oracle the engine is checked against
// and must stay independent of it.
Relation naive_plus_closure(const Relation& R);

// A DAG G with extract_leq(G) exactly equal to R+: the canonical network with
// a pair of gadget parents added over every two-element pair outside supp+,
// which makes that pair's LCA ambiguous. Throws NotRealizable.
Dag build_tight_witness(const Relation& R);

// Each ordered fact (p, q) is included independently with probability
// constraint_density. Requires mode == relation.
Relation random_relation(const RandomSpec& spec);

// A random DAG on default_leaf_set(leaf_count): a topologically ordered set
// of internal vertices wired downward with arc probability derived from
// constraint_density; internal vertices that drew no child get a forced leaf
// child, so sinks are exactly the leaves. Requires mode == dag.
Dag random_dag(const RandomSpec& spec);

} // namespace lcanet
