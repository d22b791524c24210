#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcanet/closure.hpp"
#include "lcanet/dag.hpp"
#include "lcanet/relation.hpp"

namespace lcanet {

using ClassId = std::uint32_t;

// The partition of supp+_R by mutual R+ membership. Class ids are assigned in
// increasing order of the representative (least member), so the partition is
// canonical.
struct ClassPartition {
    static constexpr std::int32_t none = -1;
    std::vector<std::int32_t> class_of;      // PairId -> ClassId, none outside supp+
    std::vector<std::vector<Pair>> members;  // per class, sorted by PairId
    std::vector<Pair> representative;        // least member of each class

    std::size_t count() const { return members.size(); }
};

ClassPartition equivalence_classes(const ClosureResult& closure);

// [p] <= [q] iff p R+ q; independent of the chosen representatives. Reflexive,
// transitive and antisymmetric by construction of the partition.
class ClassOrder {
public:
    ClassOrder(std::size_t count) : count_(count), leq_(count * count) {}

    bool le(ClassId p, ClassId q) const { return leq_.test(p * count_ + q); }
    void set(ClassId p, ClassId q) { leq_.set(p * count_ + q); }
    std::size_t count() const { return count_; }

private:
    std::size_t count_;
    Bitset leq_;
};

ClassOrder class_order(const ClassPartition& partition, const ClosureResult& closure);

// G_R: one vertex per class, vertex [aa] identified with the leaf a, and an
// arc [q] -> [p] for every ordered pair of distinct classes with [p] <= [q].
// All comparabilities are materialized, shortcuts included. Internal vertices
// are labeled "{a,b}" by their representative; the note lists all members.
// Throws X1Violated when some class would merge a singleton with another pair.
Dag canonical_dag(const Relation& R);
Dag canonical_dag(const ClosureResult& closure);

// N_R: the transitive reduction of G_R, with a fresh root "_root" added above
// the remaining roots when there is more than one. Throws NotRealizable.
Dag canonical_network(const Relation& R);

// N_R from an already computed closure. The caller must have established
// realizability; only X1 is re-checked (by canonical_dag).
Dag canonical_network(const ClosureResult& closure);

struct AlgorithmResult {
    RealizabilityVerdict verdict;
    std::optional<Dag> canonical;   // G_R, present iff realizable
    std::optional<Dag> network;     // N_R, present iff realizable
};

// The full decision procedure: closure, X1/X2, and on success both graphs.
AlgorithmResult algorithm_real(const Relation& R);

} // namespace lcanet
