#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lcanet/error.hpp"

namespace lcanet {

using LeafId = std::uint32_t;
using PairId = std::uint32_t;

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// The ground set X. Leaf names are stored sorted, so the dense ids 0..|X|-1
// are the lexicographic ranks and every derived serialization is canonical.
class LeafSet {
public:
    // Throws InvalidInput if names is empty, contains duplicates, or contains
    // an invalid name (see valid_name).
    explicit LeafSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(LeafId id) const { return names_.at(id); }

    // Throws UnknownLeaf.
    LeafId id(const std::string& name) const;
    std::optional<LeafId> find(const std::string& name) const;

    bool operator==(const LeafSet& other) const { return names_ == other.names_; }

    // A usable leaf name is non-empty, free of whitespace and of the
    // characters '<', '#', ':', and is not the reserved word "_root".
    static bool valid_name(const std::string& name);

private:
    std::vector<std::string> names_;
};

// An unordered 1- or 2-element subset of X. lo == hi encodes the singleton.
struct Pair {
    LeafId lo = 0;
    LeafId hi = 0;

    Pair() = default;
    Pair(LeafId a, LeafId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

    bool singleton() const { return lo == hi; }
    auto operator<=>(const Pair&) const = default;
};

// Dense enumeration of P2(X). Ids are assigned in (lo, hi) lexicographic
// order, so sorting by PairId equals sorting Pairs.
inline std::size_t pair_count(std::size_t leaf_count) {
    return leaf_count * (leaf_count + 1) / 2;
}

inline PairId pair_id(Pair p, std::size_t leaf_count) {
    const std::size_t n = leaf_count;
    return static_cast<PairId>(p.lo * (2 * n - p.lo + 1) / 2 + (p.hi - p.lo));
}

Pair pair_from_id(PairId id, std::size_t leaf_count);

// "a b": the two names space-separated, singletons by repetition. This is the
// token form used by constraint files and diagnostics.
std::string to_string(const LeafSet& leaves, Pair p);

// A binary relation on P2(X), stored as dense successor and predecessor bit
// matrices over pair ids. Row p holds {q | p R q}; column q holds {p | p R q}.
class Relation {
public:
    explicit Relation(LeafSet leaves);

    const LeafSet& leaves() const { return leaves_; }
    // Dimension of the matrix: |P2(X)|.
    std::size_t universe() const { return universe_; }

    PairId id_of(Pair p) const { return pair_id(p, leaves_.size()); }
    Pair pair_at(PairId id) const { return pairs_[id]; }

    bool contains(PairId p, PairId q) const { return rows_[p].test(q); }
    bool contains(Pair p, Pair q) const { return contains(id_of(p), id_of(q)); }

    // Returns true if the fact was new.
    bool insert(PairId p, PairId q);
    bool insert(Pair p, Pair q) { return insert(id_of(p), id_of(q)); }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    const Bitset& row(PairId p) const { return rows_[p]; }
    const Bitset& col(PairId q) const { return cols_[q]; }

    // All facts sorted by (PairId, PairId).
    std::vector<std::pair<Pair, Pair>> facts() const;

    bool subset_of(const Relation& other) const;

    // Equality requires the same leaf names and bitwise equal matrices.
    bool operator==(const Relation& other) const;

private:
    LeafSet leaves_;
    std::size_t universe_;
    std::vector<Pair> pairs_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::size_t size_ = 0;
};

// supp_R: every pair that occurs on either side of a fact. Sorted by PairId.
std::vector<Pair> support(const Relation& R);

// supp_R as a bitset over pair ids.
Bitset support_mask(const Relation& R);

// supp+_R = supp_R together with every singleton xx.
std::vector<Pair> support_plus(const Relation& R);
Bitset support_plus_mask(const Relation& R);

// tc(R): the least transitive relation containing R (paths of length >= 1 in
// the pair digraph). Computed by per-source BFS over the row bitsets.
Relation transitive_closure(const Relation& R);

// True iff no p, q (p = q allowed) with both p R q and q R p.
bool is_asymmetric(const Relation& R);

// The (PairId, PairId)-least offending fact, if any.
std::optional<std::pair<Pair, Pair>> asymmetry_witness(const Relation& R);

// True iff for all leaves a,b,c,d,x,y: ac R xy, bd R xy and ab in supp_R
// imply ab R xy.
bool is_cross_consistent(const Relation& R);

// Rebuilds R over a (super)set of its leaves. Throws UnknownLeaf if some leaf
// of R is missing from target.
Relation rebase(const Relation& R, const LeafSet& target);

} // namespace lcanet
