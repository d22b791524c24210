#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcanet/relation.hpp"

namespace lcanet {

using VertexId = std::uint32_t;

// A DAG on X: finite, acyclic, no self or duplicate arcs, and the sinks are
// exactly the leaves labeled by X. Multiple roots are allowed. Vertices are
// ordered leaves first (vertex id of a leaf equals its leaf id), then the
// internal vertices in construction order; serializations follow that order.
//
// Immutable after build(). Ancestor and descendant bitsets (both including
// the vertex itself) are computed once during validation, so all reachability
// and LCA queries are read-only and safe to share across threads.
class Dag {
public:
    class Builder {
    public:
        explicit Builder(LeafSet leaves);

        // Labels must be unique across the whole graph and non-empty, with no
        // whitespace and none of '<', '#', ':'. The note is free-form display
        // metadata (used for DOT tooltips), not part of the graph.
        VertexId add_internal(std::string label, std::string note = "");

        // Throws InvalidInput on self arcs, duplicate arcs, or arcs leaving a
        // leaf.
        void add_arc(VertexId parent, VertexId child);

        VertexId leaf_vertex(LeafId leaf) const { return leaf; }
        std::size_t vertex_count() const { return labels_.size(); }

        // Validates acyclicity and that internal vertices are not sinks, then
        // freezes the graph and builds the reachability caches.
        Dag build() &&;

    private:
        friend class Dag;
        LeafSet leaves_;
        std::vector<std::string> labels_;
        std::vector<std::string> notes_;
        std::vector<std::vector<VertexId>> children_;
        std::vector<std::vector<VertexId>> parents_;
    };

    const LeafSet& leaves() const { return leaves_; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t arc_count() const { return arc_count_; }

    const std::string& label(VertexId v) const;
    const std::string& note(VertexId v) const;
    std::optional<VertexId> find_vertex(const std::string& label) const;

    bool is_leaf(VertexId v) const { return v < leaves_.size(); }
    LeafId leaf_id(VertexId v) const;
    VertexId leaf_vertex(LeafId leaf) const { return leaf; }

    const std::vector<VertexId>& children(VertexId v) const;
    const std::vector<VertexId>& parents(VertexId v) const;

    // In-degree-0 vertices in vertex order.
    std::vector<VertexId> roots() const;

    // Vertices u with v <= u in the ancestor order, v itself included.
    const Bitset& ancestors(VertexId v) const;
    // Vertices w with w <= v, v itself included.
    const Bitset& descendants(VertexId v) const;

private:
    explicit Dag(Builder&& b);
    void check_vertex(VertexId v) const;

    LeafSet leaves_;
    std::vector<std::string> labels_;
    std::vector<std::string> notes_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::vector<VertexId>> parents_;
    std::vector<Bitset> anc_;
    std::vector<Bitset> desc_;
    std::size_t arc_count_ = 0;
};

// True iff v <=_G u, i.e. u lies on a directed path ending at v (u is an
// ancestor of v; every vertex is an ancestor of itself).
bool is_ancestor(const Dag& G, VertexId u, VertexId v);

// LCA_G(A): the <=_G-minimal common ancestors of the leaves in A. May be
// empty or contain several vertices. A must be non-empty.
std::vector<VertexId> lca_set(const Dag& G, const std::vector<LeafId>& A);
std::vector<VertexId> lca_set(const Dag& G, const std::vector<std::string>& names);

// The unique element of lca_set when it is a singleton.
std::optional<VertexId> lca_unique(const Dag& G, Pair p);

// lca_unique for every pair id at once.
std::vector<std::optional<VertexId>> all_pair_lcas(const Dag& G);

// G^-: same vertices, arc (u, w) dropped iff some u~>w path of length >= 2
// exists. Unique, reachability-preserving, shortcut-free.
Dag transitive_reduction(const Dag& G);

// C_G(v) as a bitset over leaf ids.
using Cluster = Bitset;

// Clusters of all vertices, indexed by vertex id.
std::vector<Cluster> clusters(const Dag& G);

// The distinct clusters, sorted (deduplicated).
struct ClusterSystem {
    std::size_t leaf_count = 0;
    std::vector<Cluster> clusters;
};
ClusterSystem cluster_system(const Dag& G);

// Hasse diagram of a cluster system: node per cluster, arc A -> B exactly for
// covering pairs (B proper subset of A with nothing strictly between).
struct HasseDiagram {
    std::vector<Cluster> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
};
HasseDiagram hasse(const ClusterSystem& system);

// v -> C_G(v) is an isomorphism onto the Hasse diagram of the cluster system.
bool is_regular(const Dag& G);

// No vertex with out-degree 1 and in-degree <= 1.
bool is_phylogenetic(const Dag& G);

// Every vertex is the unique LCA of some pair of leaves.
bool is_two_lca_relevant(const Dag& G);

// The relation {(ab, xy) | both lcas well-defined and lca(ab) <=_G lca(xy)}.
Relation extract_leq(const Dag& G);

// Strict variant: lca(ab) strictly below lca(xy).
Relation extract_strict(const Dag& G);

// How two vertices compare in the ancestor order.
enum class VertexOrder { equal, below, above, incomparable };
VertexOrder compare_vertices(const Dag& G, VertexId a, VertexId b);
const char* to_string(VertexOrder order);

struct RealizationReport {
    bool ok = false;
    // Pairs of supp+_R whose LCA is missing or ambiguous, sorted by PairId.
    std::vector<Pair> undefined_lcas;

    struct Failure {
        Pair lhs;
        Pair rhs;
        VertexOrder observed;   // how lca(lhs) relates to lca(rhs)
    };
    std::vector<Failure> i1_failures;   // one-directional tc facts without strict descent
    std::vector<Failure> i2_failures;   // mutual tc facts without LCA equality
    std::vector<Failure> i0_failures;   // R facts not strictly realized (strict check only)
};

// Realization: every pair of supp+_R has a well-defined LCA; facts of tc(R)
// that hold in one direction only force strict descent (I1); mutual facts
// force equality (I2). Throws LeafSetMismatch.
RealizationReport verify_realizes(const Dag& G, const Relation& R);

// Strict realization, checked via R being a subset of the strict extraction.
RealizationReport verify_strictly_realizes(const Dag& G, const Relation& R);

} // namespace lcanet
