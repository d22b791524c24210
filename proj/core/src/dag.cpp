#include "lcanet/dag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace lcanet {

namespace {

constexpr auto npos = Bitset::npos;

// Internal vertex labels follow the leaf-name character rules but may use the
// reserved "_root".
bool valid_vertex_label(const std::string& label) {
    if (label.empty())
        return false;
    for (char c : label) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '#' || c == ':')
            return false;
    }
    return true;
}

} // namespace

Dag::Builder::Builder(LeafSet leaves) : leaves_(std::move(leaves)) {
    labels_ = leaves_.names();
    notes_.assign(labels_.size(), std::string());
    children_.resize(labels_.size());
    parents_.resize(labels_.size());
}

VertexId Dag::Builder::add_internal(std::string label, std::string note) {
    if (!valid_vertex_label(label))
        throw InvalidInput("invalid vertex label '" + label + "'");
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
        throw InvalidInput("duplicate vertex label '" + label + "'");
    labels_.push_back(std::move(label));
    notes_.push_back(std::move(note));
    children_.emplace_back();
    parents_.emplace_back();
    return static_cast<VertexId>(labels_.size() - 1);
}

void Dag::Builder::add_arc(VertexId parent, VertexId child) {
    if (parent >= labels_.size() || child >= labels_.size())
        throw UnknownVertex("arc endpoint out of range");
    if (parent == child)
        throw InvalidInput("self arc at '" + labels_[parent] + "'");
    if (parent < leaves_.size())
        throw InvalidInput("arc out of leaf '" + labels_[parent] + "'");
    if (std::find(children_[parent].begin(), children_[parent].end(), child)
            != children_[parent].end())
        throw InvalidInput("duplicate arc " + labels_[parent] + " -> " + labels_[child]);
    children_[parent].push_back(child);
    parents_[child].push_back(parent);
}

Dag Dag::Builder::build() && {
    return Dag(std::move(*this));
}

Dag::Dag(Builder&& b)
    : leaves_(std::move(b.leaves_)),
      labels_(std::move(b.labels_)),
      notes_(std::move(b.notes_)),
      children_(std::move(b.children_)),
      parents_(std::move(b.parents_)) {
    const std::size_t count = labels_.size();

    for (std::size_t v = leaves_.size(); v < count; ++v) {
        if (children_[v].empty())
            throw InvalidInput("internal vertex '" + labels_[v]
                               + "' has no outgoing arcs (sinks must be leaves)");
    }

    // Kahn's algorithm; doubles as the cycle check.
    std::vector<std::size_t> pending(count);
    std::vector<VertexId> topo;
    topo.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        pending[v] = parents_[v].size();
        if (pending[v] == 0)
            topo.push_back(static_cast<VertexId>(v));
    }
    for (std::size_t head = 0; head < topo.size(); ++head) {
        for (VertexId c : children_[topo[head]]) {
            if (--pending[c] == 0)
                topo.push_back(c);
        }
    }
    if (topo.size() != count)
        throw InvalidInput("graph contains a directed cycle");

    for (std::size_t v = 0; v < count; ++v) {
        std::sort(children_[v].begin(), children_[v].end());
        std::sort(parents_[v].begin(), parents_[v].end());
        arc_count_ += children_[v].size();
    }

    desc_.assign(count, Bitset(count));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexId v = *it;
        desc_[v].set(v);
        for (VertexId c : children_[v])
            desc_[v] |= desc_[c];
    }
    anc_.assign(count, Bitset(count));
    for (VertexId v : topo) {
        anc_[v].set(v);
        for (VertexId p : parents_[v])
            anc_[v] |= anc_[p];
    }
}

void Dag::check_vertex(VertexId v) const {
    if (v >= labels_.size())
        throw UnknownVertex("vertex id out of range");
}

const std::string& Dag::label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
}

const std::string& Dag::note(VertexId v) const {
    check_vertex(v);
    return notes_[v];
}

std::optional<VertexId> Dag::find_vertex(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

LeafId Dag::leaf_id(VertexId v) const {
    check_vertex(v);
    if (!is_leaf(v))
        throw UnknownVertex("vertex '" + labels_[v] + "' is not a leaf");
    return v;
}

const std::vector<VertexId>& Dag::children(VertexId v) const {
    check_vertex(v);
    return children_[v];
}

const std::vector<VertexId>& Dag::parents(VertexId v) const {
    check_vertex(v);
    return parents_[v];
}

std::vector<VertexId> Dag::roots() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (parents_[v].empty())
            out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

const Bitset& Dag::ancestors(VertexId v) const {
    check_vertex(v);
    return anc_[v];
}

const Bitset& Dag::descendants(VertexId v) const {
    check_vertex(v);
    return desc_[v];
}

bool is_ancestor(const Dag& G, VertexId u, VertexId v) {
    return G.ancestors(v).test(u);
}

std::vector<VertexId> lca_set(const Dag& G, const std::vector<LeafId>& A) {
    if (A.empty())
        throw InvalidInput("LCA of the empty set is undefined");
    for (LeafId x : A) {
        if (x >= G.leaves().size())
            throw UnknownLeaf("leaf id out of range");
    }
    Bitset common = G.ancestors(G.leaf_vertex(A.front()));
    for (std::size_t i = 1; i < A.size(); ++i)
        common &= G.ancestors(G.leaf_vertex(A[i]));

    // Minimal elements: v stays iff nothing else in the common set lies
    // strictly below it.
    std::vector<VertexId> out;
    for (auto v = common.find_first(); v != npos; v = common.find_next(v)) {
        Bitset below = G.descendants(static_cast<VertexId>(v));
        below &= common;
        if (below.count() == 1)
            out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::vector<VertexId> lca_set(const Dag& G, const std::vector<std::string>& names) {
    std::vector<LeafId> ids;
    ids.reserve(names.size());
    for (const auto& name : names)
        ids.push_back(G.leaves().id(name));
    return lca_set(G, ids);
}

std::optional<VertexId> lca_unique(const Dag& G, Pair p) {
    std::vector<VertexId> set = lca_set(G, std::vector<LeafId>{p.lo, p.hi});
    if (set.size() == 1)
        return set.front();
    return std::nullopt;
}

std::vector<std::optional<VertexId>> all_pair_lcas(const Dag& G) {
    const std::size_t n = G.leaves().size();
    std::vector<std::optional<VertexId>> out(pair_count(n));
    for (PairId id = 0; id < out.size(); ++id)
        out[id] = lca_unique(G, pair_from_id(id, n));
    return out;
}

Dag transitive_reduction(const Dag& G) {
    Dag::Builder b(G.leaves());
    for (std::size_t v = G.leaves().size(); v < G.vertex_count(); ++v)
        b.add_internal(G.label(static_cast<VertexId>(v)), G.note(static_cast<VertexId>(v)));

    for (std::size_t u = 0; u < G.vertex_count(); ++u) {
        VertexId uu = static_cast<VertexId>(u);
        for (VertexId w : G.children(uu)) {
            bool shortcut = false;
            for (VertexId c : G.children(uu)) {
                if (c != w && G.descendants(c).test(w)) {
                    shortcut = true;
                    break;
                }
            }
            if (!shortcut)
                b.add_arc(uu, w);
        }
    }
    return std::move(b).build();
}

std::vector<Cluster> clusters(const Dag& G) {
    const std::size_t n = G.leaves().size();
    std::vector<Cluster> out(G.vertex_count(), Cluster(n));
    for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        const Bitset& desc = G.descendants(static_cast<VertexId>(v));
        for (LeafId x = 0; x < n; ++x) {
            if (desc.test(x))
                out[v].set(x);
        }
    }
    return out;
}

ClusterSystem cluster_system(const Dag& G) {
    ClusterSystem system;
    system.leaf_count = G.leaves().size();
    system.clusters = clusters(G);
    std::sort(system.clusters.begin(), system.clusters.end());
    system.clusters.erase(std::unique(system.clusters.begin(), system.clusters.end()),
                          system.clusters.end());
    return system;
}

HasseDiagram hasse(const ClusterSystem& system) {
    HasseDiagram diagram;
    diagram.nodes = system.clusters;
    const std::size_t count = diagram.nodes.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (!diagram.nodes[j].is_proper_subset_of(diagram.nodes[i]))
                continue;
            bool covered = false;
            for (std::size_t k = 0; k < count && !covered; ++k) {
                covered = k != i && k != j
                          && diagram.nodes[k].is_proper_subset_of(diagram.nodes[i])
                          && diagram.nodes[j].is_proper_subset_of(diagram.nodes[k]);
            }
            if (!covered)
                diagram.arcs.emplace_back(i, j);
        }
    }
    return diagram;
}

bool is_regular(const Dag& G) {
    std::vector<Cluster> perVertex = clusters(G);
    std::map<Cluster, VertexId> byCluster;
    for (std::size_t v = 0; v < perVertex.size(); ++v) {
        if (!byCluster.emplace(perVertex[v], static_cast<VertexId>(v)).second)
            return false;   // two vertices share a cluster: not injective
    }

    HasseDiagram diagram = hasse(cluster_system(G));
    std::map<Cluster, std::size_t> index;
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i)
        index.emplace(diagram.nodes[i], i);

    std::set<std::pair<std::size_t, std::size_t>> hasseArcs(diagram.arcs.begin(),
                                                            diagram.arcs.end());
    std::size_t graphArcs = 0;
    for (std::size_t u = 0; u < G.vertex_count(); ++u) {
        for (VertexId w : G.children(static_cast<VertexId>(u))) {
            if (!hasseArcs.count({index.at(perVertex[u]), index.at(perVertex[w])}))
                return false;
            ++graphArcs;
        }
    }
    return graphArcs == hasseArcs.size();
}

bool is_phylogenetic(const Dag& G) {
    for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        VertexId vv = static_cast<VertexId>(v);
        if (G.children(vv).size() == 1 && G.parents(vv).size() <= 1)
            return false;
    }
    return true;
}

bool is_two_lca_relevant(const Dag& G) {
    Bitset hit(G.vertex_count());
    for (const auto& lca : all_pair_lcas(G)) {
        if (lca)
            hit.set(*lca);
    }
    return hit.count() == G.vertex_count();
}

namespace {

Relation extract(const Dag& G, bool strict) {
    Relation out(G.leaves());
    std::vector<std::optional<VertexId>> lcas = all_pair_lcas(G);
    std::vector<PairId> defined;
    for (PairId id = 0; id < lcas.size(); ++id) {
        if (lcas[id])
            defined.push_back(id);
    }
    for (PairId p : defined) {
        for (PairId q : defined) {
            if (strict && *lcas[p] == *lcas[q])
                continue;
            if (G.ancestors(*lcas[p]).test(*lcas[q]))
                out.insert(p, q);
        }
    }
    return out;
}

} // namespace

Relation extract_leq(const Dag& G) {
    return extract(G, false);
}

Relation extract_strict(const Dag& G) {
    return extract(G, true);
}

VertexOrder compare_vertices(const Dag& G, VertexId a, VertexId b) {
    if (a == b)
        return VertexOrder::equal;
    if (G.ancestors(a).test(b))
        return VertexOrder::below;
    if (G.ancestors(b).test(a))
        return VertexOrder::above;
    return VertexOrder::incomparable;
}

const char* to_string(VertexOrder order) {
    switch (order) {
    case VertexOrder::equal: return "equal";
    case VertexOrder::below: return "below";
    case VertexOrder::above: return "above";
    case VertexOrder::incomparable: return "incomparable";
    }
    return "?";
}

namespace {

void require_same_leaves(const Dag& G, const Relation& R) {
    if (!(G.leaves() == R.leaves()))
        throw LeafSetMismatch("DAG and relation use different leaf sets");
}

} // namespace

RealizationReport verify_realizes(const Dag& G, const Relation& R) {
    require_same_leaves(G, R);
    RealizationReport report;

    std::vector<std::optional<VertexId>> lcas = all_pair_lcas(G);
    Bitset suppPlus = support_plus_mask(R);
    for (auto p = suppPlus.find_first(); p != npos; p = suppPlus.find_next(p)) {
        if (!lcas[p])
            report.undefined_lcas.push_back(R.pair_at(static_cast<PairId>(p)));
    }

    Relation tc = transitive_closure(R);
    for (PairId p = 0; p < tc.universe(); ++p) {
        const Bitset& row = tc.row(p);
        for (auto qq = row.find_first(); qq != npos; qq = row.find_next(qq)) {
            PairId q = static_cast<PairId>(qq);
            if (!lcas[p] || !lcas[q])
                continue;   // already reported as undefined
            VertexOrder observed = compare_vertices(G, *lcas[p], *lcas[q]);
            if (tc.contains(q, p)) {
                // Mutual facts force equal LCAs; record each unordered pair once.
                if (p <= q && observed != VertexOrder::equal)
                    report.i2_failures.push_back({tc.pair_at(p), tc.pair_at(q), observed});
            } else if (observed != VertexOrder::below) {
                report.i1_failures.push_back({tc.pair_at(p), tc.pair_at(q), observed});
            }
        }
    }

    report.ok = report.undefined_lcas.empty() && report.i1_failures.empty()
                && report.i2_failures.empty();
    return report;
}

RealizationReport verify_strictly_realizes(const Dag& G, const Relation& R) {
    require_same_leaves(G, R);
    RealizationReport report;

    std::vector<std::optional<VertexId>> lcas = all_pair_lcas(G);
    Bitset undefined(R.universe());
    for (PairId p = 0; p < R.universe(); ++p) {
        const Bitset& row = R.row(p);
        for (auto qq = row.find_first(); qq != npos; qq = row.find_next(qq)) {
            PairId q = static_cast<PairId>(qq);
            if (!lcas[p])
                undefined.set(p);
            if (!lcas[q])
                undefined.set(q);
            if (!lcas[p] || !lcas[q])
                continue;
            VertexOrder observed = compare_vertices(G, *lcas[p], *lcas[q]);
            if (observed != VertexOrder::below)
                report.i0_failures.push_back({R.pair_at(p), R.pair_at(q), observed});
        }
    }
    for (auto p = undefined.find_first(); p != npos; p = undefined.find_next(p))
        report.undefined_lcas.push_back(R.pair_at(static_cast<PairId>(p)));

    report.ok = report.undefined_lcas.empty() && report.i0_failures.empty();
    return report;
}

} // namespace lcanet
