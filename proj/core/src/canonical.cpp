#include "lcanet/canonical.hpp"

#include <string>
#include <utility>

namespace lcanet {

namespace {

constexpr auto npos = Bitset::npos;

} // namespace

ClassPartition equivalence_classes(const ClosureResult& closure) {
    const Relation& plus = closure.closure;
    const Bitset& supp = closure.support_plus_mask;

    ClassPartition partition;
    partition.class_of.assign(plus.universe(), ClassPartition::none);

    // Ascending scan: the first unassigned member of a class is its least
    // member, so class ids come out ordered by representative.
    for (auto p = supp.find_first(); p != npos; p = supp.find_next(p)) {
        PairId pid = static_cast<PairId>(p);
        if (partition.class_of[pid] != ClassPartition::none)
            continue;
        ClassId id = static_cast<ClassId>(partition.members.size());

        Bitset mutual = plus.row(pid);
        mutual &= plus.col(pid);

        std::vector<Pair> members;
        for (auto q = mutual.find_first(); q != npos; q = mutual.find_next(q)) {
            partition.class_of[q] = static_cast<std::int32_t>(id);
            members.push_back(plus.pair_at(static_cast<PairId>(q)));
        }
        partition.representative.push_back(members.front());
        partition.members.push_back(std::move(members));
    }
    return partition;
}

ClassOrder class_order(const ClassPartition& partition, const ClosureResult& closure) {
    const Relation& plus = closure.closure;
    const std::size_t n = plus.leaves().size();
    ClassOrder order(partition.count());
    for (ClassId i = 0; i < partition.count(); ++i) {
        PairId pi = pair_id(partition.representative[i], n);
        for (ClassId j = 0; j < partition.count(); ++j) {
            PairId pj = pair_id(partition.representative[j], n);
            if (plus.contains(pi, pj))
                order.set(i, j);
        }
    }
    return order;
}

namespace {

std::string class_label(const LeafSet& leaves, Pair representative) {
    return "{" + leaves.name(representative.lo) + "," + leaves.name(representative.hi) + "}";
}

std::string member_note(const LeafSet& leaves, const std::vector<Pair>& members) {
    std::string note;
    for (const Pair& m : members) {
        if (!note.empty())
            note += ' ';
        note += class_label(leaves, m);
    }
    return note;
}

} // namespace

Dag canonical_dag(const ClosureResult& closure) {
    auto x1 = check_x1(closure);
    if (!x1.empty())
        throw X1Violated("canonical DAG undefined: " + std::to_string(x1.size())
                         + " X1 violation(s)");

    const LeafSet& leaves = closure.closure.leaves();
    ClassPartition partition = equivalence_classes(closure);
    ClassOrder order = class_order(partition, closure);

    // Under X1 every class holding a singleton is exactly {xx}, so classes
    // with a singleton representative become the leaves themselves.
    Dag::Builder builder(leaves);
    std::vector<VertexId> vertex_of(partition.count());
    for (ClassId c = 0; c < partition.count(); ++c) {
        Pair rep = partition.representative[c];
        if (rep.singleton())
            vertex_of[c] = builder.leaf_vertex(rep.lo);
        else
            vertex_of[c] = builder.add_internal(class_label(leaves, rep),
                                                member_note(leaves, partition.members[c]));
    }
    for (ClassId below = 0; below < partition.count(); ++below) {
        for (ClassId above = 0; above < partition.count(); ++above) {
            if (below != above && order.le(below, above))
                builder.add_arc(vertex_of[above], vertex_of[below]);
        }
    }
    return std::move(builder).build();
}

Dag canonical_dag(const Relation& R) {
    return canonical_dag(plus_closure(R));
}

namespace {

// Reduce and, if several roots remain, hang them under a fresh "_root".
Dag finish_network(const Dag& canonical) {
    Dag reduced = transitive_reduction(canonical);
    std::vector<VertexId> roots = reduced.roots();
    if (roots.size() == 1)
        return reduced;

    Dag::Builder builder(reduced.leaves());
    for (std::size_t v = reduced.leaves().size(); v < reduced.vertex_count(); ++v)
        builder.add_internal(reduced.label(static_cast<VertexId>(v)),
                             reduced.note(static_cast<VertexId>(v)));
    VertexId root = builder.add_internal("_root");
    for (std::size_t u = 0; u < reduced.vertex_count(); ++u) {
        for (VertexId w : reduced.children(static_cast<VertexId>(u)))
            builder.add_arc(static_cast<VertexId>(u), w);
    }
    for (VertexId r : roots)
        builder.add_arc(root, r);
    return std::move(builder).build();
}

} // namespace

Dag canonical_network(const ClosureResult& closure) {
    return finish_network(canonical_dag(closure));
}

Dag canonical_network(const Relation& R) {
    ClosureResult closure = plus_closure(R);
    RealizabilityVerdict verdict = evaluate_realizability(R, closure);
    if (!verdict.realizable)
        throw NotRealizable("relation is not realizable; canonical network undefined");
    return canonical_network(closure);
}

AlgorithmResult algorithm_real(const Relation& R) {
    ClosureResult closure = plus_closure(R);
    AlgorithmResult result{evaluate_realizability(R, closure), std::nullopt, std::nullopt};
    if (result.verdict.realizable) {
        result.canonical = canonical_dag(closure);
        result.network = finish_network(*result.canonical);
    }
    return result;
}

} // namespace lcanet
