#include "lcanet/oracle.hpp"

#include "lcanet/canonical.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace lcanet {

std::string to_string(const RandomSpec& spec) {
    std::ostringstream out;
    out << (spec.mode == RandomSpec::Mode::relation ? "relation" : "dag")
        << "(n=" << spec.leaf_count
        << ", density=" << spec.constraint_density
        << ", seed=" << spec.seed
        << ", mt19937_64/raw)";
    return out.str();
}

LeafSet default_leaf_set(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        std::size_t width = 3;
        for (std::size_t bound = 1000; bound < n; bound *= 10)
            ++width;
        for (std::size_t i = 0; i < n; ++i) {
            std::string digits = std::to_string(i);
            names.push_back("l" + std::string(width - digits.size(), '0') + digits);
        }
    }
    return LeafSet(std::move(names));
}

Relation naive_plus_closure(const Relation& R) {
    Relation S = R;
    const std::size_t n = S.leaves().size();
    const std::size_t universe = S.universe();

    for (const Pair& p : support_plus(R))
        S.insert(p, p);

    bool changed = true;
    while (changed) {
        changed = false;

        // Transitivity, by full triple scan.
        for (PairId p = 0; p < universe; ++p) {
            for (PairId q = 0; q < universe; ++q) {
                if (!S.contains(p, q))
                    continue;
                for (PairId r = 0; r < universe; ++r) {
                    if (S.contains(q, r) && S.insert(p, r))
                        changed = true;
                }
            }
        }

        // Cross-consistency, by full sextuple scan. Membership of ab in the
        // support is re-read on every query because the scan inserts as it
        // goes.
        for (LeafId a = 0; a < n; ++a) {
            for (LeafId b = 0; b < n; ++b) {
                Pair ab(a, b);
                PairId abi = S.id_of(ab);
                for (PairId xy = 0; xy < universe; ++xy) {
                    if (S.contains(abi, xy))
                        continue;
                    if (!S.row(abi).any() && !S.col(abi).any())
                        continue;
                    bool a_done = false;
                    for (LeafId c = 0; c < n && !a_done; ++c)
                        a_done = S.contains(Pair(a, c), S.pair_at(xy));
                    if (!a_done)
                        continue;
                    bool b_done = false;
                    for (LeafId d = 0; d < n && !b_done; ++d)
                        b_done = S.contains(Pair(b, d), S.pair_at(xy));
                    if (b_done && S.insert(abi, xy))
                        changed = true;
                }
            }
        }
    }
    return S;
}

namespace {

// Keep iff the next raw draw falls below probability * 2^64.
bool bernoulli(std::mt19937_64& rng, double probability) {
    std::uint64_t draw = rng();
    if (probability >= 1.0)
        return true;
    if (probability <= 0.0)
        return false;
    double threshold = std::ldexp(probability, 64);
    return static_cast<double>(draw) < threshold;
}

} // namespace

Dag build_tight_witness(const Relation& R) {
    AlgorithmResult result = algorithm_real(R);
    if (!result.verdict.realizable)
        throw NotRealizable("relation is not realizable; no tight witness exists");
    const Dag& N = *result.network;

    const std::size_t n = R.leaves().size();
    Bitset supp_plus = support_plus_mask(R);
    std::vector<Pair> outside;
    for (PairId p = 0; p < pair_count(n); ++p) {
        if (!supp_plus.test(p)) {
            Pair ab = pair_from_id(p, n);
            if (!ab.singleton())
                outside.push_back(ab);
        }
    }
    if (outside.empty())
        return N;

    // Two fresh parents over each pair outside supp+ make that pair's LCA
    // ambiguous, so the extraction of the widened network keeps exactly the
    // supp+ facts.
    Dag::Builder builder(N.leaves());
    for (std::size_t v = N.leaves().size(); v < N.vertex_count(); ++v)
        builder.add_internal(N.label(static_cast<VertexId>(v)),
                             N.note(static_cast<VertexId>(v)));
    for (std::size_t u = 0; u < N.vertex_count(); ++u) {
        for (VertexId w : N.children(static_cast<VertexId>(u)))
            builder.add_arc(static_cast<VertexId>(u), w);
    }
    std::vector<VertexId> roots = N.roots();
    VertexId root = roots.front();
    for (const Pair& ab : outside) {
        const std::string& a = N.leaves().name(ab.lo);
        const std::string& b = N.leaves().name(ab.hi);
        VertexId v = builder.add_internal("_v_" + a + "_" + b);
        VertexId u = builder.add_internal("_u_" + a + "_" + b);
        for (VertexId g : {v, u}) {
            builder.add_arc(root, g);
            builder.add_arc(g, N.leaf_vertex(ab.lo));
            builder.add_arc(g, N.leaf_vertex(ab.hi));
        }
    }
    return std::move(builder).build();
}

Relation random_relation(const RandomSpec& spec) {
    if (spec.mode != RandomSpec::Mode::relation)
        throw InvalidInput("random_relation needs mode == relation");
    Relation R(default_leaf_set(spec.leaf_count));
    std::mt19937_64 rng(spec.seed);
    // One draw per cell in (PairId, PairId) order, drawn unconditionally so
    // the stream position never depends on earlier outcomes.
    for (PairId p = 0; p < R.universe(); ++p) {
        for (PairId q = 0; q < R.universe(); ++q) {
            if (bernoulli(rng, spec.constraint_density))
                R.insert(p, q);
        }
    }
    return R;
}

Dag random_dag(const RandomSpec& spec) {
    if (spec.mode != RandomSpec::Mode::dag)
        throw InvalidInput("random_dag needs mode == dag");
    const std::size_t n = spec.leaf_count;
    std::mt19937_64 rng(spec.seed);
    double arc_probability = spec.constraint_density;
    if (arc_probability < 0.05)
        arc_probability = 0.05;
    if (arc_probability > 0.95)
        arc_probability = 0.95;

    Dag::Builder builder(default_leaf_set(n));
    std::size_t internal_count = rng() % (n + 3);
    std::vector<VertexId> internal;
    internal.reserve(internal_count);
    for (std::size_t i = 0; i < internal_count; ++i)
        internal.push_back(builder.add_internal("_i" + std::to_string(i)));

    // Wire each internal vertex downward, to later internals then to leaves;
    // acyclic by construction. A childless internal gets one forced leaf so
    // the sinks stay exactly the leaves.
    for (std::size_t i = 0; i < internal_count; ++i) {
        bool has_child = false;
        for (std::size_t j = i + 1; j < internal_count; ++j) {
            if (bernoulli(rng, arc_probability)) {
                builder.add_arc(internal[i], internal[j]);
                has_child = true;
            }
        }
        for (LeafId x = 0; x < n; ++x) {
            if (bernoulli(rng, arc_probability)) {
                builder.add_arc(internal[i], builder.leaf_vertex(x));
                has_child = true;
            }
        }
        if (!has_child)
            builder.add_arc(internal[i], builder.leaf_vertex(static_cast<LeafId>(rng() % n)));
    }
    return std::move(builder).build();
}

} // namespace lcanet
