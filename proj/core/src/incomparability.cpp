#include "lcanet/incomparability.hpp"

#include "lcanet/canonical.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lcanet {

namespace {

constexpr auto npos = Bitset::npos;

} // namespace

Relation augment(const Relation& R, const Relation& S) {
    if (R.leaves() != S.leaves())
        throw LeafSetMismatch("R and S must share one leaf set");

    Relation augmented = R;
    // supp+ contains every singleton, so the difference holds two-element
    // pairs only.
    Bitset extra = support_mask(S);
    extra -= support_plus_mask(R);
    for (auto p = extra.find_first(); p != npos; p = extra.find_next(p)) {
        Pair ab = R.pair_at(static_cast<PairId>(p));
        augmented.insert(Pair(ab.lo, ab.lo), ab);
        augmented.insert(Pair(ab.hi, ab.hi), ab);
    }
    return augmented;
}

PairVerdict realize_pair(const Relation& R, const Relation& S) {
    for (const auto& [p, q] : S.facts()) {
        if (p == q)
            throw InvalidInput("incomparability constraint relates "
                               + to_string(S.leaves(), p) + " to itself");
    }

    Relation RS = augment(R, S);
    ClosureResult closure = plus_closure(RS);

    PairVerdict verdict;
    verdict.base = evaluate_realizability(RS, closure);

    // One entry per unordered constraint, lesser pair first.
    std::set<std::pair<PairId, PairId>> violated;
    const std::size_t n = R.leaves().size();
    for (const auto& [p, q] : S.facts()) {
        PairId pi = pair_id(p, n);
        PairId qi = pair_id(q, n);
        if (closure.closure.contains(pi, qi) || closure.closure.contains(qi, pi))
            violated.insert({std::min(pi, qi), std::max(pi, qi)});
    }
    for (const auto& [pi, qi] : violated)
        verdict.comparability_violations.push_back({RS.pair_at(pi), RS.pair_at(qi)});

    verdict.ok = verdict.base.realizable && verdict.comparability_violations.empty();
    if (!verdict.ok)
        return verdict;

    Dag network = canonical_network(closure);
    for (const auto& [p, q] : S.facts()) {
        auto lp = lca_unique(network, p);
        auto lq = lca_unique(network, q);
        if (!lp || !lq)
            throw Error("internal: lca undefined in network for accepted instance");
        if (compare_vertices(network, *lp, *lq) != VertexOrder::incomparable)
            throw Error("internal: network fails an accepted incomparability");
    }
    verdict.network = std::move(network);
    return verdict;
}

} // namespace lcanet
