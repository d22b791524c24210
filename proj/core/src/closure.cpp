#include "lcanet/closure.hpp"

#include <algorithm>
#include <utility>

namespace lcanet {

namespace {

constexpr auto npos = Bitset::npos;

// Worklist closure evaluation. Reflexivity runs once up front; afterwards
// every fact is processed exactly once as "new" and joined against the
// current matrix, which reaches the same least fixpoint as exhaustive rule
// application:
//  - transitivity fires when the later premise of a chain is processed and
//    sees the earlier one in the matrix;
//  - cross-consistency is evaluated per target column xy over the leaf set
//    L(xy) of all leaves occurring in a source pair of that column. Whenever
//    L(xy) grows, the product of L(xy) restricted to supp+ is re-closed.
//    Taking c (resp. d) to be any witness leaf already in L(xy), this is the
//    sextuple rule exactly, including the a = b singleton instances.
// Rules R2/R3 only ever relate pairs already in supp+, so the support is
// frozen after reflexivity; the fixpoint asserts it.
ClosureResult run_plus_closure(const Relation& R) {
    const std::size_t n = R.leaves().size();
    const std::size_t universe = R.universe();

    ClosureResult result{Relation(R.leaves()), {}, support_plus_mask(R), {}};
    Relation& S = result.closure;
    const Bitset& supp_plus = result.support_plus_mask;

    std::vector<std::pair<PairId, PairId>> worklist;
    worklist.reserve(universe * 4);

    auto add = [&](PairId p, PairId q, std::uint64_t& counter) {
        if (S.insert(p, q)) {
            ++counter;
            worklist.emplace_back(p, q);
        }
    };

    // Input facts participate in joins like everything else; they carry no
    // rule counter.
    std::uint64_t discard = 0;
    for (PairId p = 0; p < universe; ++p) {
        const Bitset& row = R.row(p);
        for (auto q = row.find_first(); q != npos; q = row.find_next(q))
            add(p, static_cast<PairId>(q), discard);
    }
    for (auto p = supp_plus.find_first(); p != npos; p = supp_plus.find_next(p))
        add(static_cast<PairId>(p), static_cast<PairId>(p), result.rule_applications.r1);

    // L(xy) per target column.
    std::vector<Bitset> joined(universe, Bitset(n));

    for (std::size_t head = 0; head < worklist.size(); ++head) {
        const auto [p, q] = worklist[head];

        // Transitivity, new fact as left premise: (p,q), (q,r) -> (p,r).
        {
            const Bitset& row = S.row(q);
            for (auto r = row.find_first(); r != npos; r = row.find_next(r))
                add(p, static_cast<PairId>(r), result.rule_applications.r2);
        }
        // Transitivity, new fact as right premise: (o,p), (p,q) -> (o,q).
        {
            const Bitset& col = S.col(p);
            for (auto o = col.find_first(); o != npos; o = col.find_next(o))
                add(static_cast<PairId>(o), q, result.rule_applications.r2);
        }

        // Cross-consistency against target column q.
        const Pair source = S.pair_at(p);
        Bitset& leaves = joined[q];
        bool grew = false;
        if (!leaves.test(source.lo)) {
            leaves.set(source.lo);
            grew = true;
        }
        if (!leaves.test(source.hi)) {
            leaves.set(source.hi);
            grew = true;
        }
        if (grew) {
            // b starts at a, so the singleton instances ab = aa are included.
            for (auto a = leaves.find_first(); a != npos; a = leaves.find_next(a)) {
                for (auto b = a; b != npos; b = leaves.find_next(b)) {
                    PairId ab = pair_id(Pair(static_cast<LeafId>(a), static_cast<LeafId>(b)), n);
                    if (supp_plus.test(ab))
                        add(ab, q, result.rule_applications.r3);
                }
            }
        }
    }

    if (support_mask(S) != supp_plus)
        throw Error("internal: closure support diverged from supp+");

    result.support_plus.reserve(supp_plus.count());
    for (auto p = supp_plus.find_first(); p != npos; p = supp_plus.find_next(p))
        result.support_plus.push_back(S.pair_at(static_cast<PairId>(p)));
    return result;
}

std::vector<std::pair<Pair, Pair>> x2_violations(const Relation& tc, const ClosureResult& closure) {
    std::vector<std::pair<Pair, Pair>> out;
    const Relation& plus = closure.closure;
    for (PairId p = 0; p < tc.universe(); ++p) {
        const Bitset& row = tc.row(p);
        for (auto q = row.find_first(); q != npos; q = row.find_next(q)) {
            PairId qq = static_cast<PairId>(q);
            if (!tc.contains(qq, p) && plus.contains(qq, p))
                out.emplace_back(tc.pair_at(qq), tc.pair_at(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RealizabilityVerdict analyze(const Relation& R, const ClosureResult& closure) {
    RealizabilityVerdict verdict;
    verdict.x1_violations = check_x1(closure);
    Relation tc = transitive_closure(R);
    verdict.x2_violations = x2_violations(tc, closure);
    verdict.realizable = verdict.x1_violations.empty() && verdict.x2_violations.empty();
    verdict.asymmetry_witness = asymmetry_witness(tc);
    verdict.strict = verdict.realizable && !verdict.asymmetry_witness.has_value();
    return verdict;
}

} // namespace

ClosureResult plus_closure(const Relation& R) {
    return run_plus_closure(R);
}

std::vector<std::pair<Pair, Pair>> check_x1(const ClosureResult& closure) {
    const Relation& plus = closure.closure;
    const std::size_t n = plus.leaves().size();
    std::vector<std::pair<Pair, Pair>> out;
    for (LeafId x = 0; x < n; ++x) {
        PairId xx = pair_id(Pair(x, x), n);
        const Bitset& col = plus.col(xx);
        for (auto p = col.find_first(); p != Bitset::npos; p = col.find_next(p)) {
            if (static_cast<PairId>(p) != xx)
                out.emplace_back(plus.pair_at(static_cast<PairId>(p)), plus.pair_at(xx));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Pair, Pair>> check_x2(const Relation& R, const ClosureResult& closure) {
    return x2_violations(transitive_closure(R), closure);
}

RealizabilityVerdict is_realizable(const Relation& R) {
    return analyze(R, plus_closure(R));
}

RealizabilityVerdict is_strictly_realizable(const Relation& R) {
    return analyze(R, plus_closure(R));
}

RealizabilityVerdict evaluate_realizability(const Relation& R, const ClosureResult& closure) {
    return analyze(R, closure);
}

Relation classical_closure(const Relation& R) {
    ClosureResult closure = plus_closure(R);
    RealizabilityVerdict verdict = analyze(R, closure);
    if (!verdict.realizable)
        throw NotRealizable("classical closure is defined only for realizable relations");
    return std::move(closure.closure);
}

} // namespace lcanet
