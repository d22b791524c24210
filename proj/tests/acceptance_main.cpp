// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each. Every
// numeric check is exact; the only tolerances are the two wall-clock budgets.
// Random inputs are fully seeded, so a failure here reproduces byte for byte.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lcanet/canonical.hpp"
#include "lcanet/closure.hpp"
#include "lcanet/dag.hpp"
#include "lcanet/incomparability.hpp"
#include "lcanet/io.hpp"
#include "lcanet/oracle.hpp"
#include "lcanet/relation.hpp"

#include "helpers.hpp"

using namespace lcanet;
using testutil::TempFile;
using testutil::cli;

namespace {

struct Outcome {
    bool pass = false;
    std::string text;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", s);
    return buffer;
}

// The shared 500-relation corpus: |X| cycles over 2..6, density over
// {0.01, 0.05, 0.2}, one seed per instance.
struct Instance {
    RandomSpec spec;
    Relation R;
    ClosureResult closure;
    RealizabilityVerdict verdict;
};

std::vector<Instance> relation_corpus() {
    const double densities[] = {0.01, 0.05, 0.2};
    std::vector<Instance> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i) {
        RandomSpec spec{2 + static_cast<std::size_t>(i % 5), densities[i % 3],
                        1000 + static_cast<std::uint64_t>(i), RandomSpec::Mode::relation};
        Relation R = random_relation(spec);
        ClosureResult closure = plus_closure(R);
        RealizabilityVerdict verdict = evaluate_realizability(R, closure);
        corpus.push_back({spec, std::move(R), std::move(closure), std::move(verdict)});
    }
    return corpus;
}

std::vector<Dag> dag_corpus() {
    const double densities[] = {0.1, 0.25, 0.5};
    std::vector<Dag> corpus;
    corpus.reserve(300);
    for (int i = 0; i < 300; ++i) {
        RandomSpec spec{2 + static_cast<std::size_t>(i % 5), densities[i % 3],
                        5000 + static_cast<std::uint64_t>(i), RandomSpec::Mode::dag};
        corpus.push_back(random_dag(spec));
    }
    return corpus;
}

// 1. Closure-operator laws: extensive, monotone, idempotent; timed.
Outcome criterion1(const std::vector<Instance>& corpus) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 pick(0x5eed0001);
    for (const Instance& inst : corpus) {
        Relation C = plus_closure(inst.R).closure;
        if (!inst.R.subset_of(C))
            return {false, "extensivity fails on " + to_string(inst.spec)};
        if (!(plus_closure(C).closure == C))
            return {false, "idempotency fails on " + to_string(inst.spec)};
        Relation sub(inst.R.leaves());
        for (auto [p, q] : inst.R.facts()) {
            if (pick() & 1)
                sub.insert(p, q);
        }
        if (!plus_closure(sub).closure.subset_of(C))
            return {false, "monotonicity fails on " + to_string(inst.spec)};
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0)
        return {false, "laws hold but took " + format_seconds(elapsed) + "s (budget 30s)"};
    return {true, "closure laws on 500 relations, |X| in 2..6, in " +
                      format_seconds(elapsed) + "s"};
}

// 2. Engine closure equals the naive fixpoint oracle, bitwise.
Outcome criterion2(const std::vector<Instance>& corpus) {
    for (const Instance& inst : corpus) {
        if (!(inst.closure.closure == naive_plus_closure(inst.R)))
            return {false, "closure mismatch on " + to_string(inst.spec)};
    }
    return {true, "plus_closure bitwise equals naive_plus_closure on all 500 instances"};
}

// 3. (X1 and X2) holds iff the canonical DAG realizes R; realizable
// instances are also realized by the reduction and the network.
Outcome criterion3(const std::vector<Instance>& corpus) {
    int realizable = 0;
    for (const Instance& inst : corpus) {
        bool realized_by_canonical = false;
        if (check_x1(inst.closure).empty()) {
            Dag G = canonical_dag(inst.closure);
            realized_by_canonical = verify_realizes(G, inst.R).ok;
            if (inst.verdict.realizable) {
                if (!verify_realizes(transitive_reduction(G), inst.R).ok)
                    return {false, "reduction fails to realize " + to_string(inst.spec)};
                if (!verify_realizes(canonical_network(inst.closure), inst.R).ok)
                    return {false, "network fails to realize " + to_string(inst.spec)};
            }
        }
        if (realized_by_canonical != inst.verdict.realizable)
            return {false, "characterization breaks on " + to_string(inst.spec)};
        realizable += inst.verdict.realizable ? 1 : 0;
    }
    return {true, "realizability iff canonical DAG realizes, on all 500 (" +
                      std::to_string(realizable) + " realizable)"};
}

// 4. The widened witness extracts exactly the closure.
Outcome criterion4(const std::vector<Instance>& corpus) {
    int checked = 0;
    for (const Instance& inst : corpus) {
        if (!inst.verdict.realizable || inst.spec.leaf_count > 5)
            continue;
        Dag W = build_tight_witness(inst.R);
        if (!(extract_leq(W) == inst.closure.closure))
            return {false, "tight witness extraction differs on " + to_string(inst.spec)};
        ++checked;
    }
    return {true, "extract_leq(tight witness) equals the closure on " +
                      std::to_string(checked) + " realizable instances, |X| <= 5"};
}

// 5. The canonical network is regular and phylogenetic, and every supp+
// pair's LCA is its class vertex.
Outcome criterion5(const std::vector<Instance>& corpus) {
    int checked = 0;
    for (const Instance& inst : corpus) {
        if (!inst.verdict.realizable)
            continue;
        Dag N = canonical_network(inst.closure);
        if (!is_regular(N))
            return {false, "network not regular on " + to_string(inst.spec)};
        if (!is_phylogenetic(N))
            return {false, "network not phylogenetic on " + to_string(inst.spec)};

        ClassPartition part = equivalence_classes(inst.closure);
        const LeafSet& L = inst.R.leaves();
        for (const Pair& p : inst.closure.support_plus) {
            Pair rep = part.representative[part.class_of[inst.R.id_of(p)]];
            std::optional<VertexId> expected;
            if (rep.singleton()) {
                expected = N.leaf_vertex(rep.lo);
            } else {
                expected = N.find_vertex("{" + L.name(rep.lo) + "," + L.name(rep.hi) + "}");
            }
            if (!expected || lca_unique(N, p) != expected)
                return {false, "class vertex is not the LCA on " + to_string(inst.spec)};
        }
        ++checked;
    }
    return {true, "canonical networks regular, phylogenetic, class-vertex LCAs on " +
                      std::to_string(checked) + " realizable instances"};
}

// 6. Golden cases with byte-stable command output.
Outcome criterion6() {
    // (a) The four-leaf chain: realizable, the network has two hybrid paths.
    {
        TempFile in("acc_a.lcc",
                    "i j < i k\n"
                    "j k < j l\n"
                    "j l < i k\n");
        auto realize = cli({"realize", in.str()});
        if (realize.exit_code != 0 ||
            realize.out != "leaves: i j k l\n"
                           "{i,j} -> i\n"
                           "{i,j} -> j\n"
                           "{i,k} -> {i,j}\n"
                           "{i,k} -> {j,l}\n"
                           "{j,k} -> j\n"
                           "{j,k} -> k\n"
                           "{j,l} -> l\n"
                           "{j,l} -> {j,k}\n")
            return {false, "case (a): unexpected realize output"};
        TempFile net("acc_a.lcd", realize.out);
        auto verify = cli({"verify", net.str(), in.str()});
        if (verify.exit_code != 0 || verify.out != "ok\n")
            return {false, "case (a): network does not verify"};
    }

    // (b) Unrealizable: the one-directional tc facts forbid (xy, ab).
    {
        TempFile in("acc_b.lcc",
                    "x x < a b\n"
                    "y y < a b\n"
                    "a b < x y\n");
        auto check = cli({"check", in.str()});
        if (check.exit_code != 1 ||
            check.out != "not realizable\nX2 violation: x y < a b\n")
            return {false, "case (b): unexpected check output"};
    }

    // (c) Cross consistency forces both orientations between ab and xy.
    {
        TempFile in("acc_c.lcc",
                    "x x < a b\n"
                    "y y < a b\n"
                    "a a < x y\n"
                    "b b < x y\n");
        auto closure = cli({"closure", in.str()});
        if (closure.exit_code != 0)
            return {false, "case (c): closure failed"};
        if (closure.out.find("x y < a b\n") == std::string::npos ||
            closure.out.find("a b < x y\n") == std::string::npos)
            return {false, "case (c): missing merged orientation"};
        if (closure.out != "a a < a a\n"
                           "a a < a b\n"
                           "a a < x y\n"
                           "a b < a b\n"
                           "a b < x y\n"
                           "b b < a b\n"
                           "b b < b b\n"
                           "b b < x y\n"
                           "x x < a b\n"
                           "x x < x x\n"
                           "x x < x y\n"
                           "x y < a b\n"
                           "x y < x y\n"
                           "y y < a b\n"
                           "y y < x y\n"
                           "y y < y y\n")
            return {false, "case (c): closure bytes changed"};
    }

    // (d) Merged triple with two overlapping self-comparable pairs: the
    // reduction is multi-rooted, so the network gains _root.
    {
        Relation R = testutil::rel_from(
            "x y < x z\n"
            "x z < y z\n"
            "y z < x y\n"
            "a b < a b\n"
            "b c < b c\n");
        const LeafSet& L = R.leaves();
        ClosureResult closure = plus_closure(R);
        ClassPartition part = equivalence_classes(closure);
        const auto class_members = [&](const char* a, const char* b) {
            return part.members[part.class_of[R.id_of(Pair(L.id(a), L.id(b)))]];
        };
        if (class_members("x", "y") !=
            std::vector<Pair>{Pair(L.id("x"), L.id("y")), Pair(L.id("x"), L.id("z")),
                              Pair(L.id("y"), L.id("z"))})
            return {false, "case (d): triple did not merge"};
        if (class_members("a", "b") != std::vector<Pair>{Pair(L.id("a"), L.id("b"))} ||
            class_members("b", "c") != std::vector<Pair>{Pair(L.id("b"), L.id("c"))})
            return {false, "case (d): ab or bc merged unexpectedly"};

        TempFile in("acc_d.lcc",
                    "x y < x z\n"
                    "x z < y z\n"
                    "y z < x y\n"
                    "a b < a b\n"
                    "b c < b c\n");
        auto network = cli({"realize", in.str()});
        if (network.exit_code != 0 ||
            network.out != "leaves: a b c x y z\n"
                           "{a,b} -> a\n"
                           "{a,b} -> b\n"
                           "{b,c} -> b\n"
                           "{b,c} -> c\n"
                           "{x,y} -> x\n"
                           "{x,y} -> y\n"
                           "{x,y} -> z\n"
                           "_root -> {a,b}\n"
                           "_root -> {b,c}\n"
                           "_root -> {x,y}\n")
            return {false, "case (d): unexpected network output"};
        auto reduced = cli({"realize", in.str(), "--output", "reduced"});
        if (reduced.exit_code != 0 || reduced.out == network.out ||
            reduced.out.find("_root") != std::string::npos)
            return {false, "case (d): reduction should lack _root"};
    }

    // (e) The closure orients ab below ac and never the reverse.
    {
        TempFile in("acc_e.lcc",
                    "a a < a c\n"
                    "b b < a c\n"
                    "a a < a b\n");
        auto closure = cli({"closure", in.str()});
        if (closure.exit_code != 0)
            return {false, "case (e): closure failed"};
        if (closure.out != "a a < a a\n"
                           "a a < a b\n"
                           "a a < a c\n"
                           "a b < a b\n"
                           "a b < a c\n"
                           "a c < a c\n"
                           "b b < a b\n"
                           "b b < a c\n"
                           "b b < b b\n"
                           "c c < a c\n"
                           "c c < c c\n")
            return {false, "case (e): closure bytes changed"};
        if (closure.out.find("a b < a c\n") == std::string::npos ||
            closure.out.find("a c < a b\n") != std::string::npos)
            return {false, "case (e): wrong orientation"};
    }

    return {true, "all five golden cases, byte-stable output"};
}

// 7. Extraction laws on 300 random DAGs.
Outcome criterion7(const std::vector<Dag>& corpus) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Dag& G = corpus[i];
        if (G.vertex_count() > 14)
            return {false, "DAG " + std::to_string(i) + " exceeds 14 vertices"};
        Relation leq = extract_leq(G);
        Relation lt = extract_strict(G);
        Relation leq_closed = plus_closure(leq).closure;
        Relation lt_closed = plus_closure(lt).closure;
        if (!(leq_closed == leq))
            return {false, "leq relation is not +-closed, DAG " + std::to_string(i)};
        if (!(lt_closed == leq))
            return {false, "closure of strict differs from leq, DAG " + std::to_string(i)};
        if (lt == lt_closed)
            return {false, "strict relation unexpectedly +-closed, DAG " + std::to_string(i)};
        if (!verify_realizes(G, leq).ok)
            return {false, "G does not realize its leq relation, DAG " + std::to_string(i)};
        if (!verify_strictly_realizes(G, lt).ok)
            return {false, "G does not strictly realize its strict relation, DAG " +
                               std::to_string(i)};
    }
    return {true, "extraction laws on 300 random DAGs, |X| <= 6, <= 14 vertices"};
}

// 8. Transitive reduction: reachability-preserving, idempotent,
// shortcut-free, LCA-preserving.
Outcome criterion8(const std::vector<Dag>& corpus) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Dag& G = corpus[i];
        Dag H = transitive_reduction(G);
        if (H.vertex_count() != G.vertex_count())
            return {false, "reduction changed the vertex set, DAG " + std::to_string(i)};
        for (std::size_t v = 0; v < G.vertex_count(); ++v) {
            if (!(H.ancestors(static_cast<VertexId>(v)) ==
                  G.ancestors(static_cast<VertexId>(v))))
                return {false, "reachability changed, DAG " + std::to_string(i)};
        }
        Dag H2 = transitive_reduction(H);
        if (serialize_dag(H2) != serialize_dag(H))
            return {false, "reduction is not idempotent, DAG " + std::to_string(i)};
        for (std::size_t u = 0; u < H.vertex_count(); ++u) {
            for (VertexId w : H.children(static_cast<VertexId>(u))) {
                for (VertexId c : H.children(static_cast<VertexId>(u))) {
                    if (c != w && H.descendants(c).test(w))
                        return {false, "shortcut survived, DAG " + std::to_string(i)};
                }
            }
        }
        const std::size_t n = G.leaves().size();
        for (PairId id = 0; id < pair_count(n); ++id) {
            Pair p = pair_from_id(id, n);
            std::vector<VertexId> a = lca_set(G, std::vector<LeafId>{p.lo, p.hi});
            std::vector<VertexId> b = lca_set(H, std::vector<LeafId>{p.lo, p.hi});
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                return {false, "LCA set changed under reduction, DAG " + std::to_string(i)};
        }
    }
    return {true, "transitive reduction laws on the same 300 DAGs"};
}

// Test-local realizability scans over the naive closure, used to confirm
// negative verdicts independently of the closure engine.
bool oracle_x1_ok(const Relation& C) {
    for (auto [p, q] : C.facts()) {
        if (q.singleton() && !(p == q))
            return false;
    }
    return true;
}

bool oracle_x2_ok(const Relation& R, const Relation& C) {
    Relation tc = transitive_closure(R);
    for (PairId p = 0; p < tc.universe(); ++p) {
        for (PairId q = 0; q < tc.universe(); ++q) {
            if (tc.contains(p, q) && !tc.contains(q, p) && C.contains(q, p))
                return false;
        }
    }
    return true;
}

// 9. Joint order/incomparability verdicts match direct verification.
Outcome criterion9() {
    int positive = 0;
    int base_rejections = 0;
    int pair_rejections = 0;
    for (int i = 0; i < 300; ++i) {
        RandomSpec spec{3 + static_cast<std::size_t>(i % 3), (i % 2) ? 0.08 : 0.03,
                        9000 + static_cast<std::uint64_t>(i), RandomSpec::Mode::relation};
        Relation R = random_relation(spec);
        std::mt19937_64 rng(77000 + static_cast<std::uint64_t>(i));
        Relation S(R.leaves());
        const std::size_t want = rng() % 5;
        for (int tries = 0; S.size() < want && tries < 64; ++tries) {
            PairId p = static_cast<PairId>(rng() % R.universe());
            PairId q = static_cast<PairId>(rng() % R.universe());
            if (p != q)
                S.insert(p, q);
        }

        PairVerdict verdict = realize_pair(R, S);

        Relation RS = augment(R, S);
        Relation C = naive_plus_closure(RS);
        bool oracle_realizable = oracle_x1_ok(C) && oracle_x2_ok(RS, C);

        bool direct = false;
        if (oracle_realizable) {
            Dag N = canonical_network(RS);
            direct = verify_realizes(N, R).ok;
            for (auto [p, q] : S.facts()) {
                auto u = lca_unique(N, p);
                auto w = lca_unique(N, q);
                direct = direct && u && w &&
                         compare_vertices(N, *u, *w) == VertexOrder::incomparable;
            }
        }
        if (verdict.ok != direct)
            return {false, "verdict mismatch on " + to_string(spec)};

        if (verdict.ok) {
            ++positive;
            continue;
        }
        // The reported reason must be confirmed by the oracle closure.
        if (!verdict.base.realizable) {
            if (oracle_realizable)
                return {false, "claimed condition (a) not confirmed on " + to_string(spec)};
            ++base_rejections;
        } else if (!verdict.comparability_violations.empty()) {
            for (auto [p, q] : verdict.comparability_violations) {
                if (!C.contains(p, q) && !C.contains(q, p))
                    return {false, "claimed condition (b) not confirmed on " + to_string(spec)};
            }
            ++pair_rejections;
        } else {
            return {false, "negative verdict without a reason on " + to_string(spec)};
        }
    }
    if (positive == 0 || base_rejections == 0 || pair_rejections == 0)
        return {false, "corpus misses a verdict kind (" + std::to_string(positive) + "/" +
                           std::to_string(base_rejections) + "/" +
                           std::to_string(pair_rejections) + ")"};
    return {true, "joint verdicts match direct verification on 300 pairs (" +
                      std::to_string(positive) + " ok, " + std::to_string(base_rejections) +
                      " base rejections, " + std::to_string(pair_rejections) +
                      " incomparability rejections)"};
}

// 10. `realize` at |X| = 25 with exactly 2000 constraints, budget 10 s.
Outcome criterion10() {
    Relation R(default_leaf_set(25));
    std::mt19937_64 rng(0xacce5510);
    const std::uint64_t cells =
        static_cast<std::uint64_t>(R.universe()) * R.universe();
    while (R.size() < 2000) {
        std::uint64_t draw = rng() % cells;
        R.insert(static_cast<PairId>(draw / R.universe()),
                 static_cast<PairId>(draw % R.universe()));
    }
    TempFile in("acc_perf.lcc", serialize_constraints(R));

    auto start = std::chrono::steady_clock::now();
    auto result = cli({"realize", in.str()});
    double elapsed = seconds_since(start);

    if (result.exit_code != 0 && result.exit_code != 1)
        return {false, "realize errored (exit " + std::to_string(result.exit_code) + ")"};
    if (elapsed >= 10.0)
        return {false, "realize took " + format_seconds(elapsed) + "s (budget 10s)"};
    return {true, "realize on |X|=25 with 2000 constraints in " + format_seconds(elapsed) +
                      "s"};
}

} // namespace

int main() {
    std::vector<Instance> relations = relation_corpus();
    std::vector<Dag> dags = dag_corpus();

    Outcome results[10] = {
        criterion1(relations), criterion2(relations), criterion3(relations),
        criterion4(relations), criterion5(relations), criterion6(),
        criterion7(dags),      criterion8(dags),      criterion9(),
        criterion10(),
    };

    bool all = true;
    for (int i = 0; i < 10; ++i) {
        std::printf("%s criterion %d: %s\n", results[i].pass ? "PASS" : "FAIL", i + 1,
                    results[i].text.c_str());
        all = all && results[i].pass;
    }
    return all ? 0 : 1;
}
