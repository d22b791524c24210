#include <doctest.h>

#include <vector>

#include "lcanet/incomparability.hpp"
#include "lcanet/io.hpp"

#include "helpers.hpp"

using namespace lcanet;
using testutil::P;
using testutil::rel_from;

TEST_SUITE_BEGIN("incomparability");

namespace {

Relation empty_on(const std::vector<std::string>& names) {
    return Relation(LeafSet(names));
}

} // namespace

TEST_CASE("augmentation") {
    LeafSet L({"a", "b", "c", "d"});
    Relation R(L);
    R.insert(P(L, "a", "a"), P(L, "a", "b"));

    SUBCASE("only pairs outside supp+ gain anchors") {
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "c", "d"));
        Relation RS = augment(R, S);
        // ab is already in supp+, cd is new: exactly (cc,cd) and (dd,cd).
        CHECK(RS.size() == 3);
        CHECK(RS.contains(P(L, "c", "c"), P(L, "c", "d")));
        CHECK(RS.contains(P(L, "d", "d"), P(L, "c", "d")));
        CHECK(R.subset_of(RS));
    }

    SUBCASE("singletons in S never get anchors") {
        Relation S(L);
        S.insert(P(L, "c", "d"), P(L, "b", "b"));
        Relation RS = augment(R, S);
        CHECK(RS.size() == 3);
        CHECK_FALSE(RS.contains(P(L, "b", "b"), P(L, "b", "b")));
    }

    SUBCASE("empty S is a no-op") {
        CHECK(augment(R, Relation(L)) == R);
    }

    SUBCASE("leaf sets must match") {
        Relation S(LeafSet({"a", "b", "c"}));
        CHECK_THROWS_AS(augment(R, S), LeafSetMismatch);
    }
}

TEST_CASE("joint realization succeeds") {
    SUBCASE("incomparable classes of a realizable relation") {
        Relation R = rel_from(
            "x y < x z\n"
            "x z < y z\n"
            "y z < x y\n"
            "a b < a b\n"
            "b c < b c\n");
        const LeafSet& L = R.leaves();
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "b", "c"));

        PairVerdict v = realize_pair(R, S);
        CHECK(v.ok);
        CHECK(v.base.realizable);
        CHECK(v.comparability_violations.empty());
        REQUIRE(v.network.has_value());

        auto u = lca_unique(*v.network, P(L, "a", "b"));
        auto w = lca_unique(*v.network, P(L, "b", "c"));
        REQUIRE(u.has_value());
        REQUIRE(w.has_value());
        CHECK(compare_vertices(*v.network, *u, *w) == VertexOrder::incomparable);
        CHECK(verify_realizes(*v.network, R).ok);
    }

    SUBCASE("anchors make fresh pairs comparable to their leaves only") {
        Relation R = empty_on({"a", "b", "c", "d"});
        const LeafSet& L = R.leaves();
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "c", "d"));

        PairVerdict v = realize_pair(R, S);
        CHECK(v.ok);
        REQUIRE(v.network.has_value());
        // The network realizes the augmented relation, not just R.
        CHECK(verify_realizes(*v.network, augment(R, S)).ok);
    }

    SUBCASE("empty S reduces to plain realization") {
        Relation R = rel_from("a a < a b\n");
        PairVerdict v = realize_pair(R, Relation(R.leaves()));
        CHECK(v.ok);
        CHECK(v.comparability_violations.empty());
    }
}

TEST_CASE("joint realization fails") {
    SUBCASE("comparability forced by R itself") {
        Relation R = rel_from("a b < x y\n");
        const LeafSet& L = R.leaves();
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "x", "y"));

        PairVerdict v = realize_pair(R, S);
        CHECK_FALSE(v.ok);
        CHECK(v.base.realizable);
        REQUIRE(v.comparability_violations.size() == 1);
        CHECK(v.comparability_violations[0] ==
              std::pair(P(L, "a", "b"), P(L, "x", "y")));
        CHECK_FALSE(v.network.has_value());
    }

    SUBCASE("comparability forced by the augmentation") {
        // xx and yy below ab force (xy, ab) into the closure once xy gets
        // its anchors, so ab and xy cannot be made incomparable.
        Relation R = rel_from(
            "x x < a b\n"
            "y y < a b\n");
        const LeafSet& L = R.leaves();
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "x", "y"));

        PairVerdict v = realize_pair(R, S);
        CHECK_FALSE(v.ok);
        CHECK(v.base.realizable);
        REQUIRE(v.comparability_violations.size() == 1);
        CHECK(v.comparability_violations[0] ==
              std::pair(P(L, "a", "b"), P(L, "x", "y")));
    }

    SUBCASE("a pair is always comparable to its own singleton") {
        Relation R = empty_on({"a", "b"});
        const LeafSet& L = R.leaves();
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "a", "a"));

        PairVerdict v = realize_pair(R, S);
        CHECK_FALSE(v.ok);
        CHECK(v.base.realizable);
        REQUIRE(v.comparability_violations.size() == 1);
        CHECK(v.comparability_violations[0] ==
              std::pair(P(L, "a", "a"), P(L, "a", "b")));
    }

    SUBCASE("unrealizable augmented relation") {
        Relation R = rel_from(
            "x x < a b\n"
            "y y < a b\n"
            "a b < x y\n");
        const LeafSet& L = R.leaves();
        PairVerdict v = realize_pair(R, Relation(L));
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.base.realizable);
        REQUIRE(v.base.x2_violations.size() == 1);
        CHECK(v.base.x2_violations[0] == std::pair(P(L, "x", "y"), P(L, "a", "b")));
        CHECK(v.comparability_violations.empty());
        CHECK_FALSE(v.network.has_value());
    }
}

TEST_CASE("input validation") {
    Relation R = empty_on({"a", "b"});
    const LeafSet& L = R.leaves();

    SUBCASE("self-incomparability is malformed") {
        Relation S(L);
        S.insert(P(L, "a", "b"), P(L, "a", "b"));
        CHECK_THROWS_AS(realize_pair(R, S), InvalidInput);
    }

    SUBCASE("mismatched leaf sets") {
        Relation S(LeafSet({"a", "b", "c"}));
        CHECK_THROWS_AS(realize_pair(R, S), LeafSetMismatch);
    }
}

TEST_SUITE_END();
