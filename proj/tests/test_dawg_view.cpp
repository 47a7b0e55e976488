#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "trix/dawg_view.hpp"
#include "trix/gen.hpp"
#include "trix/oracle.hpp"

using namespace trix;
using testutil::fx1;
using testutil::s;
using testutil::st_node_for;

TEST_CASE("transition from the source on FX1") {
    Index ix = Index::build(fx1());
    ImplicitDawg d(ix);

    auto ta = d.transition(d.source(), 1);
    REQUIRE(ta.has_value());
    CHECK(ta->first == st_node_for(ix, s({1, 0})));
    CHECK(ta->second == EdgeKind::kSecondary);

    auto tb = d.transition(d.source(), 2);
    REQUIRE(tb.has_value());
    CHECK(tb->second == EdgeKind::kPrimary);

    CHECK_THROWS_AS(d.transition(999, 1), std::out_of_range);
    CHECK_THROWS_AS(d.transition(0, 3), std::out_of_range);
}

TEST_CASE("transition on a declared-but-absent symbol is none") {
    Index ix = Index::build(parse_trie("TRIE v1 3 3\n0 1 1\n0 2 2\n"));
    ImplicitDawg d(ix);
    for (NodeId v = 0; v < d.state_count(); ++v)
        CHECK_FALSE(d.transition(v, 3).has_value());
}

TEST_CASE("state counts match the duality") {
    CHECK(ImplicitDawg(Index::build(fx1())).state_count() == 6);

    Index path = Index::build(gen::path_ab(5));
    auto dawg = oracle::build_explicit(path.trie, oracle::Kind::kDawg,
                                       Orientation::kForward);
    CHECK(ImplicitDawg(path).state_count() == dawg.node_count());
    CHECK(ImplicitDawg(path).state_count() == 10);

    Index broom = Index::build(gen::broom(10, 4));
    auto broom_dawg = oracle::build_explicit(broom.trie, oracle::Kind::kDawg,
                                             Orientation::kForward);
    CHECK(ImplicitDawg(broom).state_count() <= 2 * broom.trie.node_count() - 3);
    CHECK(broom_dawg.edge_count() >= 16);
}

TEST_CASE("accepts_substring against the enumeration oracle") {
    Index ix = Index::build(fx1());
    ImplicitDawg d(ix);
    CHECK(d.accepts_substring({}));
    CHECK(d.accepts_substring(s({1, 2})));
    CHECK_FALSE(d.accepts_substring(s({2, 1})));
    CHECK_THROWS_AS(d.accepts_substring(s({0})), std::out_of_range);

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Index r = Index::build(gen::random_trie(60, 3, seed));
        ImplicitDawg view(r);
        auto substr = oracle::enumerate(r.trie, oracle::Which::kSubstr,
                                        Orientation::kForward);
        std::mt19937_64 rng(seed);
        for (int q = 0; q < 500; ++q) {
            Str p;
            for (std::size_t i = rng() % 6; i > 0; --i)
                p.push_back(1 + rng() % 3);
            CHECK(view.accepts_substring(p) == substr.contains(p));
        }
        for (const Str& x : substr.items()) {
            if (std::find(x.begin(), x.end(), kTerminator) != x.end()) continue;
            CHECK(view.accepts_substring(x));
        }
    }
}

TEST_CASE("auxiliary storage stays within 8 entries per trie node") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        std::size_t n = 50 + 40 * seed;
        Index ix = Index::build(gen::random_trie(n, static_cast<std::uint32_t>(n / 2), seed));
        CHECK(ImplicitDawg(ix).stored_entries() <= 8 * ix.trie.node_count());
    }
}
