#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "trix/checks.hpp"
#include "trix/gen.hpp"
#include "trix/oracle.hpp"
#include "trix/suffix_tree.hpp"

using namespace trix;
using testutil::fx1;
using testutil::s;
using testutil::st_node_for;

TEST_CASE("build: FX1 shape") {
    Index ix = Index::build(fx1());
    CHECK(ix.st.node_count() == 6);
    CHECK(ix.st.edge_count() == 5);
    CHECK(st_node_for(ix, {}) == 0);
    CHECK(st_node_for(ix, s({2})) != kNoNode);        // internal "b"
    CHECK(st_node_for(ix, s({0})) != kNoNode);        // leaf "$"
    CHECK(st_node_for(ix, s({1, 0})) != kNoNode);     // leaf "a$"
    CHECK(st_node_for(ix, s({2, 0})) != kNoNode);     // leaf "b$"
    CHECK(st_node_for(ix, s({2, 1, 0})) != kNoNode);  // leaf "ba$"

    NodeId b = st_node_for(ix, s({2}));
    CHECK_FALSE(ix.st.is_leaf(b));
    CHECK(ix.st.nodes[b].children.size() == 2);
}

TEST_CASE("build: equals the oracle on the path and degenerate families") {
    // Augmented path family: every suffix gains a $-leaf but a^{m-1} stays
    // implicit, so the count is 2m, within the 2n̂-3 bound.
    Index ix = Index::build(gen::path_ab(5));
    auto orc = oracle::build_explicit(ix.trie, oracle::Kind::kSuffixTree,
                                      Orientation::kBackward);
    CHECK(ix.st.node_count() == orc.node_count());
    CHECK(ix.st.node_count() == 10);
    CHECK(ix.st.node_count() <= 2 * ix.trie.node_count() - 3);

    Index tiny = Index::build(testutil::single_node());
    auto orc2 = oracle::build_explicit(tiny.trie, oracle::Kind::kSuffixTree,
                                       Orientation::kBackward);
    CHECK(tiny.st.node_count() == orc2.node_count());
    CHECK(tiny.st.node_count() == 2);
}

TEST_CASE("suffix_array: FX1 order and general properties") {
    Index ix = Index::build(fx1());
    CHECK(ix.st.sa == std::vector<NodeId>{0, 1, 2, 3});
    for (NodeId v = 0; v < 4; ++v) CHECK(ix.st.sa_inv[ix.st.sa[v]] == v);

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Index r = Index::build(gen::random_trie(80, 3, seed));
        CHECK(r.st.sa.size() == r.trie.node_count() - 1);
        for (std::size_t i = 1; i < r.st.sa.size(); ++i)
            CHECK(r.trie.suffix_of(r.st.sa[i - 1]) < r.trie.suffix_of(r.st.sa[i]));
    }
}

TEST_CASE("compute_suffix_links: examples and the strip-one-character law") {
    Index ix = Index::build(fx1());
    NodeId ba = st_node_for(ix, s({2, 1, 0}));
    NodeId a = st_node_for(ix, s({1, 0}));
    NodeId b = st_node_for(ix, s({2}));
    CHECK(ix.st.nodes[ba].slink == a);
    CHECK(ix.st.nodes[b].slink == 0);

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Index r = Index::build(gen::random_trie(70, 4, seed));
        for (NodeId v = 1; v < r.st.node_count(); ++v) {
            Str full = r.st.expand(r.trie, v);
            CHECK(r.st.expand(r.trie, r.st.nodes[v].slink) ==
                  Str(full.begin() + 1, full.end()));
        }
    }
}

TEST_CASE("derive_hard_wlinks: inverse of slink with symbol labels") {
    Index ix = Index::build(fx1());
    CHECK(ix.hard.entry_count() == ix.st.node_count() - 1);
    auto wb = ix.hard.lookup(0, 2);
    REQUIRE(wb.has_value());
    CHECK(*wb == st_node_for(ix, s({2})));
    CHECK_FALSE(ix.hard.lookup(0, 1).has_value());  // W_a(root) is soft

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Index r = Index::build(gen::random_trie(60, 5, seed));
        CHECK(r.hard.entry_count() == r.st.node_count() - 1);
        for (NodeId v = 0; v < r.st.node_count(); ++v)
            for (const auto& [a2, u] : r.hard.out[v]) {
                CHECK(r.st.nodes[u].slink == v);
                Str su = r.st.expand(r.trie, u);
                CHECK(su.front() == a2);
            }
    }
}

TEST_CASE("child_by_symbol: binary search over sorted children") {
    Index ix = Index::build(fx1());
    NodeId leaf = st_node_for(ix, s({0}));
    CHECK_FALSE(ix.st.child_by_symbol(leaf, 1).has_value());
    auto b = ix.st.child_by_symbol(0, 2);
    REQUIRE(b.has_value());
    CHECK(*b == st_node_for(ix, s({2})));

    Index r = Index::build(gen::random_trie(90, 6, 3));
    for (NodeId v = 0; v < r.st.node_count(); ++v)
        for (Symbol c = 0; c <= 7; ++c) {
            std::optional<NodeId> linear;
            for (const auto& [sym, u] : r.st.nodes[v].children)
                if (sym == c) linear = u;
            CHECK(r.st.child_by_symbol(v, c) == linear);
        }
}

TEST_CASE("subtree_leaves: SA-ordered trie ids") {
    Index ix = Index::build(fx1());
    CHECK(ix.st.subtree_leaves(0) == std::vector<NodeId>{0, 1, 2, 3});
    NodeId b = st_node_for(ix, s({2}));
    CHECK(ix.st.subtree_leaves(b) == std::vector<NodeId>{2, 3});
    NodeId leaf = st_node_for(ix, s({1, 0}));
    CHECK(ix.st.subtree_leaves(leaf) == std::vector<NodeId>{1});
    CHECK(ix.st.leaf_count(0) == 4);
}

TEST_CASE("edge labels expand to the suffix set along root-to-leaf paths") {
    Index ix = Index::build(gen::random_trie(50, 3, 9));
    std::set<Str> expanded, suffixes;
    for (NodeId v = 0; v < ix.st.node_count(); ++v)
        if (ix.st.is_leaf(v)) expanded.insert(ix.st.expand(ix.trie, v));
    for (NodeId v = 0; v < ix.trie.node_count(); ++v)
        if (v != ix.trie.bot) suffixes.insert(ix.trie.suffix_of(v));
    CHECK(expanded == suffixes);
}

TEST_CASE("differential: whole-structure checks pass on random tries") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        std::uint32_t sigma = seed % 2 ? 2 : 7;
        auto failures = checks::verify_trie(gen::random_trie(64 + 13 * seed, sigma, seed));
        for (const auto& f : failures) {
            CAPTURE(f.name);
            CAPTURE(f.detail);
            CHECK(false);
        }
    }
}

TEST_CASE("dump emits one line per node") {
    Index ix = Index::build(fx1());
    std::string d = ix.st.dump();
    CHECK(std::count(d.begin(), d.end(), '\n') == 6);
    CHECK(d.find("leaf:") != std::string::npos);
    CHECK(d.find("children=(") != std::string::npos);
}
