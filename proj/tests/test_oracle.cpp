#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "trix/gen.hpp"
#include "trix/oracle.hpp"

using namespace trix;
using namespace trix::oracle;
using testutil::fx1;
using testutil::s;

namespace {

// Test-side maximality predicates computed straight from the definitions:
// occurrences by scanning all ancestor pairs, extensions by set membership.
struct BruteSets {
    StringSet substr;
    const AugmentedTrie* t;
    Symbol max_sym;

    explicit BruteSets(const AugmentedTrie& trie) : t(&trie) {
        substr = enumerate(trie, Which::kSubstr, Orientation::kForward);
        max_sym = trie.base.sigma;
    }
    std::vector<std::pair<NodeId, NodeId>> occ(const Str& x) const {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (NodeId v = 0; v < t->node_count(); ++v) {
            if (t->depth(v) < x.size()) continue;
            NodeId u = v;
            bool ok = true;
            for (std::size_t i = 0; i < x.size() && ok; ++i) {
                ok = t->label_to_parent(u) == x[x.size() - 1 - i];
                u = t->parent(u);
            }
            if (ok) out.emplace_back(u, v);
        }
        return out;
    }
    bool right_max(const Str& x) const {
        int ext = 0;
        for (Symbol a = 0; a <= max_sym; ++a) {
            Str xa = x;
            xa.push_back(a);
            ext += substr.contains(xa);
        }
        if (ext >= 2) return true;
        for (auto [u, v] : occ(x))
            if (t->base.children[v].empty() && v != t->bot) return true;
        return false;
    }
    bool left_max(const Str& x) const {
        int ext = 0;
        for (Symbol a = 0; a <= max_sym; ++a) {
            Str ax{a};
            ax.insert(ax.end(), x.begin(), x.end());
            ext += substr.contains(ax);
        }
        if (ext >= 2) return true;
        for (auto [u, v] : occ(x))
            if (u == t->bot) return true;
        return false;
    }
};

}  // namespace

TEST_CASE("enumerate: FX1 backward suffixes") {
    AugmentedTrie at = augment(fx1());
    StringSet suf = enumerate(at, Which::kSuffix, Orientation::kBackward);
    CHECK(suf.size() == 4);  // = n̂ - 1
    CHECK(suf.contains(s({0})));
    CHECK(suf.contains(s({1, 0})));
    CHECK(suf.contains(s({2, 1, 0})));
    CHECK(suf.contains(s({2, 0})));
}

TEST_CASE("enumerate: comb suffix counts meet the quadratic family bound") {
    ForwardTrie t = gen::comb(4);
    CHECK(t.node_count() == 11);
    CHECK(enumerate_raw(t, Which::kSuffix, Orientation::kForward).size() >= 20);
    CHECK(enumerate(augment(gen::comb(4)), Which::kSuffix, Orientation::kForward).size() >= 20);
}

TEST_CASE("enumerate: forward substrings are reversed backward substrings") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        AugmentedTrie at = augment(gen::random_trie(40, 3, seed));
        StringSet fwd = enumerate(at, Which::kSubstr, Orientation::kForward);
        StringSet bwd = enumerate(at, Which::kSubstr, Orientation::kBackward);
        CHECK(fwd.size() == bwd.size());
        for (const Str& x : fwd.items()) CHECK(bwd.contains(reversed(x)));
    }
}

TEST_CASE("maximal_extensions on FX1") {
    AugmentedTrie at = augment(fx1());
    // "b" is maximal already: followed by {a,$-boundary...} and preceded by {$, a}.
    MaximalExtensions mb = maximal_extensions(at, s({2}), Orientation::kForward);
    CHECK(mb.l_mxml == s({2}));
    CHECK(mb.r_mxml == s({2}));
    CHECK(mb.mxml == s({2}));
    // "a" occurs only preceded by the terminator.
    MaximalExtensions ma = maximal_extensions(at, s({1}), Orientation::kForward);
    CHECK(ma.l_mxml == s({0, 1}));
    CHECK_THROWS_AS(maximal_extensions(at, s({2, 1}), Orientation::kForward),
                    std::invalid_argument);
}

TEST_CASE("maximal_extensions: minimality and composition orders") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        AugmentedTrie at = augment(gen::random_trie(22, 3, seed));
        BruteSets brute(at);
        for (const Str& x : brute.substr.items()) {
            MaximalExtensions m = maximal_extensions(at, x, Orientation::kForward);
            MaximalExtensions mr = maximal_extensions(at, m.r_mxml, Orientation::kForward);
            CHECK(m.mxml == mr.l_mxml);  // r∘l = l∘r

            // The returned strings satisfy the predicates and every shorter
            // extension fails them.
            CHECK(brute.right_max(m.r_mxml));
            CHECK(brute.left_max(m.l_mxml));
            for (std::size_t len = x.size(); len < m.r_mxml.size(); ++len)
                CHECK_FALSE(brute.right_max(Str(m.r_mxml.begin(), m.r_mxml.begin() + len)));
            for (std::size_t cut = m.l_mxml.size() - x.size(); cut > 0; --cut)
                CHECK_FALSE(brute.left_max(Str(m.l_mxml.begin() + cut, m.l_mxml.end())));

            // Direct search: the shortest maximal substring containing x.
            std::size_t best = SIZE_MAX;
            for (const Str& cand : brute.substr.items()) {
                if (cand.size() < x.size() || cand.size() >= best) continue;
                bool contains = false;
                for (std::size_t off = 0; off + x.size() <= cand.size() && !contains; ++off)
                    contains = std::equal(x.begin(), x.end(), cand.begin() + off);
                if (contains && brute.right_max(cand) && brute.left_max(cand))
                    best = cand.size();
            }
            CHECK(m.mxml.size() == best);
        }
    }
}

TEST_CASE("maximal_extensions: backward orientation mirrors forward under reversal") {
    // Reversing swaps the left and right extension functions.
    AugmentedTrie fx = augment(fx1());
    MaximalExtensions mb = maximal_extensions(fx, s({1}), Orientation::kBackward);
    // In the backward trie "a" occurs only followed by the terminator.
    CHECK(mb.r_mxml == s({1, 0}));

    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        AugmentedTrie at = augment(gen::random_trie(20, 3, seed));
        StringSet fwd = enumerate(at, Which::kSubstr, Orientation::kForward);
        for (const Str& x : fwd.items()) {
            MaximalExtensions f = maximal_extensions(at, x, Orientation::kForward);
            MaximalExtensions b = maximal_extensions(at, reversed(x),
                                                     Orientation::kBackward);
            CHECK(b.l_mxml == reversed(f.r_mxml));
            CHECK(b.r_mxml == reversed(f.l_mxml));
            CHECK(b.mxml == reversed(f.mxml));
        }
    }
}

TEST_CASE("build_explicit: path family backward suffix tree, pre-augmentation") {
    OracleAutomaton st = build_explicit_raw(gen::path_ab(5), Kind::kSuffixTree,
                                            Orientation::kBackward);
    CHECK(st.node_count() == 9);   // 2m-1
    CHECK(st.edge_count() == 8);   // 2m-2
}

TEST_CASE("build_explicit: broom DAWG edge lower bound") {
    OracleAutomaton dawg = build_explicit(augment(gen::broom(10, 4)), Kind::kDawg,
                                          Orientation::kForward);
    CHECK(dawg.edge_count() >= 16);  // sigma(n - sigma - 2)
}

TEST_CASE("build_explicit: merging the broom DAWG's sinks keeps every edge") {
    // Determinism means no two out-edges of a node share a label, so
    // collapsing all sinks into one accepting state removes no edge; the
    // quadratic blowup is not an artifact of split sinks.
    OracleAutomaton dawg = build_explicit(augment(gen::broom(10, 4)), Kind::kDawg,
                                          Orientation::kForward);
    std::vector<bool> sink(dawg.node_count());
    for (std::uint32_t c = 0; c < dawg.node_count(); ++c)
        sink[c] = dawg.nodes[c].out.empty();
    std::set<std::tuple<std::uint32_t, Symbol, std::uint32_t>> merged;
    const std::uint32_t kSink = 0xFFFFFFFFu;
    for (const auto& e : dawg.edges)
        merged.insert({e.from, e.label[0], sink[e.to] ? kSink : e.to});
    CHECK(merged.size() == dawg.edge_count());
    CHECK(merged.size() >= 16);
}

TEST_CASE("build_explicit: sub-alphabet comb CDAWG equals its suffix tree") {
    AugmentedTrie at = augment(gen::subalpha_comb(2));
    OracleAutomaton cdawg = build_explicit(at, Kind::kCdawg, Orientation::kBackward);
    OracleAutomaton stree = build_explicit(at, Kind::kSuffixTree, Orientation::kBackward);
    CHECK(cdawg.node_count() == stree.node_count());
    CHECK(cdawg.edge_count() == stree.edge_count());

    std::set<Str> a, b;
    for (const auto& n : cdawg.nodes) a.insert(n.longest);
    for (const auto& n : stree.nodes) b.insert(n.longest);
    CHECK(a == b);

    // n̂-1 sinks, all suffix classes.
    std::size_t sinks = 0;
    for (const auto& n : cdawg.nodes) sinks += n.out.empty();
    CHECK(sinks == at.node_count() - 1);
}

TEST_CASE("build_explicit: suffix trie node count is the substring count") {
    AugmentedTrie at = augment(fx1());
    OracleAutomaton trie = build_explicit(at, Kind::kSuffixTrie, Orientation::kForward);
    CHECK(trie.node_count() == enumerate(at, Which::kSubstr, Orientation::kForward).size());
    CHECK(trie.edge_count() == trie.node_count() - 1);
}

TEST_CASE("build_explicit enforces the desk-scale limit") {
    CHECK_THROWS_AS(build_explicit(augment(gen::broom(10, 4)), Kind::kDawg,
                                   Orientation::kForward, 5),
                    DeskScaleError);
}

TEST_CASE("dawg invariants: members, primary edges, suffix links") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        AugmentedTrie at = augment(gen::random_trie(30, 3, seed));
        SuffixTrie trie = build_suffix_trie(TrieView::of(at), Orientation::kForward);
        OracleAutomaton dawg = from_suffix_trie(trie, Kind::kDawg);
        BruteSets brute(at);

        for (std::uint32_t i = 0; i < trie.nodes.size(); ++i) {
            Str x = trie.string_of(i);
            // Every member is a suffix of its class longest (the l-mxml).
            Str l = trie.string_of(trie.nodes[i].l_root);
            CHECK(x.size() <= l.size());
            CHECK(std::equal(x.rbegin(), x.rend(), l.rbegin()));
            // The class longest is left-maximal and minimal among
            // left-maximal extensions (it is l-mxml(x)).
            CHECK(brute.left_max(l));
            for (std::size_t cut = l.size() - x.size(); cut > 0; --cut)
                CHECK_FALSE(brute.left_max(Str(l.begin() + cut, l.end())));
        }
        for (const auto& e : dawg.edges) {
            CHECK(e.primary ==
                  (dawg.nodes[e.from].longest.size() + 1 == dawg.nodes[e.to].longest.size()));
        }
        for (std::uint32_t c = 0; c < dawg.node_count(); ++c) {
            const Str& l = dawg.nodes[c].longest;
            if (dawg.slink[c] < 0) {
                CHECK(l.empty());
                continue;
            }
            // The slink target holds the longest proper suffix of the class
            // longest that falls outside the class.
            Str expect;
            for (std::size_t k = 1; k <= l.size(); ++k) {
                Str tail(l.begin() + static_cast<std::ptrdiff_t>(k), l.end());
                std::uint32_t node = static_cast<std::uint32_t>(trie.locate(tail));
                if (trie.nodes[node].l_root != trie.nodes[trie.locate(l)].l_root) {
                    expect = trie.string_of(trie.nodes[node].l_root);
                    break;
                }
            }
            CHECK(dawg.nodes[dawg.slink[c]].longest == expect);
        }
    }
}

TEST_CASE("wlink_oracle basics on FX1") {
    AugmentedTrie at = augment(fx1());
    OracleAutomaton st = build_explicit(at, Kind::kSuffixTree, Orientation::kBackward);
    std::int32_t root = st.find_node({});
    REQUIRE(root >= 0);

    auto w_term = wlink_oracle(st, static_cast<std::uint32_t>(root), 0);
    REQUIRE(w_term.has_value());
    CHECK(w_term->hard);
    CHECK(st.nodes[w_term->node].longest == s({0}));

    auto w_a = wlink_oracle(st, static_cast<std::uint32_t>(root), 1);
    REQUIRE(w_a.has_value());
    CHECK_FALSE(w_a->hard);
    CHECK(st.nodes[w_a->node].longest == s({1, 0}));

    std::int32_t b = st.find_node(s({2}));
    REQUIRE(b >= 0);
    CHECK_FALSE(wlink_oracle(st, static_cast<std::uint32_t>(b), 1).has_value());
}

TEST_CASE("measure: report fields and cross-orientation equalities") {
    AugmentedTrie at = augment(fx1());
    SizeReport r = measure(at);
    CHECK(r.n == 4);
    CHECK(r.n_aug == 5);
    CHECK(r.sa_b_len == 4);
    CHECK(r.stree_b_nodes == 6);
    CHECK(r.stree_b_edges == 5);
    CHECK(r.cdawg_f_nodes == r.cdawg_b_nodes);
    CHECK(r.dawg_f_nodes == r.stree_b_nodes);
    CHECK(r.dawg_b_nodes >= r.stree_f_nodes);  // right-maximal superset of explicit nodes

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        SizeReport rr = measure(augment(gen::random_trie(35, 4, seed)));
        CHECK(rr.sa_b_len == rr.n_aug - 1);
        CHECK(rr.stree_b_nodes <= 2 * rr.n_aug - 3);
        CHECK(rr.stree_b_edges <= 2 * rr.n_aug - 4);
        CHECK(rr.cdawg_f_nodes == rr.cdawg_b_nodes);
        CHECK(rr.dawg_f_nodes == rr.stree_b_nodes);
        CHECK(rr.dawg_b_nodes >= rr.stree_f_nodes);
        CHECK(rr.dawg_f_nodes <= 2 * rr.n_aug - 3);
    }
}
