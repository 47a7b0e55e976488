#include "trix/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "trix/dawg_view.hpp"
#include "trix/search.hpp"

namespace trix::checks {

namespace {

std::string str_to_string(const Str& s) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << ']';
    return out.str();
}

/// Prefix-indexed W-link answers over an oracle suffix tree: the shortest
/// explicit extension of a prefix is the lexicographically first node
/// string at or after it.
class WlinkOracle {
public:
    explicit WlinkOracle(const oracle::OracleAutomaton& stree) : stree_(&stree) {
        order_.resize(stree.node_count());
        for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
            return stree.nodes[a].longest < stree.nodes[b].longest;
        });
    }

    std::optional<oracle::WlinkResult> query(std::uint32_t v, Symbol a) const {
        Str want{a};
        const Str& s = stree_->nodes[v].longest;
        want.insert(want.end(), s.begin(), s.end());
        auto it = std::lower_bound(order_.begin(), order_.end(), want,
                                   [&](std::uint32_t i, const Str& w) {
                                       return stree_->nodes[i].longest < w;
                                   });
        if (it == order_.end()) return std::nullopt;
        const Str& cand = stree_->nodes[*it].longest;
        if (cand.size() < want.size() ||
            !std::equal(want.begin(), want.end(), cand.begin()))
            return std::nullopt;
        return oracle::WlinkResult{*it, cand.size() == want.size()};
    }

private:
    const oracle::OracleAutomaton* stree_;
    std::vector<std::uint32_t> order_;
};

struct OracleTreeTopo {
    std::vector<std::int32_t> parent;
    std::vector<std::uint32_t> depth;                 // node depth
    std::vector<std::uint32_t> pre, post;

    explicit OracleTreeTopo(const oracle::OracleAutomaton& t) {
        const std::size_t n = t.node_count();
        parent.assign(n, -1);
        depth.assign(n, 0);
        pre.assign(n, 0);
        post.assign(n, 0);
        for (const auto& e : t.edges) parent[e.to] = static_cast<std::int32_t>(e.from);
        std::uint32_t clock = 0;
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
        pre[0] = clock++;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < t.nodes[v].out.size()) {
                std::uint32_t c = t.edges[t.nodes[v].out[i++]].to;
                depth[c] = depth[v] + 1;
                pre[c] = clock++;
                stack.emplace_back(c, 0);
            } else {
                post[v] = clock;
                stack.pop_back();
            }
        }
    }
    bool is_ancestor(std::uint32_t u, std::uint32_t v) const {
        return pre[u] <= pre[v] && pre[v] < post[u];
    }
    std::uint32_t lca(std::uint32_t u, std::uint32_t v) const {
        while (!is_ancestor(u, v)) u = static_cast<std::uint32_t>(parent[u]);
        return u;
    }
};

}  // namespace

std::vector<std::pair<NodeId, NodeId>> brute_occurrences(const AugmentedTrie& t,
                                                         const Str& pattern) {
    std::vector<std::pair<NodeId, NodeId>> out;
    const std::uint32_t m = static_cast<std::uint32_t>(pattern.size());
    for (NodeId v = 0; v < t.node_count(); ++v) {
        if (v == t.bot || t.depth(v) < m) continue;
        bool ok = true;
        NodeId u = v;
        for (std::uint32_t i = 0; i < m && ok; ++i) {
            ok = t.label_to_parent(u) == pattern[m - 1 - i];
            u = t.parent(u);
        }
        if (ok) out.emplace_back(u, v);
    }
    return out;
}

Verifier::Verifier(ForwardTrie base, std::size_t desk_limit)
    : ix_(Index::build(std::move(base))), limit_(desk_limit) {
    trie_f_ = oracle::build_suffix_trie(oracle::TrieView::of(ix_.trie),
                                        Orientation::kForward, limit_);
    trie_b_ = oracle::build_suffix_trie(oracle::TrieView::of(ix_.trie),
                                        Orientation::kBackward, limit_);
    stree_b_ = oracle::from_suffix_trie(trie_b_, oracle::Kind::kSuffixTree);
}

void Verifier::inject_macro_fault() {
    // Prefer a soft entry: hard macro entries are shadowed by the hard
    // table, so flipping one would go unnoticed by construction.
    for (auto& links : ix_.mm.macro_links)
        for (auto& link : links)
            if (!link.hard) {
                link.target = (link.target + 1) % ix_.st.node_count();
                return;
            }
    for (auto& links : ix_.mm.macro_links)
        for (auto& link : links) {
            link.target = (link.target + 1) % ix_.st.node_count();
            return;
        }
}

CheckResult Verifier::structure_matches_oracle() {
    CheckResult r{"suffix tree matches oracle", true, ""};
    iso_.assign(ix_.st.node_count(), -1);

    std::map<Str, std::uint32_t> by_string;
    for (std::uint32_t i = 0; i < stree_b_.node_count(); ++i)
        by_string.emplace(stree_b_.nodes[i].longest, i);

    auto with_dump = [&](std::string msg) {
        // First lines of the debug dump make the mismatch inspectable.
        std::istringstream dump(ix_.st.dump());
        std::string line;
        for (int i = 0; i < 12 && std::getline(dump, line); ++i) msg += "\n  " + line;
        return msg;
    };
    if (ix_.st.node_count() != stree_b_.node_count()) {
        r.passed = false;
        r.detail = with_dump("node counts differ: " + std::to_string(ix_.st.node_count()) +
                             " vs oracle " + std::to_string(stree_b_.node_count()));
        return r;
    }
    for (NodeId v = 0; v < ix_.st.node_count(); ++v) {
        Str s = ix_.st.expand(ix_.trie, v);
        auto it = by_string.find(s);
        if (it == by_string.end()) {
            r.passed = false;
            r.detail = with_dump("node " + std::to_string(v) + " spells " +
                                 str_to_string(s) + ", absent from oracle tree");
            return r;
        }
        iso_[v] = static_cast<std::int32_t>(it->second);
        // Leaf role must carry over: the leaf for trie node w spells w's suffix.
        bool st_leaf = ix_.st.is_leaf(v);
        bool or_leaf = stree_b_.nodes[it->second].out.empty();
        if (st_leaf != or_leaf) {
            r.passed = false;
            r.detail = "leaf mismatch at node " + std::to_string(v);
            return r;
        }
        if (st_leaf && ix_.trie.suffix_of(ix_.st.nodes[v].leaf_for) != s) {
            r.passed = false;
            r.detail = "leaf map wrong at node " + std::to_string(v);
            return r;
        }
    }
    // Same node count + injective string map = isomorphism (edges are
    // determined by the nested strings); check child symbols anyway.
    for (NodeId v = 0; v < ix_.st.node_count(); ++v) {
        const auto& ch = ix_.st.nodes[v].children;
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i > 0 && ch[i].first <= ch[i - 1].first) {
                r.passed = false;
                r.detail = "children unsorted at node " + std::to_string(v);
                return r;
            }
            if (ix_.st.nodes[ch[i].second].first_symbol != ch[i].first ||
                ix_.st.edge_char(ix_.trie, ch[i].second, 1) != ch[i].first) {
                r.passed = false;
                r.detail = "edge label inconsistent at node " + std::to_string(v);
                return r;
            }
        }
    }
    iso_ok_ = true;
    return r;
}

CheckResult Verifier::suffix_links() {
    CheckResult r{"suffix links strip one character", true, ""};
    for (NodeId v = 1; v < ix_.st.node_count(); ++v) {
        Str s = ix_.st.expand(ix_.trie, v);
        Str tail(s.begin() + 1, s.end());
        if (ix_.st.expand(ix_.trie, ix_.st.nodes[v].slink) != tail) {
            r.passed = false;
            r.detail = "slink of node " + std::to_string(v) + " does not spell " +
                       str_to_string(tail);
            return r;
        }
    }
    return r;
}

CheckResult Verifier::suffix_array() {
    CheckResult r{"suffix array sorted, length n̂-1", true, ""};
    const auto& sa = ix_.st.sa;
    if (sa.size() != ix_.trie.node_count() - 1) {
        r.passed = false;
        r.detail = "length " + std::to_string(sa.size());
        return r;
    }
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (ix_.st.sa_inv[sa[i]] != i) {
            r.passed = false;
            r.detail = "inverse broken at " + std::to_string(i);
            return r;
        }
        if (i > 0 && !(ix_.trie.suffix_of(sa[i - 1]) < ix_.trie.suffix_of(sa[i]))) {
            r.passed = false;
            r.detail = "suffixes not strictly increasing at " + std::to_string(i);
            return r;
        }
    }
    // Child SA intervals partition the parent interval.
    for (NodeId v = 0; v < ix_.st.node_count(); ++v) {
        const auto& nd = ix_.st.nodes[v];
        std::uint32_t expect = nd.sa_lo + (ix_.st.is_leaf(v) ? 1 : 0);
        for (const auto& [c, u] : nd.children) {
            if (ix_.st.nodes[u].sa_lo != expect) {
                r.passed = false;
                r.detail = "interval gap under node " + std::to_string(v);
                return r;
            }
            expect = ix_.st.nodes[u].sa_hi + 1;
        }
        if (expect != nd.sa_hi + 1) {
            r.passed = false;
            r.detail = "interval overflow under node " + std::to_string(v);
            return r;
        }
    }
    return r;
}

CheckResult Verifier::size_bounds() {
    CheckResult r{"suffix tree within 2n̂-3 nodes / 2n̂-4 edges", true, ""};
    const std::size_t n_aug = ix_.trie.node_count();
    if (n_aug >= 3) {
        if (ix_.st.node_count() > 2 * n_aug - 3 || ix_.st.edge_count() > 2 * n_aug - 4) {
            r.passed = false;
            r.detail = "nodes=" + std::to_string(ix_.st.node_count()) +
                       " edges=" + std::to_string(ix_.st.edge_count()) +
                       " n_aug=" + std::to_string(n_aug);
        }
    }
    for (NodeId v = 1; v < ix_.st.node_count() && r.passed; ++v)
        if (!ix_.st.is_leaf(v) && ix_.st.nodes[v].children.size() < 2) {
            r.passed = false;
            r.detail = "unary internal node " + std::to_string(v);
        }
    return r;
}

CheckResult Verifier::hard_links() {
    CheckResult r{"hard W-link table matches oracle", true, ""};
    if (!iso_ok_) {
        r.passed = false;
        r.detail = "skipped: no isomorphism";
        return r;
    }
    WlinkOracle wo(stree_b_);
    if (ix_.hard.entry_count() != ix_.st.node_count() - 1) {
        r.passed = false;
        r.detail = "entry count " + std::to_string(ix_.hard.entry_count());
        return r;
    }
    const Symbol max_sym = ix_.trie.base.sigma;
    for (NodeId v = 0; v < ix_.st.node_count(); ++v)
        for (Symbol a = 0; a <= max_sym; ++a) {
            auto mine = ix_.hard.lookup(v, a);
            auto truth = wo.query(static_cast<std::uint32_t>(iso_[v]), a);
            bool want = truth && truth->hard;
            if (mine.has_value() != want ||
                (mine && iso_[*mine] != static_cast<std::int32_t>(truth->node))) {
                r.passed = false;
                r.detail = "hard link disagrees at (node " + std::to_string(v) +
                           ", symbol " + std::to_string(a) + ")";
                return r;
            }
        }
    return r;
}

CheckResult Verifier::wlink_sweep() {
    CheckResult r{"soft W-link query agrees with oracle on all (node, symbol)", true, ""};
    if (!iso_ok_) {
        r.passed = false;
        r.detail = "skipped: no isomorphism";
        return r;
    }
    WlinkOracle wo(stree_b_);
    const Symbol max_sym = ix_.trie.base.sigma;
    for (NodeId v = 0; v < ix_.st.node_count(); ++v)
        for (Symbol a = 0; a <= max_sym; ++a) {
            auto mine = soft_wlink_query(ix_.mm, ix_.st, ix_.hard, v, a);
            auto truth = wo.query(static_cast<std::uint32_t>(iso_[v]), a);
            bool bad = mine.has_value() != truth.has_value();
            if (!bad && mine)
                bad = iso_[mine->target] != static_cast<std::int32_t>(truth->node) ||
                      mine->hard != truth->hard;
            if (bad) {
                r.passed = false;
                r.detail = "W-link disagrees at (node " + std::to_string(v) +
                           ", symbol " + std::to_string(a) + ")";
                return r;
            }
        }
    return r;
}

CheckResult Verifier::dawg_transitions() {
    CheckResult r{"implicit DAWG transitions equal oracle DAWG", true, ""};
    if (!iso_ok_) {
        r.passed = false;
        r.detail = "skipped: no isomorphism";
        return r;
    }
    oracle::OracleAutomaton dawg = oracle::from_suffix_trie(trie_f_, oracle::Kind::kDawg);

    std::vector<std::int32_t> inv(stree_b_.node_count(), -1);
    for (NodeId v = 0; v < ix_.st.node_count(); ++v) inv[iso_[v]] = static_cast<std::int32_t>(v);
    std::map<Str, std::uint32_t> stree_by_string;
    for (std::uint32_t i = 0; i < stree_b_.node_count(); ++i)
        stree_by_string.emplace(stree_b_.nodes[i].longest, i);

    if (dawg.node_count() != ix_.st.node_count()) {
        r.passed = false;
        r.detail = "state count " + std::to_string(ix_.st.node_count()) +
                   " vs oracle " + std::to_string(dawg.node_count());
        return r;
    }
    // Class with longest X <-> suffix-tree node spelling reverse(X).
    std::vector<NodeId> state_of(dawg.node_count());
    for (std::uint32_t c = 0; c < dawg.node_count(); ++c) {
        auto it = stree_by_string.find(reversed(dawg.nodes[c].longest));
        if (it == stree_by_string.end() || inv[it->second] < 0) {
            r.passed = false;
            r.detail = "class longest " + str_to_string(dawg.nodes[c].longest) +
                       " has no suffix-tree twin";
            return r;
        }
        state_of[c] = static_cast<NodeId>(inv[it->second]);
    }

    ImplicitDawg view(ix_);
    const Symbol max_sym = ix_.trie.base.sigma;
    for (std::uint32_t c = 0; c < dawg.node_count(); ++c)
        for (Symbol a = 0; a <= max_sym; ++a) {
            auto truth = dawg.transition(c, a);
            auto mine = view.transition(state_of[c], a);
            bool bad = mine.has_value() != truth.has_value();
            if (!bad && mine)
                bad = mine->first != state_of[truth->first] ||
                      (mine->second == EdgeKind::kPrimary) != truth->second;
            if (bad) {
                r.passed = false;
                r.detail = "transition disagrees at (class " + std::to_string(c) +
                           ", symbol " + std::to_string(a) + ")";
                return r;
            }
        }
    // Suffix links of DAWG(T_f) are the reversed edges of STree(T_b).
    for (std::uint32_t c = 0; c < dawg.node_count(); ++c) {
        if (dawg.slink[c] < 0) continue;
        NodeId me = state_of[c];
        NodeId up = state_of[static_cast<std::uint32_t>(dawg.slink[c])];
        if (ix_.st.nodes[me].parent != up) {
            r.passed = false;
            r.detail = "DAWG slink of class " + std::to_string(c) +
                       " is not the suffix-tree parent";
            return r;
        }
    }
    return r;
}

CheckResult Verifier::search_differential() {
    CheckResult r{"search agrees with brute-force enumeration", true, ""};
    std::mt19937_64 rng(0x5eedu + ix_.trie.node_count());
    const Symbol sigma = std::max<Symbol>(ix_.trie.base.sigma, 1);

    auto check_pattern = [&](const Str& p) {
        OccurrenceList got = find(ix_, p);
        std::sort(got.begin(), got.end());
        auto want = brute_occurrences(ix_.trie, p);
        std::sort(want.begin(), want.end());
        if (got != want) {
            r.passed = false;
            r.detail = "find(" + str_to_string(p) + ") mismatch";
        }
    };

    check_pattern({});
    if (ix_.trie.base.sigma == 0) return r;  // single-node trie: only ε applies
    for (std::uint32_t i = 0; i < trie_f_.nodes.size() && r.passed; ++i) {
        Str s = trie_f_.string_of(i);
        if (std::find(s.begin(), s.end(), kTerminator) != s.end()) continue;
        check_pattern(s);
        if (!r.passed) return r;
        s.push_back(1 + rng() % sigma);  // perturbed, often a miss
        check_pattern(s);
        if (!r.passed) return r;
    }

    // Random bidirectional scripts; a step must succeed iff the extended
    // pattern is a substring, and occurrences must match after every step.
    for (int script = 0; script < 64 && r.passed; ++script) {
        Cursor cur = cursor_new(ix_);
        Str pattern;
        for (int step = 0; step < 14; ++step) {
            bool left = rng() % 2 == 0;
            Symbol a = 1 + rng() % sigma;
            Str next = pattern;
            if (left) next.insert(next.begin(), a);
            else next.push_back(a);
            auto moved = left ? extend_left(ix_, cur, a) : extend_right(ix_, cur, a);
            bool expect = trie_f_.is_substring(next);
            if (moved.has_value() != expect) {
                r.passed = false;
                r.detail = std::string(left ? "extend_left" : "extend_right") +
                           " wrong verdict on " + str_to_string(next);
                break;
            }
            if (!moved) continue;
            cur = *moved;
            pattern = std::move(next);
            OccurrenceList got = occurrences(ix_, cur);
            std::sort(got.begin(), got.end());
            auto want = brute_occurrences(ix_.trie, pattern);
            std::sort(want.begin(), want.end());
            if (got != want || occurrence_count(ix_, cur) != want.size()) {
                r.passed = false;
                r.detail = "occurrences mismatch for " + str_to_string(pattern);
                break;
            }
        }
    }
    return r;
}

CheckResult Verifier::facts_suite() {
    CheckResult r{"reversal, maximality and W-link monotonicity laws", true, ""};

    // The substring sets of the two orientations are mirror images.
    std::set<Str> fwd, bwd_rev;
    for (std::uint32_t i = 0; i < trie_f_.nodes.size(); ++i) fwd.insert(trie_f_.string_of(i));
    for (std::uint32_t i = 0; i < trie_b_.nodes.size(); ++i)
        bwd_rev.insert(reversed(trie_b_.string_of(i)));
    if (fwd != bwd_rev) {
        r.passed = false;
        r.detail = "substring sets are not mirror images";
        return r;
    }

    // Maximality swaps sides under reversal.
    for (std::uint32_t i = 0; i < trie_f_.nodes.size(); ++i) {
        std::int32_t j = trie_b_.locate(reversed(trie_f_.string_of(i)));
        if (j < 0) {
            r.passed = false;
            r.detail = "reversed substring missing";
            return r;
        }
        const auto& x = trie_f_.nodes[i];
        const auto& y = trie_b_.nodes[static_cast<std::uint32_t>(j)];
        if (x.right_maximal != y.left_maximal || x.left_maximal != y.right_maximal ||
            (x.right_maximal && x.left_maximal) != (y.right_maximal && y.left_maximal)) {
            r.passed = false;
            r.detail = "maximality does not mirror for " + str_to_string(trie_f_.string_of(i));
            return r;
        }
    }

    // W-link monotonicity laws on the oracle suffix tree.
    WlinkOracle wo(stree_b_);
    OracleTreeTopo topo(stree_b_);
    Symbol max_sym = ix_.trie.base.sigma;

    std::map<Symbol, std::vector<std::uint32_t>> holders;  // hard holders, preorder
    for (std::uint32_t v = 0; v < stree_b_.node_count(); ++v)
        for (Symbol a = 0; a <= max_sym; ++a) {
            auto w = wo.query(v, a);
            if (!w) continue;
            if (w->hard) holders[a].push_back(v);
            // (a): a link at v forces one at the parent, hence by induction
            // at every ancestor.
            if (topo.parent[v] >= 0 &&
                !wo.query(static_cast<std::uint32_t>(topo.parent[v]), a)) {
                r.passed = false;
                r.detail = "ancestor closure fails at node " + std::to_string(v) +
                           " symbol " + std::to_string(a);
                return r;
            }
        }

    for (auto& [a, hs] : holders) {
        std::sort(hs.begin(), hs.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return topo.pre[x] < topo.pre[y]; });
        // (b): closed under LCA; consecutive preorder pairs suffice.
        for (std::size_t i = 1; i < hs.size(); ++i) {
            std::uint32_t z = topo.lca(hs[i - 1], hs[i]);
            auto w = wo.query(z, a);
            if (!w || !w->hard) {
                r.passed = false;
                r.detail = "hard holders not LCA-closed for symbol " + std::to_string(a);
                return r;
            }
        }
    }

    for (std::uint32_t v = 0; v < stree_b_.node_count(); ++v)
        for (Symbol a = 0; a <= max_sym; ++a) {
            auto w = wo.query(v, a);
            if (!w || w->hard) continue;
            // Hard holders strictly below v form a contiguous preorder range.
            const auto& hs = holders[a];
            auto lo = std::upper_bound(hs.begin(), hs.end(), topo.pre[v],
                                       [&](std::uint32_t p, std::uint32_t h) {
                                           return p < topo.pre[h];
                                       });
            auto hi = std::lower_bound(lo, hs.end(), topo.post[v],
                                       [&](std::uint32_t h, std::uint32_t p) {
                                           return topo.pre[h] < p;
                                       });
            if (lo == hi) {
                r.passed = false;
                r.detail = "soft link without a hard descendant";
                return r;
            }
            // (d): the preorder-first holder is the unique highest one.
            std::uint32_t top = *lo;
            if (!topo.is_ancestor(top, *(hi - 1))) {
                r.passed = false;
                r.detail = "topmost hard holder not unique";
                return r;
            }
            // (e): v's target equals the topmost holder's hard target; ranging
            // over all soft (v, a) this covers every node of every such path.
            if (w->node != wo.query(top, a)->node) {
                r.passed = false;
                r.detail = "path target equality fails for symbol " + std::to_string(a);
                return r;
            }
        }
    return r;
}

CheckResult Verifier::micro_macro_invariants() {
    CheckResult r{"micro-macro decomposition invariants", true, ""};
    const auto& mm = ix_.mm;
    const std::size_t n = ix_.st.node_count();

    std::size_t covered = 0;
    for (const auto& mt : mm.mts) covered += mt.nodes_in_preorder.size();
    if (covered != n) {
        r.passed = false;
        r.detail = "micro trees do not partition the nodes";
        return r;
    }
    // Connectivity: a non-root member's parent lives in the same micro tree.
    for (NodeId v = 1; v < n; ++v)
        if (v != mm.micro_root[v] &&
            mm.micro_root[ix_.st.nodes[v].parent] != mm.micro_root[v]) {
            r.passed = false;
            r.detail = "micro tree disconnected at node " + std::to_string(v);
            return r;
        }
    const std::size_t bound = (n + mm.sigma_used - 1) / mm.sigma_used + 1;
    if (mm.micro_count() > bound) {
        r.passed = false;
        r.detail = "micro tree count " + std::to_string(mm.micro_count()) +
                   " exceeds ceil(n/sigma)+1 = " + std::to_string(bound);
        return r;
    }
    // P_a arrays: strictly increasing, exactly the hard holders of the tree.
    for (std::uint32_t ri = 0; ri < mm.roots.size(); ++ri) {
        const auto& mt = mm.mts[ri];
        std::map<Symbol, std::vector<std::uint32_t>> want;
        for (std::uint32_t rank = 0; rank < mt.nodes_in_preorder.size(); ++rank)
            for (const auto& [a, u] : ix_.hard.out[mt.nodes_in_preorder[rank]])
                want[a].push_back(rank);
        std::size_t seen = 0;
        for (const auto& pa : mt.pas) {
            ++seen;
            auto it = want.find(pa.sym);
            if (it == want.end() || it->second != pa.ranks ||
                !std::is_sorted(pa.ranks.begin(), pa.ranks.end()) ||
                std::adjacent_find(pa.ranks.begin(), pa.ranks.end()) != pa.ranks.end()) {
                r.passed = false;
                r.detail = "P_a array wrong in micro tree " + std::to_string(ri);
                return r;
            }
            std::uint32_t succ = MicroMacro::kNoRank;
            for (std::uint32_t rk : pa.ranks)
                if (rk > 0) { succ = rk; break; }
            if (pa.root_successor != succ) {
                r.passed = false;
                r.detail = "root successor wrong in micro tree " + std::to_string(ri);
                return r;
            }
        }
        if (seen != want.size()) {
            r.passed = false;
            r.detail = "P_a arrays missing symbols in micro tree " + std::to_string(ri);
            return r;
        }
        // In-tree holders are LCA-closed (they can fork below a rootless
        // micro tree, but every fork point is itself a holder), and the
        // first entry below the root is the topmost holder under it.
        for (const auto& pa : mt.pas) {
            for (std::size_t i = 1; i < pa.ranks.size(); ++i) {
                NodeId x = mt.nodes_in_preorder[pa.ranks[i - 1]];
                NodeId y = mt.nodes_in_preorder[pa.ranks[i]];
                NodeId z = ix_.st.topo.is_ancestor(x, y) ? x : ix_.st.lca.lca(x, y);
                if (!ix_.hard.lookup(z, pa.sym) ||
                    mm.micro_root[z] != mm.roots[ri]) {
                    r.passed = false;
                    r.detail = "hard holders not LCA-closed in micro tree " +
                               std::to_string(ri);
                    return r;
                }
            }
            if (pa.root_successor != MicroMacro::kNoRank && pa.ranks[0] != 0) {
                NodeId top = mt.nodes_in_preorder[pa.root_successor];
                for (std::uint32_t rk : pa.ranks)
                    if (rk > 0 && !ix_.st.topo.is_ancestor(top, mt.nodes_in_preorder[rk])) {
                        r.passed = false;
                        r.detail = "root successor is not the topmost holder in "
                                   "micro tree " + std::to_string(ri);
                        return r;
                    }
            }
        }
    }
    // Linear space: stored entries bounded by 4 per suffix-tree node.
    if (mm.stored_entries() > 4 * n) {
        r.passed = false;
        r.detail = "stored entries " + std::to_string(mm.stored_entries()) + " exceed 4n";
    }
    return r;
}

CheckResult Verifier::duality_counts() {
    CheckResult r{"suffix-tree/DAWG and CDAWG dualities", true, ""};
    auto dawg_f = oracle::from_suffix_trie(trie_f_, oracle::Kind::kDawg);
    auto cdawg_f = oracle::from_suffix_trie(trie_f_, oracle::Kind::kCdawg);
    auto cdawg_b = oracle::from_suffix_trie(trie_b_, oracle::Kind::kCdawg);
    const std::size_t n_aug = ix_.trie.node_count();

    if (dawg_f.node_count() != stree_b_.node_count()) {
        r.passed = false;
        r.detail = "NumNode(DAWG(T_f)) != NumNode(STree(T_b))";
        return r;
    }
    if (n_aug >= 3 && dawg_f.node_count() > 2 * n_aug - 3) {
        r.passed = false;
        r.detail = "DAWG(T_f) node bound violated";
        return r;
    }
    if (cdawg_f.node_count() != cdawg_b.node_count()) {
        r.passed = false;
        r.detail = "CDAWG node counts differ between orientations";
        return r;
    }
    // Every DAWG class member is a suffix of the class longest.
    auto dawg_members_ok = [&]() {
        std::map<std::vector<NodeId>, Str> longest_by_ends;
        for (const auto& nd : dawg_f.nodes) longest_by_ends[nd.ends] = nd.longest;
        for (std::uint32_t i = 0; i < trie_f_.nodes.size(); ++i) {
            Str s = trie_f_.string_of(i);
            const Str& l = longest_by_ends[trie_f_.nodes[i].ends];
            if (s.size() > l.size() ||
                !std::equal(s.rbegin(), s.rend(), l.rbegin())) return false;
        }
        return true;
    };
    if (!dawg_members_ok()) {
        r.passed = false;
        r.detail = "a DAWG class member is not a suffix of its longest";
    }
    return r;
}

std::vector<CheckResult> Verifier::run_all() {
    std::vector<CheckResult> out;
    out.push_back(structure_matches_oracle());
    out.push_back(suffix_links());
    out.push_back(suffix_array());
    out.push_back(size_bounds());
    out.push_back(hard_links());
    out.push_back(wlink_sweep());
    out.push_back(dawg_transitions());
    out.push_back(search_differential());
    out.push_back(facts_suite());
    out.push_back(micro_macro_invariants());
    out.push_back(duality_counts());
    return out;
}

std::vector<CheckResult> verify_trie(ForwardTrie base, bool inject_fault,
                                     std::size_t desk_limit) {
    Verifier v(std::move(base), desk_limit);
    if (inject_fault) v.inject_macro_fault();
    std::vector<CheckResult> failures;
    for (auto& check : v.run_all())
        if (!check.passed) failures.push_back(std::move(check));
    return failures;
}

}  // namespace trix::checks
