#include "trix/suffix_tree.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace trix {

LcaIndex LcaIndex::build(const std::vector<NodeId>& parent, NodeId root) {
    const std::size_t n = parent.size();
    std::vector<std::vector<NodeId>> kids(n);
    for (NodeId v = 0; v < n; ++v)
        if (v != root) kids[parent[v]].push_back(v);

    LcaIndex x;
    x.first_.assign(n, 0);
    x.euler_node_.reserve(2 * n);
    x.euler_depth_.reserve(2 * n);

    std::vector<std::tuple<NodeId, std::size_t, std::uint32_t>> stack;
    stack.emplace_back(root, 0, 0);
    x.first_[root] = 0;
    x.euler_node_.push_back(root);
    x.euler_depth_.push_back(0);
    while (!stack.empty()) {
        auto& [v, i, d] = stack.back();
        if (i < kids[v].size()) {
            NodeId c = kids[v][i++];
            x.first_[c] = static_cast<std::uint32_t>(x.euler_node_.size());
            x.euler_node_.push_back(c);
            x.euler_depth_.push_back(d + 1);
            stack.emplace_back(c, 0, d + 1);
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                x.euler_node_.push_back(std::get<0>(stack.back()));
                x.euler_depth_.push_back(std::get<2>(stack.back()));
            }
        }
    }

    const std::size_t m = x.euler_node_.size();
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) <= m) ++levels;
    x.table_.assign(levels, std::vector<std::uint32_t>(m));
    for (std::uint32_t i = 0; i < m; ++i) x.table_[0][i] = i;
    for (std::size_t k = 1; k < levels; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        for (std::size_t i = 0; i + (std::size_t{1} << k) <= m; ++i) {
            std::uint32_t a = x.table_[k - 1][i], b = x.table_[k - 1][i + half];
            x.table_[k][i] = x.euler_depth_[a] <= x.euler_depth_[b] ? a : b;
        }
    }
    return x;
}

NodeId LcaIndex::lca(NodeId u, NodeId v) const {
    std::uint32_t lo = first_[u], hi = first_[v];
    if (lo > hi) std::swap(lo, hi);
    const std::size_t len = hi - lo + 1;
    std::size_t k = 0;
    while ((std::size_t{2} << k) <= len) ++k;
    std::uint32_t a = table_[k][lo], b = table_[k][hi + 1 - (std::size_t{1} << k)];
    return euler_node_[euler_depth_[a] <= euler_depth_[b] ? a : b];
}

std::optional<NodeId> SuffixTree::child_by_symbol(NodeId v, Symbol c,
                                                  QueryStats* stats) const {
    const auto& ch = nodes[v].children;
    std::size_t lo = 0, hi = ch.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (stats) ++stats->comparisons;
        if (ch[mid].first < c) lo = mid + 1;
        else hi = mid;
    }
    if (stats) ++stats->comparisons;
    if (lo < ch.size() && ch[lo].first == c) return ch[lo].second;
    return std::nullopt;
}

std::vector<NodeId> SuffixTree::subtree_leaves(NodeId v) const {
    if (v >= nodes.size()) throw std::out_of_range("SuffixTree: unknown node");
    return std::vector<NodeId>(sa.begin() + nodes[v].sa_lo, sa.begin() + nodes[v].sa_hi + 1);
}

Str SuffixTree::expand(const AugmentedTrie& t, NodeId v) const {
    Str s;
    s.resize(nodes[v].str_depth);
    NodeId cur = v;
    std::size_t pos = nodes[v].str_depth;
    while (cur != 0) {
        const Node& nd = nodes[cur];
        for (std::uint32_t i = nd.edge_len; i >= 1; --i) s[--pos] = edge_char(t, cur, i);
        cur = nd.parent;
    }
    return s;
}

std::string SuffixTree::dump() const {
    std::ostringstream out;
    for (NodeId v = 0; v < nodes.size(); ++v) {
        out << v << ' ' << static_cast<std::int64_t>(nodes[v].parent == kNoNode
                                                          ? -1
                                                          : static_cast<std::int64_t>(nodes[v].parent))
            << ' ' << nodes[v].str_depth;
        if (is_leaf(v)) out << " leaf:" << nodes[v].leaf_for;
        out << " children=(";
        bool first = true;
        for (const auto& [c, u] : nodes[v].children) {
            if (!first) out << ',';
            first = false;
            out << c << ':' << u;
        }
        out << ")\n";
    }
    return out.str();
}

SuffixTree build_suffix_tree(const AugmentedTrie& t) {
    SuffixTree st;
    st.nodes.emplace_back();  // root

    auto insert_child = [&](NodeId parent, Symbol c, NodeId child) {
        auto& ch = st.nodes[parent].children;
        auto it = std::lower_bound(ch.begin(), ch.end(), c,
                                   [](const auto& e, Symbol x) { return e.first < x; });
        ch.insert(it, {c, child});
    };
    auto replace_child = [&](NodeId parent, Symbol c, NodeId child) {
        auto& ch = st.nodes[parent].children;
        auto it = std::lower_bound(ch.begin(), ch.end(), c,
                                   [](const auto& e, Symbol x) { return e.first < x; });
        assert(it != ch.end() && it->first == c);
        it->second = child;
    };

    // Insert the n̂-1 backward suffixes in breadth-first trie order. Every
    // suffix ends with the terminator, so insertions always end at a fresh
    // leaf. Characters are read by walking parent chains, O(1) amortized.
    std::vector<NodeId> order;
    order.reserve(t.node_count() - 1);
    {
        std::vector<NodeId> queue{t.bot};
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            if (u != t.bot) order.push_back(u);
            if (u == t.bot) queue.push_back(t.orig_root());
            else
                for (const auto& [a, c] : t.base.children[u]) queue.push_back(c);
        }
    }

    for (NodeId w : order) {
        const std::uint32_t len = t.depth(w);
        NodeId cur = 0;
        std::uint32_t k = 0;
        NodeId p = w;  // anc(w, k): S[k+1] = label_to_parent(p)

        while (true) {
            assert(k < len);
            const Symbol c = t.label_to_parent(p);
            auto found = st.child_by_symbol(cur, c);
            if (!found) {
                NodeId leaf = static_cast<NodeId>(st.nodes.size());
                st.nodes.push_back({cur, len, 0, p, len - k, c, w, {}, 0, 0, kNoNode});
                insert_child(cur, c, leaf);
                break;
            }
            NodeId child = *found;
            const std::uint32_t elen = st.nodes[child].edge_len;
            std::uint32_t matched = 1;
            NodeId q = t.parent(st.nodes[child].edge_node);
            p = t.parent(p);
            while (matched < elen && k + matched < len &&
                   t.label_to_parent(q) == t.label_to_parent(p)) {
                ++matched;
                q = t.parent(q);
                p = t.parent(p);
            }
            if (matched == elen) {
                cur = child;
                k += elen;
                continue;
            }
            // Split the edge at `matched` characters and hang a new leaf.
            assert(k + matched < len);  // no suffix is a prefix of another
            NodeId mid = static_cast<NodeId>(st.nodes.size());
            st.nodes.push_back({cur, k + matched, 0, st.nodes[child].edge_node, matched,
                                c, kNoNode, {}, 0, 0, kNoNode});
            st.nodes[child].parent = mid;
            st.nodes[child].edge_node = q;
            st.nodes[child].edge_len = elen - matched;
            st.nodes[child].first_symbol = t.label_to_parent(q);
            replace_child(cur, c, mid);
            insert_child(mid, st.nodes[child].first_symbol, child);

            NodeId leaf = static_cast<NodeId>(st.nodes.size());
            st.nodes.push_back({mid, len, 0, p, len - (k + matched),
                                t.label_to_parent(p), w, {}, 0, 0, kNoNode});
            insert_child(mid, t.label_to_parent(p), leaf);
            break;
        }
    }

    // Symbol-ordered DFS: SA, intervals, node depths.
    st.sa.reserve(t.node_count() - 1);
    st.sa_inv.assign(t.node_count(), 0);
    st.leaf_of.assign(t.node_count(), kNoNode);
    std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == 0) {
            st.nodes[v].sa_lo = static_cast<std::uint32_t>(st.sa.size());
            if (st.is_leaf(v)) {
                NodeId w = st.nodes[v].leaf_for;
                st.sa_inv[w] = static_cast<std::uint32_t>(st.sa.size());
                st.leaf_of[w] = v;
                st.sa.push_back(w);
            }
        }
        if (i < st.nodes[v].children.size()) {
            NodeId c = st.nodes[v].children[i++].second;
            st.nodes[c].node_depth = st.nodes[v].node_depth + 1;
            stack.emplace_back(c, 0);
        } else {
            st.nodes[v].sa_hi = static_cast<std::uint32_t>(st.sa.size()) - 1;
            stack.pop_back();
        }
    }
    assert(st.sa.size() == t.node_count() - 1);

    std::vector<NodeId> parent(st.nodes.size());
    for (NodeId v = 0; v < st.nodes.size(); ++v)
        parent[v] = v == 0 ? kNoNode : st.nodes[v].parent;
    st.topo = LevelAncestor::build(parent, 0);
    return st;
}

void compute_suffix_links(SuffixTree& st, const AugmentedTrie& t) {
    std::vector<NodeId> parent(st.nodes.size());
    for (NodeId v = 0; v < st.nodes.size(); ++v)
        parent[v] = v == 0 ? kNoNode : st.nodes[v].parent;
    st.lca = LcaIndex::build(parent, 0);

    // Leaves first: stripping the first character of str_b(v, ⊥) leaves the
    // suffix of v's parent, so leaf links mirror trie edges.
    for (NodeId w = 0; w < t.node_count(); ++w) {
        if (w == t.bot) continue;
        NodeId up = t.parent(w);
        st.nodes[st.leaf_of[w]].slink = (up == t.bot) ? 0 : st.leaf_of[up];
    }
    for (NodeId v = 1; v < st.nodes.size(); ++v) {
        if (st.is_leaf(v)) continue;
        NodeId a = st.nodes[st.leaf_of[st.sa[st.nodes[v].sa_lo]]].slink;
        NodeId b = st.nodes[st.leaf_of[st.sa[st.nodes[v].sa_hi]]].slink;
        st.nodes[v].slink = st.lca.lca(a, b);
    }
    st.has_slinks = true;
}

std::optional<NodeId> HardWLinkTable::lookup(NodeId v, Symbol a, QueryStats* stats) const {
    const auto& row = out[v];
    std::size_t lo = 0, hi = row.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (stats) ++stats->comparisons;
        if (row[mid].first < a) lo = mid + 1;
        else hi = mid;
    }
    if (stats) ++stats->comparisons;
    if (lo < row.size() && row[lo].first == a) return row[lo].second;
    return std::nullopt;
}

std::size_t HardWLinkTable::entry_count() const {
    std::size_t n = 0;
    for (const auto& row : out) n += row.size();
    return n;
}

HardWLinkTable derive_hard_wlinks(const SuffixTree& st, const AugmentedTrie& t) {
    if (!st.has_slinks)
        throw std::logic_error("derive_hard_wlinks: suffix links not computed");
    HardWLinkTable table;
    table.out.assign(st.node_count(), {});
    for (NodeId u = 1; u < st.node_count(); ++u) {
        NodeId v = st.nodes[u].slink;
        Symbol a = t.label_to_parent(st.sa[st.nodes[u].sa_lo]);  // str(u)[1]
        table.out[v].emplace_back(a, u);
    }
    for (auto& row : table.out) {
        std::sort(row.begin(), row.end());
        for (std::size_t i = 1; i < row.size(); ++i)
            assert(row[i].first != row[i - 1].first);
    }
    return table;
}

}  // namespace trix
