#include "trix/trie.hpp"

#include <algorithm>
#include <sstream>

namespace trix {

LevelAncestor LevelAncestor::build(const std::vector<NodeId>& parent, NodeId root) {
    const std::size_t n = parent.size();
    LevelAncestor la;
    la.depth_.assign(n, 0);
    la.pre_.assign(n, 0);
    la.post_.assign(n, 0);

    std::vector<std::vector<NodeId>> kids(n);
    for (NodeId v = 0; v < n; ++v) {
        if (v == root) continue;
        if (parent[v] >= n) throw std::invalid_argument("LevelAncestor: bad parent id");
        kids[parent[v]].push_back(v);
    }

    // Iterative DFS; children visited in id order so the preorder is canonical.
    std::uint32_t clock = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(root, 0);
    la.pre_[root] = clock++;
    std::size_t visited = 1;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < kids[v].size()) {
            NodeId c = kids[v][i++];
            la.depth_[c] = la.depth_[v] + 1;
            la.pre_[c] = clock++;
            ++visited;
            stack.emplace_back(c, 0);
        } else {
            la.post_[v] = clock;
            stack.pop_back();
        }
    }
    if (visited != n) throw std::invalid_argument("LevelAncestor: tree is disconnected");

    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < n) ++levels;
    la.up_.assign(levels, std::vector<NodeId>(n, kNoNode));
    for (NodeId v = 0; v < n; ++v) la.up_[0][v] = (v == root) ? kNoNode : parent[v];
    for (std::size_t k = 1; k < levels; ++k)
        for (NodeId v = 0; v < n; ++v) {
            NodeId h = la.up_[k - 1][v];
            la.up_[k][v] = (h == kNoNode) ? kNoNode : la.up_[k - 1][h];
        }
    return la;
}

NodeId LevelAncestor::anc(NodeId u, std::uint32_t j) const {
    check(u);
    if (j > depth_[u]) return kNoNode;
    for (std::size_t k = 0; j != 0; ++k, j >>= 1)
        if (j & 1u) u = up_[k][u];
    return u;
}

bool LevelAncestor::is_ancestor(NodeId u, NodeId v) const {
    check(u);
    check(v);
    return pre_[u] <= pre_[v] && pre_[v] < post_[u];
}

NodeId ForwardTrie::child(NodeId u, Symbol a) const {
    const auto& ch = children[u];
    auto it = std::lower_bound(ch.begin(), ch.end(), a,
                               [](const auto& e, Symbol s) { return e.first < s; });
    if (it != ch.end() && it->first == a) return it->second;
    return kNoNode;
}

std::vector<NodeId> ForwardTrie::leaves() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v)
        if (children[v].empty()) out.push_back(v);
    return out;
}

NodeId ForwardTrie::add_child(NodeId u, Symbol a) {
    NodeId existing = child(u, a);
    if (existing != kNoNode) return existing;
    NodeId v = static_cast<NodeId>(node_count());
    parent.push_back(u);
    parent_label.push_back(a);
    children.emplace_back();
    auto& ch = children[u];
    auto it = std::lower_bound(ch.begin(), ch.end(), a,
                               [](const auto& e, Symbol s) { return e.first < s; });
    ch.insert(it, {a, v});
    sigma = std::max(sigma, a);
    return v;
}

ForwardTrie parse_trie(const std::string& text) {
    std::istringstream in(text);
    std::string tag, ver;
    std::size_t n = 0;
    Symbol sigma = 0;
    if (!(in >> tag >> ver >> n >> sigma) || tag != "TRIE" || ver != "v1")
        throw ParseError("trie file: bad header, expected 'TRIE v1 <n> <sigma>'");
    if (n == 0) throw ParseError("trie file: node count must be positive");

    ForwardTrie t;
    t.parent.assign(n, kNoNode);
    t.parent_label.assign(n, 0);
    t.children.assign(n, {});
    t.sigma = sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        long long p = -1, c = -1, s = -1;
        if (!(in >> p >> c >> s)) throw ParseError("trie file: malformed edge line");
        if (p < 0 || static_cast<std::size_t>(p) >= n || c <= 0 ||
            static_cast<std::size_t>(c) >= n)
            throw ParseError("trie file: node id out of range");
        if (s < 1 || static_cast<Symbol>(s) > sigma)
            throw ParseError("trie file: symbol outside [1..sigma]");
        NodeId pc = static_cast<NodeId>(p), cc = static_cast<NodeId>(c);
        if (t.parent[cc] != kNoNode) throw ParseError("trie file: node has two parents");
        if (t.child(pc, static_cast<Symbol>(s)) != kNoNode)
            throw ParseError("trie file: duplicate sibling symbol");
        t.parent[cc] = pc;
        t.parent_label[cc] = static_cast<Symbol>(s);
        auto& ch = t.children[pc];
        auto it = std::lower_bound(ch.begin(), ch.end(), static_cast<Symbol>(s),
                                   [](const auto& e, Symbol x) { return e.first < x; });
        ch.insert(it, {static_cast<Symbol>(s), cc});
    }
    for (NodeId v = 1; v < n; ++v)
        if (t.parent[v] == kNoNode) throw ParseError("trie file: node unreachable from root");
    // Edge count n-1 with every non-root node having one parent rules out
    // cycles only if the root is reachable from everywhere; walk to confirm.
    for (NodeId v = 0; v < n; ++v) {
        NodeId u = v;
        std::size_t steps = 0;
        while (u != 0) {
            u = t.parent[u];
            if (++steps > n) throw ParseError("trie file: cycle detected");
        }
    }
    return t;
}

std::string serialize_trie(const ForwardTrie& t) {
    std::ostringstream out;
    out << "TRIE v1 " << t.node_count() << ' ' << t.sigma << '\n';
    for (NodeId u = 0; u < t.node_count(); ++u)
        for (const auto& [s, c] : t.children[u]) out << u << ' ' << c << ' ' << s << '\n';
    return out.str();
}

ForwardTrie trie_from_strings(const std::vector<Str>& lines) {
    ForwardTrie t;
    t.parent.assign(1, kNoNode);
    t.parent_label.assign(1, 0);
    t.children.assign(1, {});
    for (const Str& w : lines) {
        NodeId cur = 0;
        for (Symbol a : w) {
            if (a == 0) throw std::invalid_argument("trie_from_strings: symbol must be >= 1");
            cur = t.add_child(cur, a);
        }
    }
    return t;
}

AugmentedTrie augment(ForwardTrie t) {
    AugmentedTrie at;
    at.bot = static_cast<NodeId>(t.node_count());
    std::vector<NodeId> parent(t.node_count() + 1);
    for (NodeId v = 0; v < t.node_count(); ++v) parent[v] = t.parent[v];
    parent[0] = at.bot;
    parent[at.bot] = kNoNode;
    at.base = std::move(t);
    at.topo = LevelAncestor::build(parent, at.bot);
    return at;
}

NodeId AugmentedTrie::parent(NodeId v) const {
    if (v == bot) return kNoNode;
    if (v == 0) return bot;
    if (v >= node_count()) throw std::out_of_range("AugmentedTrie: unknown node id");
    return base.parent[v];
}

Symbol AugmentedTrie::label_to_parent(NodeId v) const {
    if (v == bot) throw std::out_of_range("AugmentedTrie: bot has no parent edge");
    if (v == 0) return kTerminator;
    if (v >= node_count()) throw std::out_of_range("AugmentedTrie: unknown node id");
    return base.parent_label[v];
}

Str AugmentedTrie::suffix_of(NodeId v) const {
    Str s;
    s.reserve(depth(v));
    for (NodeId u = v; u != bot; u = parent(u)) s.push_back(label_to_parent(u));
    return s;
}

std::size_t AugmentedTrie::distinct_symbols() const {
    std::vector<bool> seen(base.sigma + 1, false);
    std::size_t count = 1;  // terminator
    for (NodeId v = 1; v < base.node_count(); ++v)
        if (!seen[base.parent_label[v]]) {
            seen[base.parent_label[v]] = true;
            ++count;
        }
    return count;
}

Str path_string(const AugmentedTrie& t, NodeId from, NodeId to, Orientation o) {
    if (o == Orientation::kForward) {
        if (!t.is_ancestor(from, to))
            throw std::invalid_argument("path_string: node is not an ancestor");
        Str s;
        for (NodeId u = to; u != from; u = t.parent(u)) s.push_back(t.label_to_parent(u));
        std::reverse(s.begin(), s.end());
        return s;
    }
    if (!t.is_ancestor(to, from))
        throw std::invalid_argument("path_string: node is not an ancestor");
    Str s;
    for (NodeId u = from; u != to; u = t.parent(u)) s.push_back(t.label_to_parent(u));
    return s;
}

std::vector<BackwardView::Edge> BackwardView::edges() const {
    std::vector<Edge> out;
    out.reserve(trie->node_count() - 1);
    for (NodeId v = 0; v < trie->node_count(); ++v)
        if (v != trie->bot) out.push_back({v, trie->parent(v), trie->label_to_parent(v)});
    return out;
}

Str reversed(const Str& s) { return Str(s.rbegin(), s.rend()); }

}  // namespace trix
