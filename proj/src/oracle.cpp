#include "trix/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace trix::oracle {

TrieView TrieView::of(const AugmentedTrie& t) {
    TrieView v;
    const std::size_t n = t.node_count();
    v.parent.assign(n, kNoNode);
    v.label.assign(n, 0);
    v.kids.assign(n, {});
    v.root = t.bot;
    for (NodeId u = 0; u + 1 < n; ++u) {
        v.parent[u] = t.parent(u);
        v.label[u] = t.label_to_parent(u);
    }
    for (NodeId u = 0; u < n; ++u) v.kids[u] = (u == t.bot)
            ? std::vector<std::pair<Symbol, NodeId>>{{kTerminator, 0}}
            : t.base.children[u];
    v.topo = LevelAncestor::build(v.parent, v.root);
    return v;
}

TrieView TrieView::of(const ForwardTrie& t) {
    TrieView v;
    v.parent = t.parent;
    v.label = t.parent_label;
    v.kids = t.children;
    v.root = 0;
    v.topo = LevelAncestor::build(v.parent, v.root);
    return v;
}

Str SuffixTrie::string_of(std::uint32_t i) const {
    Str s;
    for (std::int32_t j = static_cast<std::int32_t>(i); j > 0; j = nodes[j].parent)
        s.push_back(nodes[j].in_label);
    std::reverse(s.begin(), s.end());
    return s;
}

std::int32_t SuffixTrie::locate(const Str& s) const {
    std::uint32_t cur = 0;
    for (Symbol a : s) {
        const auto& kids = nodes[cur].kids;
        auto it = std::lower_bound(kids.begin(), kids.end(), a,
                                   [](const auto& e, Symbol x) { return e.first < x; });
        if (it == kids.end() || it->first != a) return -1;
        cur = it->second;
    }
    return static_cast<std::int32_t>(cur);
}

namespace {

std::vector<NodeId> derived_ends(const TrieView& view, const SuffixTrie::Node& node,
                                 Orientation o) {
    if (o == Orientation::kForward) return node.occ;
    std::vector<NodeId> ends;
    ends.reserve(node.occ.size());
    for (NodeId x : node.occ) ends.push_back(view.topo.anc(x, node.depth));
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    return ends;
}

void compute_flags(SuffixTrie& st) {
    const TrieView& view = st.view;
    const bool fwd = st.orientation == Orientation::kForward;
    std::vector<std::vector<std::uint32_t>> inv_slink(st.nodes.size());
    for (std::uint32_t i = 1; i < st.nodes.size(); ++i)
        inv_slink[st.nodes[i].slink].push_back(i);

    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        auto& node = st.nodes[i];
        node.ends = derived_ends(view, node, st.orientation);

        bool end_boundary = false;
        if (fwd) {
            for (NodeId v : node.ends)
                if (view.is_leaf(v)) { end_boundary = true; break; }
        } else {
            end_boundary = std::binary_search(node.ends.begin(), node.ends.end(),
                                              view.root);
        }
        node.right_maximal = node.kids.size() >= 2 || end_boundary;
        node.is_suffix = fwd ? end_boundary
                             : (node.depth > 0 && end_boundary);

        // Left side: distinct characters immediately preceding an occurrence,
        // or an occurrence starting at the boundary (root resp. a leaf).
        std::set<Symbol> preceders;
        bool begin_boundary = false;
        if (fwd) {
            for (NodeId v : node.occ) {
                NodeId u = view.topo.anc(v, node.depth);
                if (u == view.root) begin_boundary = true;
                else preceders.insert(view.label[u]);
            }
        } else {
            for (NodeId x : node.occ) {
                if (view.is_leaf(x)) begin_boundary = true;
                for (const auto& [a, c] : view.kids[x]) preceders.insert(a);
            }
        }
        node.left_maximal = preceders.size() >= 2 || begin_boundary;
        assert(preceders.size() == inv_slink[i].size());
    }

    // l-mxml: climb the unique left extension until left-maximal. The climb
    // follows inverse suffix links, which form a forest, so memoization
    // along each path settles every node once.
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) st.nodes[i].l_root = i;
    std::vector<bool> done(st.nodes.size(), false);
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        std::vector<std::uint32_t> path;
        std::uint32_t cur = i;
        while (!done[cur] && !st.nodes[cur].left_maximal) {
            assert(inv_slink[cur].size() == 1);
            path.push_back(cur);
            cur = inv_slink[cur][0];
        }
        std::uint32_t root = done[cur] ? st.nodes[cur].l_root : cur;
        done[cur] = true;
        for (std::uint32_t p : path) {
            st.nodes[p].l_root = root;
            done[p] = true;
        }
        st.nodes[cur].l_root = root;
    }
}

}  // namespace

SuffixTrie build_suffix_trie(TrieView view, Orientation o, std::size_t limit) {
    if (view.size() > limit)
        throw DeskScaleError("oracle: trie exceeds the desk-scale node limit");
    SuffixTrie st;
    st.orientation = o;
    st.view = std::move(view);
    const TrieView& v = st.view;

    st.nodes.emplace_back();
    auto& root = st.nodes[0];
    root.occ.resize(v.size());
    for (NodeId i = 0; i < v.size(); ++i) root.occ[i] = i;

    // Breadth-first closure; one node per distinct substring of the
    // orientation, so nodes come out sorted by depth.
    for (std::uint32_t cur = 0; cur < st.nodes.size(); ++cur) {
        std::map<Symbol, std::vector<NodeId>> buckets;
        if (o == Orientation::kForward) {
            for (NodeId end : st.nodes[cur].occ)
                for (const auto& [a, c] : v.kids[end]) buckets[a].push_back(c);
        } else {
            const std::uint32_t d = st.nodes[cur].depth;
            for (NodeId x : st.nodes[cur].occ) {
                NodeId u = v.topo.anc(x, d);
                if (u != v.root) buckets[v.label[u]].push_back(x);
            }
        }
        for (auto& [a, occ] : buckets) {
            std::sort(occ.begin(), occ.end());
            SuffixTrie::Node node;
            node.parent = static_cast<std::int32_t>(cur);
            node.in_label = a;
            node.depth = st.nodes[cur].depth + 1;
            node.occ = std::move(occ);
            if (cur == 0) {
                node.slink = 0;
            } else {
                // Strip the first character: the target exists one BFS level
                // up and is already built.
                const auto& kk = st.nodes[st.nodes[cur].slink].kids;
                auto it = std::lower_bound(kk.begin(), kk.end(), a,
                                           [](const auto& e, Symbol x) { return e.first < x; });
                assert(it != kk.end() && it->first == a);
                node.slink = it->second;
            }
            st.nodes[cur].kids.emplace_back(a, static_cast<std::uint32_t>(st.nodes.size()));
            st.nodes.push_back(std::move(node));
        }
    }
    compute_flags(st);
    return st;
}

std::size_t OracleAutomaton::leaf_count() const {
    std::size_t k = 0;
    for (const auto& n : nodes) k += n.out.empty();
    return k;
}

std::int32_t OracleAutomaton::find_node(const Str& s) const {
    for (std::uint32_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].longest == s) return static_cast<std::int32_t>(i);
    return -1;
}

std::optional<std::pair<std::uint32_t, bool>> OracleAutomaton::transition(
    std::uint32_t node, Symbol a) const {
    for (std::uint32_t e : nodes[node].out)
        if (edges[e].label.size() == 1 && edges[e].label[0] == a)
            return std::make_pair(edges[e].to, edges[e].primary);
    return std::nullopt;
}

namespace {

OracleAutomaton make_suffix_trie_automaton(const SuffixTrie& st) {
    OracleAutomaton a;
    a.kind = Kind::kSuffixTrie;
    a.orientation = st.orientation;
    a.nodes.resize(st.nodes.size());
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        a.nodes[i].longest = st.string_of(i);
        a.nodes[i].ends = st.nodes[i].ends;
        a.nodes[i].suffix_class = st.nodes[i].is_suffix;
        for (const auto& [sym, j] : st.nodes[i].kids) {
            a.nodes[i].out.push_back(static_cast<std::uint32_t>(a.edges.size()));
            a.edges.push_back({i, j, Str{sym}, false});
        }
    }
    return a;
}

OracleAutomaton make_suffix_tree_automaton(const SuffixTrie& st) {
    // Path compaction: explicit nodes are the root, branching nodes, and
    // extension-free nodes (the set's leaves).
    OracleAutomaton a;
    a.kind = Kind::kSuffixTree;
    a.orientation = st.orientation;
    std::vector<std::int32_t> id(st.nodes.size(), -1);
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        if (i != 0 && st.nodes[i].kids.size() == 1) continue;
        id[i] = static_cast<std::int32_t>(a.nodes.size());
        a.nodes.push_back({st.string_of(i), st.nodes[i].ends, st.nodes[i].is_suffix, {}});
    }
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        if (id[i] < 0 || i == 0) continue;
        Str label;
        std::int32_t up = static_cast<std::int32_t>(i);
        while (true) {
            label.push_back(st.nodes[up].in_label);
            up = st.nodes[up].parent;
            if (id[up] >= 0) break;
        }
        std::reverse(label.begin(), label.end());
        const auto from = static_cast<std::uint32_t>(id[up]);
        a.nodes[from].out.push_back(static_cast<std::uint32_t>(a.edges.size()));
        a.edges.push_back({from, static_cast<std::uint32_t>(id[i]), std::move(label), false});
    }
    for (auto& n : a.nodes)
        std::sort(n.out.begin(), n.out.end(), [&](std::uint32_t x, std::uint32_t y) {
            return a.edges[x].label[0] < a.edges[y].label[0];
        });
    return a;
}

OracleAutomaton make_dawg_automaton(const SuffixTrie& st) {
    OracleAutomaton a;
    a.kind = Kind::kDawg;
    a.orientation = st.orientation;

    // One class per l-mxml value; the class longest is the l-mxml string
    // itself and every member shares its end-occurrence set.
    std::vector<std::uint32_t> cls(st.nodes.size(), 0xFFFFFFFFu);
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        std::uint32_t root = st.nodes[i].l_root;
        if (cls[root] == 0xFFFFFFFFu) {
            cls[root] = static_cast<std::uint32_t>(a.nodes.size());
            a.nodes.push_back({st.string_of(root), st.nodes[root].ends, false, {}});
        }
        cls[i] = cls[root];
        a.nodes[cls[i]].suffix_class |= st.nodes[i].is_suffix;
        assert(st.nodes[i].ends == st.nodes[root].ends);
    }
    // On forward tries the l-mxml classes coincide with end-set classes.
    if (st.orientation == Orientation::kForward) {
        std::map<std::vector<NodeId>, std::uint32_t> by_ends;
        for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
            auto [it, fresh] = by_ends.try_emplace(st.nodes[i].ends, cls[i]);
            if (!fresh && it->second != cls[i])
                throw std::logic_error("oracle: forward class mismatch");
        }
        if (by_ends.size() != a.nodes.size())
            throw std::logic_error("oracle: forward class count mismatch");
    }
    a.source = cls[0];

    std::map<std::pair<std::uint32_t, Symbol>, std::uint32_t> seen;
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i)
        for (const auto& [sym, j] : st.nodes[i].kids) {
            auto key = std::make_pair(cls[i], sym);
            auto it = seen.find(key);
            if (it != seen.end()) {
                assert(a.edges[it->second].to == cls[j]);
                continue;
            }
            seen.emplace(key, static_cast<std::uint32_t>(a.edges.size()));
            a.nodes[cls[i]].out.push_back(static_cast<std::uint32_t>(a.edges.size()));
            a.edges.push_back({cls[i], cls[j], Str{sym}, false});
        }
    for (auto& e : a.edges)
        e.primary = a.nodes[e.from].longest.size() + 1 == a.nodes[e.to].longest.size();
    for (auto& n : a.nodes)
        std::sort(n.out.begin(), n.out.end(), [&](std::uint32_t x, std::uint32_t y) {
            return a.edges[x].label[0] < a.edges[y].label[0];
        });

    a.slink.assign(a.nodes.size(), -1);
    for (std::uint32_t c = 0; c < a.nodes.size(); ++c) {
        const Str& longest = a.nodes[c].longest;
        for (std::size_t k = 1; k <= longest.size(); ++k) {
            Str tail(longest.begin() + static_cast<std::ptrdiff_t>(k), longest.end());
            std::int32_t tn = st.locate(tail);
            assert(tn >= 0);
            if (cls[static_cast<std::uint32_t>(tn)] != c) {
                a.slink[c] = static_cast<std::int32_t>(cls[static_cast<std::uint32_t>(tn)]);
                break;
            }
        }
    }
    return a;
}

OracleAutomaton make_cdawg_automaton(const SuffixTrie& st) {
    OracleAutomaton dawg = make_dawg_automaton(st);
    OracleAutomaton a;
    a.kind = Kind::kCdawg;
    a.orientation = st.orientation;

    // A class survives iff its longest string is maximal; longests are
    // left-maximal by construction, so only right-maximality is tested.
    std::vector<std::int32_t> id(dawg.nodes.size(), -1);
    for (std::uint32_t c = 0; c < dawg.nodes.size(); ++c) {
        std::int32_t tn = st.locate(dawg.nodes[c].longest);
        assert(tn >= 0);
        if (!st.nodes[static_cast<std::uint32_t>(tn)].right_maximal) continue;
        id[c] = static_cast<std::int32_t>(a.nodes.size());
        a.nodes.push_back({dawg.nodes[c].longest, dawg.nodes[c].ends,
                           dawg.nodes[c].suffix_class, {}});
    }
    assert(id[dawg.source] >= 0);
    a.source = static_cast<std::uint32_t>(id[dawg.source]);

    for (std::uint32_t c = 0; c < dawg.nodes.size(); ++c) {
        if (id[c] < 0) continue;
        for (std::uint32_t e : dawg.nodes[c].out) {
            Str label = dawg.edges[e].label;
            std::uint32_t to = dawg.edges[e].to;
            while (id[to] < 0) {
                assert(dawg.nodes[to].out.size() == 1);
                const auto& next = dawg.edges[dawg.nodes[to].out[0]];
                label.push_back(next.label[0]);
                to = next.to;
            }
            const auto from = static_cast<std::uint32_t>(id[c]);
            a.nodes[from].out.push_back(static_cast<std::uint32_t>(a.edges.size()));
            a.edges.push_back({from, static_cast<std::uint32_t>(id[to]),
                               std::move(label), false});
        }
    }
    return a;
}

}  // namespace

OracleAutomaton from_suffix_trie(const SuffixTrie& st, Kind kind) {
    switch (kind) {
        case Kind::kSuffixTrie: return make_suffix_trie_automaton(st);
        case Kind::kSuffixTree: return make_suffix_tree_automaton(st);
        case Kind::kDawg: return make_dawg_automaton(st);
        case Kind::kCdawg: return make_cdawg_automaton(st);
    }
    throw std::logic_error("unreachable");
}

OracleAutomaton build_explicit(const AugmentedTrie& t, Kind kind, Orientation o,
                               std::size_t limit) {
    return from_suffix_trie(build_suffix_trie(TrieView::of(t), o, limit), kind);
}

OracleAutomaton build_explicit_raw(const ForwardTrie& t, Kind kind, Orientation o,
                                   std::size_t limit) {
    return from_suffix_trie(build_suffix_trie(TrieView::of(t), o, limit), kind);
}

namespace {

StringSet enumerate_view(TrieView view, Which which, Orientation o, std::size_t limit) {
    SuffixTrie st = build_suffix_trie(std::move(view), o, limit);
    StringSet out;
    for (std::uint32_t i = 0; i < st.nodes.size(); ++i) {
        if (which == Which::kSuffix && !st.nodes[i].is_suffix) continue;
        out.insert(st.string_of(i));
    }
    return out;
}

}  // namespace

StringSet enumerate(const AugmentedTrie& t, Which which, Orientation o,
                    std::size_t limit) {
    return enumerate_view(TrieView::of(t), which, o, limit);
}

StringSet enumerate_raw(const ForwardTrie& t, Which which, Orientation o,
                        std::size_t limit) {
    return enumerate_view(TrieView::of(t), which, o, limit);
}

MaximalExtensions maximal_extensions(const AugmentedTrie& t, const Str& x,
                                     Orientation o, std::size_t limit) {
    SuffixTrie st = build_suffix_trie(TrieView::of(t), o, limit);
    if (st.locate(x) < 0)
        throw std::invalid_argument("maximal_extensions: not a substring");

    auto extend_right = [&](Str s) {
        std::int32_t cur = st.locate(s);
        while (!st.nodes[static_cast<std::uint32_t>(cur)].right_maximal) {
            const auto& kids = st.nodes[static_cast<std::uint32_t>(cur)].kids;
            assert(kids.size() == 1);
            s.push_back(kids[0].first);
            cur = static_cast<std::int32_t>(kids[0].second);
        }
        return s;
    };
    Symbol max_sym = 0;
    for (NodeId v = 0; v < st.view.size(); ++v)
        if (v != st.view.root) max_sym = std::max(max_sym, st.view.label[v]);
    auto extend_left = [&](Str s) {
        while (true) {
            const auto& node = st.nodes[static_cast<std::uint32_t>(st.locate(s))];
            if (node.left_maximal) return s;
            // Not left-maximal means exactly one preceding character.
            bool found = false;
            for (Symbol a = 0; a <= max_sym && !found; ++a) {
                Str candidate{a};
                candidate.insert(candidate.end(), s.begin(), s.end());
                if (st.locate(candidate) >= 0) {
                    s = std::move(candidate);
                    found = true;
                }
            }
            assert(found);
        }
    };

    MaximalExtensions m;
    m.r_mxml = extend_right(x);
    m.l_mxml = extend_left(x);
    m.mxml = extend_right(m.l_mxml);
    return m;
}

std::optional<WlinkResult> wlink_oracle(const OracleAutomaton& stree_b,
                                        std::uint32_t v, Symbol a) {
    Str want{a};
    const Str& s = stree_b.nodes[v].longest;
    want.insert(want.end(), s.begin(), s.end());

    std::int32_t best = -1;
    for (std::uint32_t i = 0; i < stree_b.nodes.size(); ++i) {
        const Str& cand = stree_b.nodes[i].longest;
        if (cand.size() < want.size()) continue;
        if (!std::equal(want.begin(), want.end(), cand.begin())) continue;
        if (best < 0 || cand.size() < stree_b.nodes[best].longest.size())
            best = static_cast<std::int32_t>(i);
    }
    if (best < 0) return std::nullopt;
    return WlinkResult{static_cast<std::uint32_t>(best),
                       stree_b.nodes[best].longest.size() == want.size()};
}

SizeReport measure(const AugmentedTrie& t, std::size_t limit) {
    SizeReport r;
    r.n = t.base.node_count();
    r.n_aug = t.node_count();
    r.sigma = t.base.sigma;

    SuffixTrie fwd = build_suffix_trie(TrieView::of(t), Orientation::kForward, limit);
    SuffixTrie bwd = build_suffix_trie(TrieView::of(t), Orientation::kBackward, limit);

    auto fill = [](const SuffixTrie& st, std::size_t& tn, std::size_t& te,
                   std::size_t& dn, std::size_t& de, std::size_t& cn, std::size_t& ce,
                   std::size_t& sa) {
        OracleAutomaton tree = make_suffix_tree_automaton(st);
        OracleAutomaton dawg = make_dawg_automaton(st);
        OracleAutomaton cdawg = make_cdawg_automaton(st);
        tn = tree.node_count();
        te = tree.edge_count();
        dn = dawg.node_count();
        de = dawg.edge_count();
        cn = cdawg.node_count();
        ce = cdawg.edge_count();
        sa = tree.leaf_count();
    };
    fill(fwd, r.stree_f_nodes, r.stree_f_edges, r.dawg_f_nodes, r.dawg_f_edges,
         r.cdawg_f_nodes, r.cdawg_f_edges, r.sa_f_len);
    fill(bwd, r.stree_b_nodes, r.stree_b_edges, r.dawg_b_nodes, r.dawg_b_edges,
         r.cdawg_b_nodes, r.cdawg_b_edges, r.sa_b_len);
    return r;
}

}  // namespace trix::oracle
