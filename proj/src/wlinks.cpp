#include "trix/wlinks.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace trix {

const MicroMacro::Pa* MicroMacro::find_pa(const MicroTree& mt, Symbol a,
                                          QueryStats* stats) const {
    std::size_t lo = 0, hi = mt.pas.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (stats) ++stats->comparisons;
        if (mt.pas[mid].sym < a) lo = mid + 1;
        else hi = mid;
    }
    if (stats) ++stats->comparisons;
    if (lo < mt.pas.size() && mt.pas[lo].sym == a) return &mt.pas[lo];
    return nullptr;
}

std::optional<WLinkAnswer> MicroMacro::macro_lookup(NodeId root, Symbol a,
                                                    QueryStats* stats) const {
    const auto& links = macro_links[root_index[root]];
    std::size_t lo = 0, hi = links.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (stats) ++stats->comparisons;
        if (links[mid].sym < a) lo = mid + 1;
        else hi = mid;
    }
    if (stats) ++stats->comparisons;
    if (lo < links.size() && links[lo].sym == a)
        return WLinkAnswer{links[lo].target, links[lo].hard};
    return std::nullopt;
}

std::size_t MicroMacro::stored_entries() const {
    std::size_t total = 0;
    for (const auto& links : macro_links) total += links.size();
    for (const auto& mt : mts)
        for (const auto& pa : mt.pas) {
            total += pa.ranks.size();
            total += pa.root_successor != kNoRank;
        }
    return total;
}

MicroMacro decompose(const SuffixTree& st, std::uint32_t sigma) {
    if (sigma < 1) throw std::invalid_argument("decompose: sigma must be >= 1");
    const std::size_t n = st.node_count();
    MicroMacro mm;
    mm.sigma_used = sigma;

    // Greedy bottom-up: cut a micro-tree root whenever the accumulated
    // subtree mass reaches sigma. The suffix-tree root is always a cut.
    std::vector<std::uint32_t> mass(n, 0);
    std::vector<bool> cut(n, false);
    std::vector<NodeId> post;
    post.reserve(n);
    {
        std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < st.nodes[v].children.size())
                stack.emplace_back(st.nodes[v].children[i++].second, 0);
            else {
                post.push_back(v);
                stack.pop_back();
            }
        }
    }
    for (NodeId v : post) {
        std::uint32_t acc = 1;
        for (const auto& [c, u] : st.nodes[v].children)
            if (!cut[u]) acc += mass[u];
        mass[v] = acc;
        if (acc >= sigma || v == 0) {
            cut[v] = true;
            mass[v] = 0;
        }
    }

    mm.micro_root.assign(n, kNoNode);
    mm.root_index.assign(n, MicroMacro::kNoRank);
    std::vector<NodeId> by_pre(n);
    for (NodeId v = 0; v < n; ++v) by_pre[st.topo.preorder(v)] = v;
    for (NodeId v : by_pre) {
        if (cut[v]) {
            mm.root_index[v] = static_cast<std::uint32_t>(mm.roots.size());
            mm.roots.push_back(v);
            mm.micro_root[v] = v;
        } else {
            mm.micro_root[v] = mm.micro_root[st.nodes[v].parent];
        }
    }

    mm.mts.resize(mm.roots.size());
    mm.local_rank.assign(n, 0);
    for (NodeId v : by_pre) {
        auto& mt = mm.mts[mm.root_index[mm.micro_root[v]]];
        mm.local_rank[v] = static_cast<std::uint32_t>(mt.nodes_in_preorder.size());
        mt.nodes_in_preorder.push_back(v);
    }

    mm.macro_parent.assign(mm.roots.size(), MicroMacro::kNoRank);
    for (std::uint32_t r = 0; r < mm.roots.size(); ++r)
        if (mm.roots[r] != 0)
            mm.macro_parent[r] = mm.root_index[mm.micro_root[st.nodes[mm.roots[r]].parent]];
    return mm;
}

void build_pa_arrays(MicroMacro& mm, const HardWLinkTable& hard) {
    for (std::uint32_t r = 0; r < mm.roots.size(); ++r) {
        auto& mt = mm.mts[r];
        std::map<Symbol, std::vector<std::uint32_t>> collect;
        for (std::uint32_t rank = 0; rank < mt.nodes_in_preorder.size(); ++rank)
            for (const auto& [a, target] : hard.out[mt.nodes_in_preorder[rank]])
                collect[a].push_back(rank);
        mt.pas.clear();
        mt.pas.reserve(collect.size());
        for (auto& [a, ranks] : collect) {
            MicroMacro::Pa pa;
            pa.sym = a;
            pa.ranks = std::move(ranks);
            for (std::uint32_t rk : pa.ranks)
                if (rk > 0) { pa.root_successor = rk; break; }
            mt.pas.push_back(std::move(pa));
        }
    }
}

void build_macro_wlinks(MicroMacro& mm, const SuffixTree& st, const HardWLinkTable& hard) {
    std::vector<std::vector<std::uint32_t>> macro_children(mm.roots.size());
    for (std::uint32_t r = 0; r < mm.roots.size(); ++r)
        if (mm.macro_parent[r] != MicroMacro::kNoRank)
            macro_children[mm.macro_parent[r]].push_back(r);

    // Bottom-up over the macro tree (deeper suffix-tree nodes first).
    std::vector<std::uint32_t> order(mm.roots.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return st.nodes[mm.roots[a]].node_depth > st.nodes[mm.roots[b]].node_depth;
    });

    mm.macro_links.assign(mm.roots.size(), {});
    for (std::uint32_t r : order) {
        const NodeId root = mm.roots[r];
        const auto& mt = mm.mts[r];
        std::map<Symbol, MicroMacro::MacroLink> links;

        // Deeper micro trees first; propagated links are soft from here.
        for (std::uint32_t child : macro_children[r])
            for (const auto& link : mm.macro_links[child])
                links.insert({link.sym, {link.sym, link.target, false}});
        // A hard holder strictly below the root inside this micro tree wins
        // over anything propagated (it is the topmost holder overall).
        for (const auto& pa : mt.pas)
            if (pa.root_successor != MicroMacro::kNoRank) {
                NodeId holder = mt.nodes_in_preorder[pa.root_successor];
                NodeId target = *hard.lookup(holder, pa.sym);
                links[pa.sym] = {pa.sym, target, false};
            }
        // The root's own hard links win outright.
        for (const auto& [a, target] : hard.out[root]) links[a] = {a, target, true};

        auto& out = mm.macro_links[r];
        out.reserve(links.size());
        for (auto& [a, link] : links) out.push_back(link);
    }
}

std::optional<WLinkAnswer> soft_wlink_query(const MicroMacro& mm, const SuffixTree& st,
                                            const HardWLinkTable& hard, NodeId v,
                                            Symbol a, QueryStats* stats) {
    if (v >= st.node_count()) throw std::out_of_range("soft_wlink_query: unknown node");

    if (auto h = hard.lookup(v, a, stats)) return WLinkAnswer{*h, true};

    const NodeId root = mm.micro_root[v];
    if (v == root) return mm.macro_lookup(root, a, stats);
    // A link at any node forces one at every ancestor, so a nil answer
    // at the micro root settles the whole micro tree.
    auto at_root = mm.macro_lookup(root, a, stats);
    if (!at_root) return std::nullopt;

    const auto& mt = mm.mts[mm.root_index[root]];
    const MicroMacro::Pa* pa = mm.find_pa(mt, a, stats);
    std::uint32_t pred = MicroMacro::kNoRank, succ = MicroMacro::kNoRank;
    if (pa) {
        const auto& ranks = pa->ranks;
        std::size_t lo = 0, hi = ranks.size();
        const std::uint32_t vrank = mm.local_rank[v];
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (stats) ++stats->comparisons;
            if (ranks[mid] <= vrank) lo = mid + 1;
            else hi = mid;
        }
        if (lo > 0) pred = ranks[lo - 1];
        if (lo < ranks.size()) succ = ranks[lo];
        assert(pred == MicroMacro::kNoRank || pred != vrank);  // v holds no hard a-link
    }

    // Topmost hard-a holder inside this micro tree below v, if any: hard
    // holders are LCA-closed, so the first P_a entry after v that is v's
    // descendant is the unique highest one.
    if (succ != MicroMacro::kNoRank) {
        NodeId s = mt.nodes_in_preorder[succ];
        if (st.topo.is_ancestor(v, s))
            return WLinkAnswer{*hard.lookup(s, a, stats), false};
    }

    // Lowest in-micro-tree hard-a ancestor of v, located via the
    // predecessor entry and one LCA. Descend one edge from its hard target
    // and validate with a suffix-link ancestry check.
    if (pred != MicroMacro::kNoRank) {
        NodeId p = mt.nodes_in_preorder[pred];
        NodeId anc = st.topo.is_ancestor(p, v) ? p : st.lca.lca(p, v);
        if (auto qa = hard.lookup(anc, a, stats)) {
            NodeId toward =
                st.topo.anc(v, st.nodes[v].node_depth - st.nodes[anc].node_depth - 1);
            Symbol c = st.nodes[toward].first_symbol;
            auto d = st.child_by_symbol(*qa, c, stats);
            if (!d) return std::nullopt;
            if (!st.topo.is_ancestor(v, st.nodes[*d].slink)) return std::nullopt;
            return WLinkAnswer{*d, false};
        }
    }

    // No hard-a ancestor inside the micro tree. The root's stored answer
    // points at the topmost holder below the root; every node on that path
    // shares the target, so it is v's answer exactly when its suffix link
    // lands in v's subtree.
    NodeId z = at_root->hard ? root : st.nodes[at_root->target].slink;
    if (st.topo.is_ancestor(v, z)) return WLinkAnswer{at_root->target, false};
    return std::nullopt;
}

}  // namespace trix
