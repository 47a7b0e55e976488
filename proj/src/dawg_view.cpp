#include "trix/dawg_view.hpp"

namespace trix {

std::optional<std::pair<NodeId, EdgeKind>> ImplicitDawg::transition(
    NodeId state, Symbol a, QueryStats* stats) const {
    if (state >= index->st.node_count())
        throw std::out_of_range("ImplicitDawg: invalid state");
    if (a > index->trie.base.sigma)
        throw std::out_of_range("ImplicitDawg: symbol out of range");
    auto ans = soft_wlink_query(index->mm, index->st, index->hard, state, a, stats);
    if (!ans) return std::nullopt;
    return std::make_pair(ans->target, ans->hard ? EdgeKind::kPrimary : EdgeKind::kSecondary);
}

bool ImplicitDawg::accepts_substring(const Str& pattern) const {
    const SuffixTree& st = index->st;
    const AugmentedTrie& t = index->trie;
    for (Symbol a : pattern)
        if (a == kTerminator || a > t.base.sigma)
            throw std::out_of_range("ImplicitDawg: symbol out of range");

    // P ∈ Substr(T_f) iff reverse(P) descends from the root of STree(T_b).
    NodeId node = 0;
    std::uint32_t offset = 0;  // consumed characters on the edge into `node`
    for (auto it = pattern.rbegin(); it != pattern.rend(); ++it) {
        if (offset == 0) {
            auto child = st.child_by_symbol(node, *it);
            if (!child) return false;
            node = *child;
            offset = 1;
        } else if (st.edge_char(t, node, offset + 1) != *it) {
            return false;
        } else {
            ++offset;
        }
        if (offset == st.nodes[node].edge_len) offset = 0;
    }
    return true;
}

}  // namespace trix
