#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trix/trie.hpp"

namespace trix {

/// Comparison counter threaded through queries; used by the complexity
/// checks. Counts symbol/rank comparisons made by binary searches and
/// edge-character probes.
struct QueryStats {
    std::uint64_t comparisons = 0;
};

/// O(1) LCA via Euler tour + sparse table.
class LcaIndex {
public:
    LcaIndex() = default;
    static LcaIndex build(const std::vector<NodeId>& parent, NodeId root);
    NodeId lca(NodeId u, NodeId v) const;

private:
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> euler_depth_;
    std::vector<NodeId> euler_node_;
    std::vector<std::vector<std::uint32_t>> table_;   // argmin positions
};

/// Compact suffix tree of the backward trie. Edge labels are references
/// into the trie: (edge_node, edge_len) stands for the upward path of
/// edge_len edges starting at trie node edge_node.
struct SuffixTree {
    struct Node {
        NodeId parent = kNoNode;
        std::uint32_t str_depth = 0;
        std::uint32_t node_depth = 0;
        NodeId edge_node = kNoNode;
        std::uint32_t edge_len = 0;
        Symbol first_symbol = 0;                      // first char of incoming edge
        NodeId leaf_for = kNoNode;                    // trie node when leaf
        std::vector<std::pair<Symbol, NodeId>> children;  // sorted by symbol
        std::uint32_t sa_lo = 0, sa_hi = 0;           // SA interval
        NodeId slink = kNoNode;
    };
    std::vector<Node> nodes;                          // 0 = root
    std::vector<NodeId> sa;                           // leaves in lex order, length n̂-1
    std::vector<std::uint32_t> sa_inv;                // trie node -> SA rank
    std::vector<NodeId> leaf_of;                      // trie node -> leaf id (kNoNode for ⊥)
    LevelAncestor topo;                               // over suffix-tree nodes
    LcaIndex lca;
    bool has_slinks = false;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return nodes.size() - 1; }
    bool is_leaf(NodeId v) const { return nodes[v].leaf_for != kNoNode; }
    std::uint32_t leaf_count(NodeId v) const { return nodes[v].sa_hi - nodes[v].sa_lo + 1; }

    /// i-th character (1-based) of v's incoming edge label.
    Symbol edge_char(const AugmentedTrie& t, NodeId v, std::uint32_t i) const {
        return t.label_to_parent(t.anc(nodes[v].edge_node, i - 1));
    }
    std::optional<NodeId> child_by_symbol(NodeId v, Symbol c,
                                          QueryStats* stats = nullptr) const;
    std::vector<NodeId> subtree_leaves(NodeId v) const;   // trie ids, SA order
    Str expand(const AugmentedTrie& t, NodeId v) const;   // full path string
    std::string dump() const;                             // differential-tester format
};

SuffixTree build_suffix_tree(const AugmentedTrie& t);
void compute_suffix_links(SuffixTree& st, const AugmentedTrie& t);

/// Hard W-links, stored as the labeled inverse of slink: out[V] holds
/// (a, U) iff W_a(V) = U with U exactly a·str(V).
struct HardWLinkTable {
    std::vector<std::vector<std::pair<Symbol, NodeId>>> out;

    std::optional<NodeId> lookup(NodeId v, Symbol a, QueryStats* stats = nullptr) const;
    std::size_t entry_count() const;
};

HardWLinkTable derive_hard_wlinks(const SuffixTree& st, const AugmentedTrie& t);

}  // namespace trix
