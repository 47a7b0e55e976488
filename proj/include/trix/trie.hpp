#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trix {

using Symbol = std::uint32_t;
using NodeId = std::uint32_t;
using Str = std::vector<Symbol>;

// Symbol 0 is reserved for the terminator on the auxiliary edge above the
// root; it sorts below every alphabet symbol.
inline constexpr Symbol kTerminator = 0;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;

enum class Orientation { kForward, kBackward };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Depth, jump-pointer and Euler-interval support over a rooted tree given
/// as a parent array. anc() costs O(log n) per query, is_ancestor() O(1).
class LevelAncestor {
public:
    LevelAncestor() = default;
    static LevelAncestor build(const std::vector<NodeId>& parent, NodeId root);

    NodeId anc(NodeId u, std::uint32_t j) const;      // j-th ancestor, kNoNode if j > depth
    bool is_ancestor(NodeId u, NodeId v) const;       // reflexive
    std::uint32_t depth(NodeId u) const { check(u); return depth_[u]; }
    std::uint32_t preorder(NodeId u) const { check(u); return pre_[u]; }
    std::size_t size() const { return depth_.size(); }

private:
    void check(NodeId u) const {
        if (u >= depth_.size()) throw std::out_of_range("LevelAncestor: unknown node id");
    }
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> pre_, post_;           // Euler intervals
    std::vector<std::vector<NodeId>> up_;             // up_[k][v] = 2^k-th ancestor
};

/// Ordinary trie over the integer alphabet [1..sigma]; node 0 is the root.
/// Children are kept sorted by symbol so lookups are binary searches.
struct ForwardTrie {
    std::vector<NodeId> parent;                       // parent[0] == kNoNode
    std::vector<Symbol> parent_label;                 // label of edge parent->node
    std::vector<std::vector<std::pair<Symbol, NodeId>>> children;
    Symbol sigma = 0;

    std::size_t node_count() const { return parent.size(); }
    NodeId child(NodeId u, Symbol a) const;           // kNoNode if absent
    bool is_leaf(NodeId u) const { return children[u].empty(); }
    std::vector<NodeId> leaves() const;

    // Appends (creating if needed) a child of u with label a.
    NodeId add_child(NodeId u, Symbol a);
};

ForwardTrie parse_trie(const std::string& text);
std::string serialize_trie(const ForwardTrie& t);     // canonical TRIE v1 bytes
ForwardTrie trie_from_strings(const std::vector<Str>& lines);

/// Forward trie plus the auxiliary node ⊥ above the root; the edge ⊥->root
/// carries the terminator. ⊥ gets id n so original ids stay valid. The same
/// object serves both read directions.
struct AugmentedTrie {
    ForwardTrie base;
    NodeId bot = kNoNode;
    LevelAncestor topo;                               // over the n+1 augmented nodes

    std::size_t node_count() const { return base.node_count() + 1; }  // n̂
    NodeId root() const { return bot; }
    NodeId orig_root() const { return 0; }

    NodeId parent(NodeId v) const;                    // kNoNode for ⊥
    Symbol label_to_parent(NodeId v) const;           // kTerminator on the root edge
    std::uint32_t depth(NodeId v) const { return topo.depth(v); }  // ⊥ has depth 0
    NodeId anc(NodeId u, std::uint32_t j) const { return topo.anc(u, j); }
    bool is_ancestor(NodeId u, NodeId v) const { return topo.is_ancestor(u, v); }

    /// j-th character (1-based) of the backward suffix str_b(v, ⊥).
    Symbol suffix_char(NodeId v, std::uint32_t j) const {
        return label_to_parent(topo.anc(v, j - 1));
    }
    /// Whole backward suffix of v; length = depth(v).
    Str suffix_of(NodeId v) const;

    std::size_t distinct_symbols() const;             // includes the terminator
};

AugmentedTrie augment(ForwardTrie t);

Str path_string(const AugmentedTrie& t, NodeId from, NodeId to, Orientation o);

/// Zero-storage lens presenting the augmented trie with every edge reversed.
struct BackwardView {
    const AugmentedTrie* trie;

    struct Edge {
        NodeId from, to;
        Symbol label;
        bool operator==(const Edge&) const = default;
    };
    explicit BackwardView(const AugmentedTrie& t) : trie(&t) {}
    NodeId root() const { return trie->bot; }         // all paths lead to ⊥
    std::vector<Edge> edges() const;
};

Str reversed(const Str& s);

}  // namespace trix
