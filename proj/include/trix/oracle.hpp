#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trix/trie.hpp"

namespace trix::oracle {

// Quadratic-time ground truth. Everything here favors directness over speed;
// inputs are capped at desk scale.
inline constexpr std::size_t kDefaultDeskLimit = 2000;

struct DeskScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Which { kSubstr, kSuffix };
enum class Kind { kSuffixTrie, kSuffixTree, kDawg, kCdawg };

class StringSet {
public:
    void insert(Str s) { items_.insert(std::move(s)); }
    bool contains(const Str& s) const { return items_.count(s) != 0; }
    std::size_t size() const { return items_.size(); }
    const std::set<Str>& items() const { return items_; }

private:
    std::set<Str> items_;
};

/// Uniform handle over an augmented or raw trie so the oracle can run on
/// both (the size-bound families are stated pre-augmentation).
struct TrieView {
    std::vector<NodeId> parent;                       // kNoNode at root
    std::vector<Symbol> label;                        // edge label toward parent
    std::vector<std::vector<std::pair<Symbol, NodeId>>> kids;
    NodeId root = 0;
    LevelAncestor topo;

    std::size_t size() const { return parent.size(); }
    bool is_leaf(NodeId v) const { return kids[v].empty(); }

    static TrieView of(const AugmentedTrie& t);
    static TrieView of(const ForwardTrie& t);
};

/// Uncompacted trie of all suffixes of the chosen orientation, one node per
/// distinct substring, with occurrence sets and maximality flags.
struct SuffixTrie {
    struct Node {
        std::int32_t parent = -1;
        Symbol in_label = 0;
        std::uint32_t depth = 0;
        std::vector<std::pair<Symbol, std::uint32_t>> kids;  // sorted by symbol
        // Forward: occurrence end nodes. Backward: occurrence start nodes.
        std::vector<NodeId> occ;
        std::vector<NodeId> ends;                     // end-occurrence set
        std::uint32_t slink = 0;                      // node of the string minus first char
        std::uint32_t l_root = 0;                     // node of l-mxml(string)
        bool right_maximal = false;
        bool left_maximal = false;
        bool is_suffix = false;
    };
    Orientation orientation = Orientation::kForward;
    TrieView view;
    std::vector<Node> nodes;                          // 0 = ε

    Str string_of(std::uint32_t i) const;
    std::int32_t locate(const Str& s) const;          // -1 if not a substring
    bool is_substring(const Str& s) const { return locate(s) >= 0; }
};

SuffixTrie build_suffix_trie(TrieView view, Orientation o,
                             std::size_t limit = kDefaultDeskLimit);

struct OracleAutomaton {
    Kind kind;
    Orientation orientation;
    struct Node {
        Str longest;                                  // path string / class longest
        std::vector<NodeId> ends;                     // end-occurrence set
        bool suffix_class = false;
        std::vector<std::uint32_t> out;               // edge ids, sorted by label
    };
    struct Edge {
        std::uint32_t from, to;
        Str label;                                    // single symbol for trie/dawg
        bool primary = false;                         // dawg only
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<std::int32_t> slink;                  // dawg only, -1 when undefined
    std::uint32_t source = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::size_t leaf_count() const;                   // nodes without out-edges
    std::int32_t find_node(const Str& s) const;       // by longest string, -1 if absent
    std::optional<std::pair<std::uint32_t, bool>> transition(std::uint32_t node,
                                                             Symbol a) const;
};

OracleAutomaton from_suffix_trie(const SuffixTrie& st, Kind kind);

OracleAutomaton build_explicit(const AugmentedTrie& t, Kind kind, Orientation o,
                               std::size_t limit = kDefaultDeskLimit);
OracleAutomaton build_explicit_raw(const ForwardTrie& t, Kind kind, Orientation o,
                                   std::size_t limit = kDefaultDeskLimit);

StringSet enumerate(const AugmentedTrie& t, Which which, Orientation o,
                    std::size_t limit = kDefaultDeskLimit);
StringSet enumerate_raw(const ForwardTrie& t, Which which, Orientation o,
                        std::size_t limit = kDefaultDeskLimit);

struct MaximalExtensions {
    Str l_mxml, r_mxml, mxml;
};
MaximalExtensions maximal_extensions(const AugmentedTrie& t, const Str& x,
                                     Orientation o,
                                     std::size_t limit = kDefaultDeskLimit);

struct WlinkResult {
    std::uint32_t node;
    bool hard;
};
/// W_a(V) on an oracle suffix-tree/backward: locus of the shortest explicit
/// extension of a·str(V); nullopt iff no extension exists.
std::optional<WlinkResult> wlink_oracle(const OracleAutomaton& stree_b,
                                        std::uint32_t v, Symbol a);

struct SizeReport {
    std::size_t n = 0, n_aug = 0;
    Symbol sigma = 0;
    std::size_t stree_f_nodes = 0, stree_f_edges = 0;
    std::size_t stree_b_nodes = 0, stree_b_edges = 0;
    std::size_t dawg_f_nodes = 0, dawg_f_edges = 0;
    std::size_t dawg_b_nodes = 0, dawg_b_edges = 0;
    std::size_t cdawg_f_nodes = 0, cdawg_f_edges = 0;
    std::size_t cdawg_b_nodes = 0, cdawg_b_edges = 0;
    std::size_t sa_f_len = 0, sa_b_len = 0;
};
SizeReport measure(const AugmentedTrie& t, std::size_t limit = kDefaultDeskLimit);

}  // namespace trix::oracle
