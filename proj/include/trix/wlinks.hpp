#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trix/suffix_tree.hpp"
#include "trix/trie.hpp"

namespace trix {

struct WLinkAnswer {
    NodeId target;
    bool hard;
};

/// Micro-macro decomposition of the suffix tree plus the per-micro-tree
/// hard-link rank arrays P_a and the exact W-link maps of the macro roots.
/// Together with the hard table this is the whole implicit soft-link store.
struct MicroMacro {
    static constexpr std::uint32_t kNoRank = 0xFFFFFFFFu;

    struct Pa {
        Symbol sym;
        std::vector<std::uint32_t> ranks;             // strictly increasing local ranks
        std::uint32_t root_successor = kNoRank;       // first entry below the micro root
    };
    struct MicroTree {
        std::vector<NodeId> nodes_in_preorder;        // local rank -> suffix-tree node
        std::vector<Pa> pas;                          // sorted by sym
    };
    struct MacroLink {
        Symbol sym;
        NodeId target;
        bool hard;
    };

    std::vector<NodeId> micro_root;                   // st node -> its micro-tree root
    std::vector<std::uint32_t> local_rank;            // st node -> rank within micro tree
    std::vector<NodeId> roots;                        // micro roots
    std::vector<std::uint32_t> root_index;            // st node -> index into roots
    std::vector<std::uint32_t> macro_parent;          // per root index; kNoRank at st root
    std::vector<MicroTree> mts;                       // per root index
    std::vector<std::vector<MacroLink>> macro_links;  // per root index, sorted by sym
    std::uint32_t sigma_used = 0;

    std::size_t micro_count() const { return roots.size(); }
    const MicroTree& mt_of(NodeId v) const { return mts[root_index[micro_root[v]]]; }
    const Pa* find_pa(const MicroTree& mt, Symbol a, QueryStats* stats = nullptr) const;
    std::optional<WLinkAnswer> macro_lookup(NodeId root, Symbol a,
                                            QueryStats* stats = nullptr) const;

    /// Macro map entries + P_a lengths + stored successors. The hard table
    /// is counted separately by the DAWG view.
    std::size_t stored_entries() const;
};

MicroMacro decompose(const SuffixTree& st, std::uint32_t sigma);
void build_pa_arrays(MicroMacro& mm, const HardWLinkTable& hard);
void build_macro_wlinks(MicroMacro& mm, const SuffixTree& st, const HardWLinkTable& hard);

/// Exact W_a(v), hard or soft, in O(log σ) comparisons; nullopt iff
/// a·str(v) is not a substring of the backward trie.
std::optional<WLinkAnswer> soft_wlink_query(const MicroMacro& mm, const SuffixTree& st,
                                            const HardWLinkTable& hard, NodeId v,
                                            Symbol a, QueryStats* stats = nullptr);

}  // namespace trix
