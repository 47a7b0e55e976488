#pragma once

#include <optional>
#include <utility>

#include "trix/index.hpp"

namespace trix {

enum class EdgeKind { kPrimary, kSecondary };

/// O(n)-space view of DAWG(T_f): states are suffix-tree nodes of the
/// backward trie, transitions are W-link queries (hard = primary, soft =
/// secondary). No edge is ever materialized.
struct ImplicitDawg {
    const Index* index;

    explicit ImplicitDawg(const Index& ix) : index(&ix) {}

    NodeId source() const { return 0; }
    std::size_t state_count() const { return index->st.node_count(); }
    std::size_t stored_entries() const { return index->stored_entries(); }

    std::optional<std::pair<NodeId, EdgeKind>> transition(NodeId state, Symbol a,
                                                          QueryStats* stats = nullptr) const;

    /// True iff the pattern is a substring of the forward trie. The
    /// terminator is not a pattern symbol.
    bool accepts_substring(const Str& pattern) const;
};

}  // namespace trix
