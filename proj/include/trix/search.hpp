#pragma once

#include <optional>
#include <vector>

#include "trix/index.hpp"

namespace trix {

/// Locus of the reversed pattern in the backward suffix tree: nearest
/// explicit ancestor-or-self plus progress along one of its out-edges.
/// offset == 0 means the cursor sits exactly on `base` (edge unset);
/// otherwise 1 <= offset < edge length of `edge_child`. String depth at
/// the locus always equals len.
struct Cursor {
    NodeId base = 0;
    NodeId edge_child = kNoNode;
    std::uint32_t offset = 0;
    std::uint32_t len = 0;
};

/// Match positions: pairs (u, v) of trie nodes with str_f(u, v) = pattern;
/// u is recovered as the len-th ancestor of v.
using OccurrenceList = std::vector<std::pair<NodeId, NodeId>>;

Cursor cursor_new(const Index& ix);

/// bP: one standard edge traversal on the backward suffix tree.
std::optional<Cursor> extend_left(const Index& ix, const Cursor& c, Symbol b,
                                  QueryStats* stats = nullptr);

/// Pa: one W-link query, plus a child search when the link is hard.
std::optional<Cursor> extend_right(const Index& ix, const Cursor& c, Symbol a,
                                   QueryStats* stats = nullptr);

std::size_t occurrence_count(const Index& ix, const Cursor& c);
OccurrenceList occurrences(const Index& ix, const Cursor& c);

/// Folds extend_left over the pattern right to left; empty on a miss.
OccurrenceList find(const Index& ix, const Str& pattern);

}  // namespace trix
