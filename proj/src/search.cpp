#include "trix/search.hpp"

#include <cassert>

namespace trix {

namespace {

void check_symbol(const Index& ix, Symbol s) {
    if (s == kTerminator || s > ix.trie.base.sigma)
        throw std::out_of_range("search: symbol out of range");
}

Cursor at_node(NodeId v, std::uint32_t len) { return Cursor{v, kNoNode, 0, len}; }

// String depth at the locus always equals the pattern length.
Cursor on_edge(const SuffixTree& st, NodeId child, std::uint32_t offset,
               std::uint32_t len) {
    if (offset == st.nodes[child].edge_len) {
        assert(st.nodes[child].str_depth == len);
        return at_node(child, len);
    }
    assert(offset < st.nodes[child].edge_len);
    assert(st.nodes[st.nodes[child].parent].str_depth + offset == len);
    return Cursor{st.nodes[child].parent, child, offset, len};
}

}  // namespace

Cursor cursor_new(const Index& ix) {
    (void)ix;
    return Cursor{};
}

std::optional<Cursor> extend_left(const Index& ix, const Cursor& c, Symbol b,
                                  QueryStats* stats) {
    check_symbol(ix, b);
    const SuffixTree& st = ix.st;
    if (c.offset == 0) {
        auto child = st.child_by_symbol(c.base, b, stats);
        if (!child) return std::nullopt;
        return on_edge(st, *child, 1, c.len + 1);
    }
    if (stats) ++stats->comparisons;
    if (st.edge_char(ix.trie, c.edge_child, c.offset + 1) != b) return std::nullopt;
    return on_edge(st, c.edge_child, c.offset + 1, c.len + 1);
}

std::optional<Cursor> extend_right(const Index& ix, const Cursor& c, Symbol a,
                                   QueryStats* stats) {
    check_symbol(ix, a);
    const SuffixTree& st = ix.st;
    auto link = soft_wlink_query(ix.mm, ix.st, ix.hard, c.base, a, stats);
    if (!link) return std::nullopt;

    if (c.offset == 0) {
        // Explicit locus: the W-link target is the answer; for a soft link
        // the new locus is an implicit point on the target's incoming edge.
        if (link->hard) return at_node(link->target, c.len + 1);
        NodeId up = st.nodes[link->target].parent;
        return on_edge(st, link->target, c.len + 1 - st.nodes[up].str_depth, c.len + 1);
    }

    const Symbol c_first = st.nodes[c.edge_child].first_symbol;
    if (link->hard) {
        // Descend the edge starting with the partial edge's first character;
        // the remaining characters match automatically.
        auto d = st.child_by_symbol(link->target, c_first, stats);
        if (!d) return std::nullopt;
        assert(c.offset < st.nodes[*d].edge_len);
        return on_edge(st, *d, c.offset, c.len + 1);
    }
    // Soft link: the whole extension lies on the edge into the target.
    // Continue only if the character right after the a·str(base) point
    // matches the partial edge.
    NodeId up = st.nodes[link->target].parent;
    const std::uint32_t point = st.nodes[c.base].str_depth + 1 - st.nodes[up].str_depth;
    if (stats) ++stats->comparisons;
    if (st.edge_char(ix.trie, link->target, point + 1) != c_first) return std::nullopt;
    const std::uint32_t offset = c.len + 1 - st.nodes[up].str_depth;
    assert(offset < st.nodes[link->target].edge_len);
    return on_edge(st, link->target, offset, c.len + 1);
}

std::size_t occurrence_count(const Index& ix, const Cursor& c) {
    const NodeId locus = c.offset == 0 ? c.base : c.edge_child;
    return ix.st.leaf_count(locus);
}

OccurrenceList occurrences(const Index& ix, const Cursor& c) {
    const SuffixTree& st = ix.st;
    const NodeId locus = c.offset == 0 ? c.base : c.edge_child;
    OccurrenceList out;
    out.reserve(st.leaf_count(locus));
    for (std::uint32_t i = st.nodes[locus].sa_lo; i <= st.nodes[locus].sa_hi; ++i) {
        NodeId v = st.sa[i];
        out.emplace_back(ix.trie.anc(v, c.len), v);
    }
    return out;
}

OccurrenceList find(const Index& ix, const Str& pattern) {
    Cursor c = cursor_new(ix);
    for (auto it = pattern.rbegin(); it != pattern.rend(); ++it) {
        auto next = extend_left(ix, c, *it);
        if (!next) return {};
        c = *next;
    }
    return occurrences(ix, c);
}

}  // namespace trix
