#pragma once

#include <algorithm>
#include <string>

#include "trix/index.hpp"
#include "trix/trie.hpp"

namespace testutil {

// Fixture FX1: edges (0,a,1), (0,b,2), (1,b,3) over a=1, b=2; the word set
// {"ab", "b"}. Used across the suites with these exact node ids.
inline trix::ForwardTrie fx1() {
    return trix::parse_trie("TRIE v1 4 2\n0 1 1\n0 2 2\n1 3 2\n");
}

inline trix::ForwardTrie single_node() { return trix::parse_trie("TRIE v1 1 0\n"); }

inline trix::Str s(std::initializer_list<trix::Symbol> syms) { return trix::Str(syms); }

// Suffix-tree node spelling exactly `str`, or kNoNode.
inline trix::NodeId st_node_for(const trix::Index& ix, const trix::Str& str) {
    for (trix::NodeId v = 0; v < ix.st.node_count(); ++v)
        if (ix.st.expand(ix.trie, v) == str) return v;
    return trix::kNoNode;
}

}  // namespace testutil
