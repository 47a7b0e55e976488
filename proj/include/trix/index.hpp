#pragma once

#include "trix/suffix_tree.hpp"
#include "trix/trie.hpp"
#include "trix/wlinks.hpp"

namespace trix {

/// Everything needed to answer queries: augmented trie, suffix tree of the
/// backward trie (with SA and suffix links), hard W-links, and the
/// micro-macro soft-link store.
struct Index {
    AugmentedTrie trie;
    SuffixTree st;
    HardWLinkTable hard;
    MicroMacro mm;

    static Index build(ForwardTrie base);

    std::size_t stored_entries() const {
        return hard.entry_count() + mm.stored_entries();
    }
};

}  // namespace trix
