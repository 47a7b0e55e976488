#include "trix/index.hpp"

namespace trix {

Index Index::build(ForwardTrie base) {
    Index ix;
    ix.trie = augment(std::move(base));
    ix.st = build_suffix_tree(ix.trie);
    compute_suffix_links(ix.st, ix.trie);
    ix.hard = derive_hard_wlinks(ix.st, ix.trie);
    // The decomposition is parameterized by the alphabet actually present;
    // declared-but-unused symbols would only pad the micro trees.
    ix.mm = decompose(ix.st, static_cast<std::uint32_t>(ix.trie.distinct_symbols()));
    build_pa_arrays(ix.mm, ix.hard);
    build_macro_wlinks(ix.mm, ix.st, ix.hard);
    return ix;
}

}  // namespace trix
