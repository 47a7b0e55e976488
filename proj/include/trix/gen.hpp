#pragma once

#include <cstdint>

#include "trix/trie.hpp"

namespace trix::gen {

/// Broom: a path of n-sigma-1 a-edges from the root to a node v, then sigma
/// leaf children of v on distinct symbols. Worst case for DAWG(T_f) edges.
ForwardTrie broom(std::size_t n, std::uint32_t sigma);

/// Comb: a path of k a-edges, then a complete binary tree over {b, c} with
/// k leaves. Yields k(k+1) distinct forward suffixes. k must be a power of
/// two, at least 2.
ForwardTrie comb(std::size_t k);

/// Single path whose backward (leaf-to-root) reading is a^{m-1}b, i.e. the
/// forward spelling is b a^{m-1}. Realizes the exact 2m-1 / 2m-2 backward
/// suffix-tree counts of the string family.
ForwardTrie path_ab(std::size_t m);

/// Complete binary tree of the given depth with a fresh symbol pair per
/// level; alphabet size 2·depth. No two subtrees share labels, so nothing
/// merges in CDAWG(T_b).
ForwardTrie subalpha_comb(std::size_t depth);

/// Seeded random trie: nodes attach to a uniformly random existing node
/// under a random unused sibling symbol; full nodes are re-drawn.
ForwardTrie random_trie(std::size_t n, std::uint32_t sigma, std::uint64_t seed);

}  // namespace trix::gen
