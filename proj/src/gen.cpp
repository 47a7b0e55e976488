#include "trix/gen.hpp"

#include <random>
#include <stdexcept>

namespace trix::gen {

namespace {

ForwardTrie single_root() {
    ForwardTrie t;
    t.parent.assign(1, kNoNode);
    t.parent_label.assign(1, 0);
    t.children.assign(1, {});
    return t;
}

}  // namespace

ForwardTrie broom(std::size_t n, std::uint32_t sigma) {
    if (sigma < 1 || n < sigma + 3)
        throw std::invalid_argument("broom: requires sigma >= 1 and n >= sigma + 3");
    ForwardTrie t = single_root();
    NodeId v = 0;
    for (std::size_t i = 0; i < n - sigma - 1; ++i) v = t.add_child(v, 1);
    for (std::uint32_t b = 0; b < sigma; ++b) t.add_child(v, 2 + b);
    return t;
}

ForwardTrie comb(std::size_t k) {
    if (k < 2 || (k & (k - 1)) != 0)
        throw std::invalid_argument("comb: k must be a power of two, k >= 2");
    ForwardTrie t = single_root();
    NodeId v = 0;
    for (std::size_t i = 0; i < k; ++i) v = t.add_child(v, 1);
    std::vector<NodeId> level{v};
    for (std::size_t d = k; d > 1; d /= 2) {
        std::vector<NodeId> next;
        next.reserve(level.size() * 2);
        for (NodeId u : level) {
            next.push_back(t.add_child(u, 2));
            next.push_back(t.add_child(u, 3));
        }
        level = std::move(next);
    }
    return t;
}

ForwardTrie path_ab(std::size_t m) {
    if (m < 2) throw std::invalid_argument("path_ab: m must be >= 2");
    ForwardTrie t = single_root();
    NodeId v = t.add_child(0, 2);  // b first: read leaf-to-root this spells a^{m-1}b
    for (std::size_t i = 0; i + 1 < m; ++i) v = t.add_child(v, 1);
    return t;
}

ForwardTrie subalpha_comb(std::size_t depth) {
    if (depth < 2) throw std::invalid_argument("subalpha_comb: depth must be >= 2");
    ForwardTrie t = single_root();
    std::vector<NodeId> level{0};
    for (std::size_t d = 0; d < depth; ++d) {
        const Symbol a = static_cast<Symbol>(2 * d + 1);
        std::vector<NodeId> next;
        next.reserve(level.size() * 2);
        for (NodeId u : level) {
            next.push_back(t.add_child(u, a));
            next.push_back(t.add_child(u, a + 1));
        }
        level = std::move(next);
    }
    return t;
}

ForwardTrie random_trie(std::size_t n, std::uint32_t sigma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_trie: n must be >= 1");
    if (sigma < 1) throw std::invalid_argument("random_trie: sigma must be >= 1");
    std::mt19937_64 rng(seed);
    ForwardTrie t = single_root();
    t.sigma = sigma;
    while (t.node_count() < n) {
        // Plain modulo keeps the stream platform-stable; bias is irrelevant.
        NodeId u = static_cast<NodeId>(rng() % t.node_count());
        if (t.children[u].size() >= sigma) continue;  // exhausted, redraw
        Symbol a = static_cast<Symbol>(1 + rng() % sigma);
        while (t.child(u, a) != kNoNode) a = static_cast<Symbol>(1 + rng() % sigma);
        t.add_child(u, a);
    }
    return t;
}

}  // namespace trix::gen
