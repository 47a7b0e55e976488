#include "trix/bundle.hpp"

#include <algorithm>
#include <cstring>

namespace trix {

namespace {

constexpr char kMagic[8] = {'T', 'R', 'I', 'X', 'I', 'D', 'X', '\0'};

class Writer {
public:
    void u32(std::uint32_t x) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
    }
    void u64(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
    }
    void vec32(const std::vector<std::uint32_t>& v) {
        u64(v.size());
        for (auto x : v) u32(x);
    }
    void bytes(const std::string& s) {
        u64(s.size());
        out_.append(s);
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}
    std::uint32_t u32() {
        need(4);
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i)
            x |= static_cast<std::uint32_t>(static_cast<unsigned char>(s_[pos_++])) << (8 * i);
        return x;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i)
            x |= static_cast<std::uint64_t>(static_cast<unsigned char>(s_[pos_++])) << (8 * i);
        return x;
    }
    std::vector<std::uint32_t> vec32() {
        std::uint64_t n = u64();
        std::vector<std::uint32_t> v(n);
        for (auto& x : v) x = u32();
        return v;
    }
    std::string bytes() {
        std::uint64_t n = u64();
        need(n);
        std::string s = s_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    bool done() const { return pos_ == s_.size(); }

private:
    void need(std::uint64_t n) {
        if (pos_ + n > s_.size()) throw ParseError("index bundle: truncated");
    }
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string IndexBundle::serialize() const {
    Writer w;
    w.bytes(std::string(kMagic, sizeof kMagic));
    w.u32(kVersion);
    w.u32(charset_ascii);
    w.bytes(byte_map);

    const ForwardTrie& t = index.trie.base;
    w.u64(t.node_count());
    w.u32(t.sigma);
    w.vec32(t.parent);
    w.vec32(t.parent_label);

    const SuffixTree& st = index.st;
    w.u64(st.node_count());
    for (const auto& nd : st.nodes) {
        w.u32(nd.parent);
        w.u32(nd.str_depth);
        w.u32(nd.node_depth);
        w.u32(nd.edge_node);
        w.u32(nd.edge_len);
        w.u32(nd.first_symbol);
        w.u32(nd.leaf_for);
        w.u32(nd.sa_lo);
        w.u32(nd.sa_hi);
        w.u32(nd.slink);
        w.u64(nd.children.size());
        for (const auto& [c, u] : nd.children) {
            w.u32(c);
            w.u32(u);
        }
    }
    w.vec32(st.sa);

    const HardWLinkTable& hard = index.hard;
    w.u64(hard.out.size());
    for (const auto& row : hard.out) {
        w.u64(row.size());
        for (const auto& [a, u] : row) {
            w.u32(a);
            w.u32(u);
        }
    }

    const MicroMacro& mm = index.mm;
    w.u32(mm.sigma_used);
    w.vec32(mm.micro_root);
    w.vec32(mm.local_rank);
    w.vec32(mm.roots);
    w.vec32(mm.macro_parent);
    w.u64(mm.mts.size());
    for (const auto& mt : mm.mts) {
        w.vec32(mt.nodes_in_preorder);
        w.u64(mt.pas.size());
        for (const auto& pa : mt.pas) {
            w.u32(pa.sym);
            w.u32(pa.root_successor);
            w.vec32(pa.ranks);
        }
    }
    w.u64(mm.macro_links.size());
    for (const auto& links : mm.macro_links) {
        w.u64(links.size());
        for (const auto& link : links) {
            w.u32(link.sym);
            w.u32(link.target);
            w.u32(link.hard);
        }
    }
    return w.take();
}

IndexBundle IndexBundle::deserialize(const std::string& bytes) {
    Reader r(bytes);
    if (r.bytes() != std::string(kMagic, sizeof kMagic))
        throw ParseError("index bundle: bad magic");
    if (r.u32() != kVersion) throw ParseError("index bundle: unsupported version");

    IndexBundle b;
    b.charset_ascii = r.u32();
    b.byte_map = r.bytes();

    ForwardTrie t;
    std::uint64_t n = r.u64();
    t.sigma = r.u32();
    t.parent = r.vec32();
    t.parent_label = r.vec32();
    if (t.parent.size() != n || t.parent_label.size() != n)
        throw ParseError("index bundle: trie arrays inconsistent");
    t.children.assign(n, {});
    for (NodeId v = 1; v < n; ++v) {
        if (t.parent[v] >= n) throw ParseError("index bundle: bad trie parent");
        t.children[t.parent[v]].emplace_back(t.parent_label[v], v);
    }
    for (auto& ch : t.children) std::sort(ch.begin(), ch.end());
    b.index.trie = augment(std::move(t));

    SuffixTree& st = b.index.st;
    std::uint64_t stn = r.u64();
    st.nodes.resize(stn);
    for (auto& nd : st.nodes) {
        nd.parent = r.u32();
        nd.str_depth = r.u32();
        nd.node_depth = r.u32();
        nd.edge_node = r.u32();
        nd.edge_len = r.u32();
        nd.first_symbol = r.u32();
        nd.leaf_for = r.u32();
        nd.sa_lo = r.u32();
        nd.sa_hi = r.u32();
        nd.slink = r.u32();
        std::uint64_t k = r.u64();
        nd.children.resize(k);
        for (auto& [c, u] : nd.children) {
            c = r.u32();
            u = r.u32();
        }
    }
    st.sa = r.vec32();
    if (st.sa.size() + 1 != b.index.trie.node_count())
        throw ParseError("index bundle: suffix array length mismatch");
    for (const auto& nd : st.nodes) {
        if ((nd.parent != kNoNode && nd.parent >= stn) ||
            (nd.slink != kNoNode && nd.slink >= stn) ||
            (nd.leaf_for != kNoNode && nd.leaf_for + 1 >= b.index.trie.node_count()) ||
            (nd.edge_node != kNoNode && nd.edge_node + 1 >= b.index.trie.node_count()))
            throw ParseError("index bundle: suffix-tree reference out of range");
        for (const auto& [c, u] : nd.children)
            if (u >= stn) throw ParseError("index bundle: child reference out of range");
    }
    for (NodeId w : st.sa)
        if (w + 1 >= b.index.trie.node_count())
            throw ParseError("index bundle: suffix array entry out of range");
    st.sa_inv.assign(b.index.trie.node_count(), 0);
    st.leaf_of.assign(b.index.trie.node_count(), kNoNode);
    for (std::uint32_t i = 0; i < st.sa.size(); ++i) st.sa_inv[st.sa[i]] = i;
    for (NodeId v = 0; v < stn; ++v)
        if (st.nodes[v].leaf_for != kNoNode) st.leaf_of[st.nodes[v].leaf_for] = v;
    {
        std::vector<NodeId> parent(stn);
        for (NodeId v = 0; v < stn; ++v)
            parent[v] = v == 0 ? kNoNode : st.nodes[v].parent;
        st.topo = LevelAncestor::build(parent, 0);
        st.lca = LcaIndex::build(parent, 0);
    }
    st.has_slinks = true;

    HardWLinkTable& hard = b.index.hard;
    std::uint64_t hn = r.u64();
    if (hn != stn) throw ParseError("index bundle: hard table size mismatch");
    hard.out.resize(hn);
    for (auto& row : hard.out) {
        std::uint64_t k = r.u64();
        row.resize(k);
        for (auto& [a, u] : row) {
            a = r.u32();
            u = r.u32();
        }
    }

    MicroMacro& mm = b.index.mm;
    mm.sigma_used = r.u32();
    mm.micro_root = r.vec32();
    mm.local_rank = r.vec32();
    mm.roots = r.vec32();
    mm.macro_parent = r.vec32();
    if (mm.micro_root.size() != stn || mm.local_rank.size() != stn)
        throw ParseError("index bundle: micro-macro arrays inconsistent");
    for (NodeId v : mm.micro_root)
        if (v >= stn) throw ParseError("index bundle: micro root out of range");
    for (NodeId v : mm.roots)
        if (v >= stn) throw ParseError("index bundle: root list out of range");
    mm.root_index.assign(stn, MicroMacro::kNoRank);
    for (std::uint32_t i = 0; i < mm.roots.size(); ++i) mm.root_index[mm.roots[i]] = i;
    std::uint64_t mtn = r.u64();
    if (mtn != mm.roots.size()) throw ParseError("index bundle: micro tree count mismatch");
    mm.mts.resize(mtn);
    for (auto& mt : mm.mts) {
        mt.nodes_in_preorder = r.vec32();
        std::uint64_t k = r.u64();
        mt.pas.resize(k);
        for (auto& pa : mt.pas) {
            pa.sym = r.u32();
            pa.root_successor = r.u32();
            pa.ranks = r.vec32();
        }
    }
    std::uint64_t mln = r.u64();
    if (mln != mm.roots.size()) throw ParseError("index bundle: macro link count mismatch");
    mm.macro_links.resize(mln);
    for (auto& links : mm.macro_links) {
        std::uint64_t k = r.u64();
        links.resize(k);
        for (auto& link : links) {
            link.sym = r.u32();
            link.target = r.u32();
            link.hard = r.u32() != 0;
        }
    }
    if (!r.done()) throw ParseError("index bundle: trailing bytes");
    return b;
}

}  // namespace trix
