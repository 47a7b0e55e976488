#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trix/bundle.hpp"
#include "trix/checks.hpp"
#include "trix/dawg_view.hpp"
#include "trix/gen.hpp"
#include "trix/oracle.hpp"
#include "trix/search.hpp"

namespace {

using nlohmann::json;
using namespace trix;

constexpr int kExitOk = 0;
constexpr int kExitMiss = 1;   // search miss / verify failure
constexpr int kExitUsage = 2;  // usage / parse / size-limit errors

std::size_t desk_limit() {
    if (const char* env = std::getenv("TRIX_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw ParseError("TRIX_LIMIT must be a positive integer");
    }
    return oracle::kDefaultDeskLimit;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << bytes;
}

struct LoadedInput {
    ForwardTrie trie;
    bool ascii = false;
    std::string byte_map;  // symbol i <-> byte byte_map[i-1]
};

LoadedInput load_input(const std::string& path, bool ascii) {
    std::string text = read_file(path);
    LoadedInput in;
    if (text.rfind("TRIE v1", 0) == 0) {
        in.trie = parse_trie(text);
        return in;
    }
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty()) lines.push_back(line);
    }
    std::vector<Str> words;
    if (ascii) {
        std::set<char> bytes;
        for (const auto& line : lines)
            for (char c : line) bytes.insert(c);
        in.ascii = true;
        in.byte_map.assign(bytes.begin(), bytes.end());
        for (const auto& line : lines) {
            Str w;
            for (char c : line)
                w.push_back(static_cast<Symbol>(
                    1 + (std::lower_bound(in.byte_map.begin(), in.byte_map.end(), c) -
                         in.byte_map.begin())));
            words.push_back(std::move(w));
        }
    } else {
        for (const auto& line : lines) {
            std::istringstream is(line);
            Str w;
            long long s;
            while (is >> s) {
                if (s < 1) throw ParseError("strings input: symbols must be >= 1");
                w.push_back(static_cast<Symbol>(s));
            }
            words.push_back(std::move(w));
        }
    }
    in.trie = trie_from_strings(words);
    return in;
}

std::optional<Str> parse_pattern(const IndexBundle& b, const std::string& text) {
    Str p;
    if (b.charset_ascii) {
        for (char c : text) {
            auto it = std::lower_bound(b.byte_map.begin(), b.byte_map.end(), c);
            if (it == b.byte_map.end() || *it != c) return std::nullopt;
            p.push_back(static_cast<Symbol>(1 + (it - b.byte_map.begin())));
        }
    } else {
        std::istringstream is(text);
        long long s;
        while (is >> s) {
            if (s < 1 || static_cast<Symbol>(s) > b.index.trie.base.sigma)
                return std::nullopt;
            p.push_back(static_cast<Symbol>(s));
        }
        if (!is.eof()) return std::nullopt;
    }
    for (Symbol s : p)
        if (s == kTerminator || s > b.index.trie.base.sigma) return std::nullopt;
    return p;
}

json report_to_json(const oracle::SizeReport& r) {
    return json{{"n", r.n},
                {"n_aug", r.n_aug},
                {"sigma", r.sigma},
                {"stree_f_nodes", r.stree_f_nodes},
                {"stree_f_edges", r.stree_f_edges},
                {"stree_b_nodes", r.stree_b_nodes},
                {"stree_b_edges", r.stree_b_edges},
                {"dawg_f_nodes", r.dawg_f_nodes},
                {"dawg_f_edges", r.dawg_f_edges},
                {"dawg_b_nodes", r.dawg_b_nodes},
                {"dawg_b_edges", r.dawg_b_edges},
                {"cdawg_f_nodes", r.cdawg_f_nodes},
                {"cdawg_f_edges", r.cdawg_f_edges},
                {"cdawg_b_nodes", r.cdawg_b_nodes},
                {"cdawg_b_edges", r.cdawg_b_edges},
                {"sa_f_len", r.sa_f_len},
                {"sa_b_len", r.sa_b_len}};
}

int cmd_gen(const std::string& family, const std::vector<std::uint64_t>& params,
            const std::string& out_path) {
    ForwardTrie t;
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ParseError("gen " + family + ": expected " + std::to_string(k) +
                             " parameter(s)");
    };
    if (family == "broom") {
        need(2);
        t = gen::broom(params[0], static_cast<std::uint32_t>(params[1]));
    } else if (family == "comb") {
        need(1);
        t = gen::comb(params[0]);
    } else if (family == "path_ab") {
        need(1);
        t = gen::path_ab(params[0]);
    } else if (family == "subalpha_comb") {
        need(1);
        t = gen::subalpha_comb(params[0]);
    } else if (family == "random") {
        need(3);
        t = gen::random_trie(params[0], static_cast<std::uint32_t>(params[1]), params[2]);
    } else {
        throw ParseError("gen: unknown family " + family);
    }
    std::string bytes = serialize_trie(t);
    if (out_path.empty()) std::cout << bytes;
    else write_file(out_path, bytes);
    return kExitOk;
}

int cmd_build(const std::string& in_path, const std::string& out_path, bool ascii) {
    LoadedInput in = load_input(in_path, ascii);
    IndexBundle b;
    b.index = Index::build(std::move(in.trie));
    b.charset_ascii = in.ascii ? 1 : 0;
    b.byte_map = in.byte_map;
    write_file(out_path, b.serialize());
    std::cout << "indexed " << b.index.trie.base.node_count() << " trie nodes; "
              << b.index.st.node_count() << " suffix-tree nodes; "
              << b.index.stored_entries() << " stored link entries\n";
    return kExitOk;
}

int cmd_stats(const std::string& in_path, bool as_json, bool full, bool force,
              bool ascii) {
    LoadedInput in = load_input(in_path, ascii);
    const std::size_t limit = desk_limit();
    const std::size_t n_aug = in.trie.node_count() + 1;

    if (n_aug > limit && !full && !force)
        throw ParseError("stats: input exceeds the desk-scale limit of " +
                         std::to_string(limit) + " nodes (use --full to compute the "
                         "quadratic structures anyway, or --force for the linear ones)");

    Index ix = Index::build(in.trie);
    json j;
    if (n_aug <= limit || full) {
        j = report_to_json(oracle::measure(ix.trie, full ? n_aug : limit));
    } else {
        j = json{{"n", in.trie.node_count()},
                 {"n_aug", n_aug},
                 {"sigma", in.trie.sigma},
                 {"stree_b_nodes", ix.st.node_count()},
                 {"stree_b_edges", ix.st.edge_count()},
                 {"sa_b_len", ix.st.sa.size()}};
    }
    j["implicit_entries"] = ix.stored_entries();
    j["implicit_entries_per_node"] =
        static_cast<double>(ix.stored_entries()) / static_cast<double>(n_aug);
    if (as_json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ' ' << it.value() << '\n';
    }
    return kExitOk;
}

int cmd_search(const std::string& index_path, const std::string& pattern_text) {
    IndexBundle b = IndexBundle::deserialize(read_file(index_path));
    auto pattern = parse_pattern(b, pattern_text);
    if (!pattern) {
        std::cout << "0\n";
        std::cerr << "search: pattern symbol outside the index alphabet\n";
        return kExitMiss;
    }
    OccurrenceList occ = find(b.index, *pattern);
    std::cout << occ.size() << '\n';
    for (const auto& [u, v] : occ) std::cout << u << ' ' << v << '\n';
    return occ.empty() ? kExitMiss : kExitOk;
}

int cmd_bidi(const std::string& index_path, const std::string& script_path, bool list) {
    IndexBundle b = IndexBundle::deserialize(read_file(index_path));
    std::istringstream script(read_file(script_path));

    Cursor cur = cursor_new(b.index);
    std::string op, tok;
    std::size_t step = 0;
    std::string line;
    while (std::getline(script, line)) {
        if (line.empty()) continue;
        ++step;
        std::istringstream is(line);
        if (!(is >> op >> tok) || (op != "L" && op != "R"))
            throw ParseError("bidi: bad script line " + std::to_string(step) +
                             " (want 'L <sym>' or 'R <sym>')");
        auto sym = parse_pattern(b, tok);
        if (!sym || sym->size() != 1) {
            std::cout << "0\nfail at step " << step << '\n';
            return kExitMiss;
        }
        auto next = op == "L" ? extend_left(b.index, cur, (*sym)[0])
                              : extend_right(b.index, cur, (*sym)[0]);
        if (!next) {
            std::cout << "0\nfail at step " << step << '\n';
            return kExitMiss;
        }
        cur = *next;
    }
    std::cout << occurrence_count(b.index, cur) << '\n';
    if (list)
        for (const auto& [u, v] : occurrences(b.index, cur))
            std::cout << u << ' ' << v << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& in_path, std::uint32_t seeds, bool inject, bool ascii) {
    const std::size_t limit = desk_limit();
    int failures = 0;
    auto run_one = [&](const std::string& label, ForwardTrie t, bool fault) {
        if (t.node_count() + 1 > limit)
            throw ParseError("verify: " + label + " exceeds the desk-scale limit");
        checks::Verifier v(std::move(t), limit);
        if (fault) v.inject_macro_fault();
        for (const auto& c : v.run_all()) {
            if (c.passed) {
                std::cout << "ok   " << label << ": " << c.name << '\n';
            } else {
                std::cout << "FAIL " << label << ": " << c.name << " — " << c.detail
                          << '\n';
                ++failures;
            }
        }
    };

    run_one(in_path, load_input(in_path, ascii).trie, inject);
    for (std::uint32_t s = 0; s < seeds; ++s) {
        std::size_t n = 2 + (s * 37) % 299;
        std::uint32_t sigmas[4] = {2, 8, 26, static_cast<std::uint32_t>((n + 1) / 2)};
        std::uint32_t sigma = std::max<std::uint32_t>(1, sigmas[s % 4]);
        run_one("seed " + std::to_string(s), gen::random_trie(n, sigma, s), false);
    }
    if (failures) {
        std::cout << failures << " check(s) failed\n";
        return kExitMiss;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trie indexing engine: backward suffix tree, implicit DAWG, "
                 "bidirectional search"};
    app.require_subcommand(1);

    std::string family, in_path, out_path, index_path, pattern_text, script_path;
    std::vector<std::uint64_t> params;
    bool as_json = false, full = false, force = false, ascii = false, list = false;
    bool inject = false;
    std::uint32_t seeds = 0;

    auto* gen_cmd = app.add_subcommand("gen", "generate a trie family as TRIE v1");
    gen_cmd->add_option("family", family,
                        "broom | comb | path_ab | subalpha_comb | random")
        ->required();
    gen_cmd->add_option("params", params, "family parameters");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string charset;
    auto* build_cmd = app.add_subcommand("build", "build and persist an index");
    build_cmd->add_option("input", in_path, "TRIE v1 file or strings file")->required();
    build_cmd->add_option("--out", out_path, "index output file")->required();
    build_cmd->add_option("--charset", charset,
                          "'ascii': map strings-input bytes to symbols by rank");

    auto* stats_cmd = app.add_subcommand("stats", "size report for all structures");
    stats_cmd->add_option("input", in_path)->required();
    stats_cmd->add_flag("--json", as_json);
    stats_cmd->add_flag("--full", full, "compute quadratic oracles past the limit");
    stats_cmd->add_flag("--force", force, "emit only linear fields past the limit");
    stats_cmd->add_option("--charset", charset,
                          "'ascii': map strings-input bytes to symbols by rank");

    auto* search_cmd = app.add_subcommand("search", "find a pattern in an index");
    search_cmd->add_option("index", index_path)->required();
    search_cmd->add_option("pattern", pattern_text)->required();

    auto* bidi_cmd = app.add_subcommand("bidi", "run an L/R extension script");
    bidi_cmd->add_option("index", index_path)->required();
    bidi_cmd->add_option("script", script_path)->required();
    bidi_cmd->add_flag("--list", list, "also print the occurrence pairs");

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle-equivalence suite");
    verify_cmd->add_option("input", in_path)->required();
    verify_cmd->add_option("--seeds", seeds, "additional seeded random tries");
    verify_cmd->add_flag("--inject-fault", inject, "flip one stored macro link first");
    verify_cmd->add_option("--charset", charset,
                           "'ascii': map strings-input bytes to symbols by rank");

    try {
        app.parse(argc, argv);
        if (!charset.empty()) {
            if (charset != "ascii") throw ParseError("--charset: only 'ascii' is supported");
            ascii = true;
        }
        if (gen_cmd->parsed()) return cmd_gen(family, params, out_path);
        if (build_cmd->parsed()) return cmd_build(in_path, out_path, ascii);
        if (stats_cmd->parsed()) return cmd_stats(in_path, as_json, full, force, ascii);
        if (search_cmd->parsed()) return cmd_search(index_path, pattern_text);
        if (bidi_cmd->parsed()) return cmd_bidi(index_path, script_path, list);
        if (verify_cmd->parsed()) return cmd_verify(in_path, seeds, inject, ascii);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
