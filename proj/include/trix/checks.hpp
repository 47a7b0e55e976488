#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trix/index.hpp"
#include "trix/oracle.hpp"

namespace trix::checks {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;                               // counterexample when failed
};

/// Differential and structural verification of one instance against the
/// brute-force oracles. Stops adding detail after the first mismatch per
/// check but always runs every check.
class Verifier {
public:
    explicit Verifier(ForwardTrie base, std::size_t desk_limit = oracle::kDefaultDeskLimit);

    // Mutator for the fault-injection harness: flips one stored macro link
    // before the sweeps run, so a correct suite must report it.
    void inject_macro_fault();

    std::vector<CheckResult> run_all();

    const Index& index() const { return ix_; }

private:
    CheckResult structure_matches_oracle();
    CheckResult suffix_links();
    CheckResult suffix_array();
    CheckResult size_bounds();
    CheckResult hard_links();
    CheckResult wlink_sweep();
    CheckResult dawg_transitions();
    CheckResult search_differential();
    CheckResult facts_suite();
    CheckResult micro_macro_invariants();
    CheckResult duality_counts();

    Index ix_;
    std::size_t limit_;
    oracle::SuffixTrie trie_f_, trie_b_;
    oracle::OracleAutomaton stree_b_;
    std::vector<std::int32_t> iso_;                   // st node -> oracle stree node
    bool iso_ok_ = false;
};

/// Builds, runs, and summarizes; returns failures only.
std::vector<CheckResult> verify_trie(ForwardTrie base, bool inject_fault = false,
                                     std::size_t desk_limit = oracle::kDefaultDeskLimit);

/// Brute-force occurrence enumeration: all (u, v) ancestor pairs of the
/// augmented trie whose forward path string equals the pattern.
std::vector<std::pair<NodeId, NodeId>> brute_occurrences(const AugmentedTrie& t,
                                                         const Str& pattern);

}  // namespace trix::checks
