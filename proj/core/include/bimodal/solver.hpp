#ifndef BIMODAL_SOLVER_HPP
#define BIMODAL_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bimodal/formula.hpp"
#include "bimodal/tableau.hpp"

namespace bimodal {

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct SearchOptions {
    Logic logic = Logic::S4xS5;
    bool collect_tableau = false;
    bool memoize = false;
    std::optional<std::size_t> depth_limit_override;
    std::uint64_t step_limit = std::uint64_t{1} << 32;
    /// Debug hook invoked with every recursive call's cloud sequence.
    std::function<void(const std::vector<Bitset>&)> on_call;
};

struct SearchStats {
    std::size_t max_recursion_depth = 0;  // largest m over all calls
    std::uint64_t clouds_enumerated = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t steps = 0;
};

/// Accepting tableau extracted from a successful search: a set of clouds,
/// the initial cloud, and a designated member set containing the formula.
struct PartialTableau {
    std::vector<Bitset> clouds;  // deduplicated, ascending bitstring order
    Bitset initial;
    Bitset designated_set;       // member of initial with phi in it
};

struct Verdict {
    bool satisfiable = false;
    SearchStats stats;
    std::optional<PartialTableau> witness;
};

/// Depth bound the search must respect: 5 * n * A^2.
std::size_t recursion_depth_bound(std::size_t n, std::size_t A);

Verdict solve(const TableauUniverse& u, const SearchOptions& opts);
Verdict solve(const FormulaPtr& f, const SearchOptions& opts);

/// Number of tableau-sets A for (f, x).
std::size_t count_tableau_sets(const FormulaPtr& f, Logic x);

/// Recursive core, exposed for tests: decides whether a partial tableau
/// for the given cloud sequence exists. Preconditions: seq nonempty,
/// pairwise distinct, consecutive clouds successor-related.
bool alg_rec(const TableauUniverse& u, const std::vector<Bitset>& seq,
             const SearchOptions& opts, SearchStats& stats,
             std::vector<Bitset>* collector = nullptr);

}  // namespace bimodal

#endif
