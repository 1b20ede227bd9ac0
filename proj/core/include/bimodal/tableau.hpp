#ifndef BIMODAL_TABLEAU_HPP
#define BIMODAL_TABLEAU_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bimodal/bitset.hpp"
#include "bimodal/formula.hpp"
#include "bimodal/relations.hpp"

namespace bimodal {

enum class Logic { K4xS5, S4xS5, SSL };

std::string_view logic_name(Logic x);          // "k4s5" | "s4s5" | "ssl"
std::optional<Logic> logic_from_name(std::string_view name);

/// Tableau-set conditions over a subformula table:
///   (a) ~chi in F  iff  chi not in F
///   (b) (chi1 & chi2) in F  iff  both children in F
///   (c) K chi in F  implies  chi in F
///   (d) [] chi in F  implies  chi in F   (S4xS5 and SSL only)
bool is_tableau_set(const Bitset& bits, const SubformulaTable& table, Logic x);

/// F can-be-successor-of test between tableau-sets:
///   K4xS5: F cap Box-formulas subseteq G  and  {chi : []chi in F} subseteq G
///   S4xS5: F cap Box-formulas subseteq G
///   SSL:   F cap Box-formulas subseteq G  and  F cap atoms = G cap atoms
bool set_successor(const Bitset& f, const Bitset& g, const SubformulaTable& table, Logic x);

/// All tableau-sets for (phi, X) in ascending bitstring order (the string
/// s_1...s_a with s_i = membership of subformula i-1, compared with s_1 as
/// the most significant position), with per-set projections and the
/// successor matrix precomputed.
struct TableauUniverse {
    SubformulaTable table;
    Logic logic;
    std::vector<Bitset> sets;     // width a
    std::vector<Bitset> proj_k;   // F cap L_K
    std::vector<Bitset> proj_box; // F cap L_Box
    std::vector<Bitset> proj_at;  // F cap AT
    std::vector<Bitset> unboxed;  // {chi : []chi in F}
    std::vector<Bitset> succ;     // width A: succ[i] = {j : set i precedes set j}
    std::vector<Bitset> pred;     // width A: pred[j] = {i : set i precedes set j}
    Bitset phi_members;           // width A: sets containing the root formula

    std::size_t size() const { return sets.size(); }
    /// Index of a tableau-set bitset, or -1 if absent.
    int index_of(const Bitset& bits) const;
    bool le(std::size_t i, std::size_t j) const { return succ[i].test(j); }
};

TableauUniverse enumerate_tableau_sets(const SubformulaTable& table, Logic x);

/// Cloud conditions over a universe: nonempty, all members share the same
/// L_K projection, and common knowledge is introduced: if chi lies in the
/// intersection of all members and K chi in sf(phi), then K chi does too.
bool is_cloud(const Bitset& cloud, const TableauUniverse& u);

/// Cloud successor test:
///   backward: every G in g has some F in f with F set-precedes G
///   forward:  every F in f has some G in g with F set-precedes G
/// K4xS5/S4xS5 require both, SSL only the backward condition.
bool cloud_successor(const Bitset& f, const Bitset& g, const TableauUniverse& u);

/// Streams clouds in ascending bitstring order. The cursor is the current
/// A-bit string; memory per step is constant.
class CloudIterator {
public:
    using Filter = std::function<bool(const Bitset&)>;
    explicit CloudIterator(const TableauUniverse& u, Filter filter = nullptr);

    /// Next cloud passing is_cloud and the filter, or nullopt when done.
    std::optional<Bitset> next();

private:
    const TableauUniverse& u_;
    Filter filter_;
    std::uint64_t cursor_;
    std::uint64_t end_;
};

/// All clouds of the universe, in iterator order.
std::vector<Bitset> all_clouds(const TableauUniverse& u);

}  // namespace bimodal

#endif
