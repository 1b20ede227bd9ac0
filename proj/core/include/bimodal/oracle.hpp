#ifndef BIMODAL_ORACLE_HPP
#define BIMODAL_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "bimodal/formula.hpp"
#include "bimodal/tableau.hpp"

namespace bimodal {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

/// Literal check of the partial-tableau conditions for (t, seq):
///   1. every member of t is a cloud, seq is nonempty and its last
///      element lies in t;
///   2. for every cloud C in t outside the exempt prefix
///      {seq[0], ..., seq[m-1]}, every member F of C and every []chi
///      in sf(phi) with []chi not in F has a witness: some D in t with
///      C <= D and some G in D with F set-preceding G and chi not in G.
/// All quantifiers are evaluated by direct enumeration.
bool verify_partial_tableau(const TableauUniverse& u, const std::vector<Bitset>& t,
                            const std::vector<Bitset>& seq);

/// Ground truth by enumerating every subset of the cloud universe and
/// every initial cloud containing a set with phi; throws TooLarge when
/// the universe has more than 15 clouds.
bool exhaustive_search(const TableauUniverse& u);
bool exhaustive_search(const FormulaPtr& f, Logic x);

/// Independent ground truth by greatest-fixpoint elimination: starting
/// from all clouds, repeatedly drop any cloud with an undischargeable
/// obligation; satisfiable iff the fixpoint keeps a cloud containing a
/// set with phi. Agrees with exhaustive_search but scales further.
bool eliminate_search(const TableauUniverse& u);
bool eliminate_search(const FormulaPtr& f, Logic x);

}  // namespace bimodal

#endif
