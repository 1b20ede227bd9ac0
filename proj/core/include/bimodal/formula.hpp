#ifndef BIMODAL_FORMULA_HPP
#define BIMODAL_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bimodal/bitset.hpp"

namespace bimodal {

/// Node kinds of a bimodal formula. And is the only binary node.
enum class Kind { Var, Neg, And, Box, K };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node. Variables carry their binary numeral (no leading
/// zeros except the single numeral "0"), so arbitrarily long identifiers
/// are exact.
class Formula {
public:
    Kind kind;
    std::string var;     // Var only: binary numeral
    FormulaPtr left;     // Neg/Box/K child, And left child
    FormulaPtr right;    // And right child

    static FormulaPtr variable(std::string numeral);
    static FormulaPtr variable(unsigned long long id);
    static FormulaPtr neg(FormulaPtr f);
    static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
    static FormulaPtr box(FormulaPtr f);
    static FormulaPtr know(FormulaPtr f);

private:
    Formula(Kind k, std::string v, FormulaPtr l, FormulaPtr r)
        : kind(k), var(std::move(v)), left(std::move(l)), right(std::move(r)) {}
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Canonical fully parenthesized primitive-only form, e.g. "(x1 & ~x1)".
std::string render(const FormulaPtr& f);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parses the surface grammar, desugaring | -> <-> L <> into the
/// primitives ~ & K [].
FormulaPtr parse(std::string_view text);

struct Lengths {
    std::size_t symbols;     // n: symbol count over {(,),~,&,[],K,x,0,1}
    std::size_t simplified;  // ell: symbols other than binary digits
};

Lengths lengths(const FormulaPtr& f);

/// Deterministic indexed subformula closure. Order is post-order traversal
/// of the AST with first-occurrence deduplication, so children always have
/// smaller indices and the root formula sits at index size()-1.
struct SubformulaTable {
    std::vector<FormulaPtr> formulas;
    std::vector<Kind> kinds;
    std::vector<int> child0;  // Neg/Box/K child, And left; -1 for Var
    std::vector<int> child1;  // And right; -1 otherwise
    std::unordered_map<std::string, int> index;  // render -> index

    Bitset mask_at;   // atoms
    Bitset mask_box;  // top node Box
    Bitset mask_k;    // top node K

    std::size_t size() const { return formulas.size(); }
    int index_of(const FormulaPtr& f) const;
};

SubformulaTable subformulas(const FormulaPtr& f);

}  // namespace bimodal

#endif
