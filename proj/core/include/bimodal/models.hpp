#ifndef BIMODAL_MODELS_HPP
#define BIMODAL_MODELS_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/formula.hpp"
#include "bimodal/relations.hpp"
#include "bimodal/solver.hpp"
#include "bimodal/tableau.hpp"

namespace bimodal {

struct UnknownWorld : std::runtime_error {
    UnknownWorld() : std::runtime_error("world index out of range") {}
};
struct InvalidTableau : std::runtime_error {
    InvalidTableau() : std::runtime_error("not a valid partial tableau") {}
};
struct InvalidFrame : std::runtime_error {
    InvalidFrame() : std::runtime_error("model violates its frame conditions") {}
};
struct ModelFormatError : std::runtime_error {
    explicit ModelFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Finite commutator / cross-axiom model. Worlds built from a tableau carry
/// their (cloud index, tableau-set index) provenance; hand-built worlds
/// leave it at (-1, -1).
struct Model {
    FiniteRelation diamond;
    FiniteRelation l_rel;
    std::map<std::string, std::set<int>> valuation;  // variable numeral -> worlds
    std::vector<std::pair<int, int>> provenance;
    int designated = 0;

    explicit Model(std::size_t worlds)
        : diamond(worlds), l_rel(worlds), provenance(worlds, {-1, -1}) {}
    std::size_t size() const { return diamond.size(); }
};

struct FrameProperty {
    std::string name;
    bool ok;
    std::array<int, 3> witness;  // counterexample worlds, -1 padded
};

struct FrameReport {
    std::vector<FrameProperty> properties;
    bool all_ok() const {
        for (const auto& p : properties)
            if (!p.ok) return false;
        return true;
    }
};

/// Checks every frame obligation of the logic; reports all violations.
FrameReport check_frame(const Model& m, Logic x);

bool model_check(const Model& m, int world, const FormulaPtr& f);

/// Truth values of every table entry at every world (worlds x a).
std::vector<std::vector<bool>> truth_table(const Model& m, const SubformulaTable& table);

/// Model built from an accepting tableau: worlds are (cloud, member) pairs.
Model model_from_tableau(const TableauUniverse& u, const PartialTableau& t);

/// Satisfied-subformula extraction from a valid model: for each world v
/// the set sat(v) of true table entries, grouped into one cloud per
/// L-class, plus the cloud of the given world. Clouds index into the
/// returned universe. The model must pass check_frame for the logic.
struct ExtractedTableau {
    TableauUniverse universe;
    std::vector<Bitset> clouds;
    Bitset initial;
};
ExtractedTableau tableau_from_model(const Model& m, const FormulaPtr& f, Logic x, int world);

std::string model_to_json(const Model& m, Logic x);
std::pair<Model, Logic> model_from_json(const std::string& text);

}  // namespace bimodal

#endif
