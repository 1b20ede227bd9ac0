#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

// Shared corpus generators for the unit and acceptance suites. All
// randomness goes through caller-provided mt19937 engines with fixed
// seeds so every run sees the same corpus.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bimodal/formula.hpp"
#include "bimodal/models.hpp"
#include "bimodal/relations.hpp"
#include "bimodal/tableau.hpp"

namespace support {

/// Renames variables to x0, x1, ... in order of first occurrence, so
/// formulas equal up to renaming get the same canonical form.
inline bimodal::FormulaPtr canonical_renaming(const bimodal::FormulaPtr& f) {
    std::map<std::string, unsigned long long> names;
    std::function<bimodal::FormulaPtr(const bimodal::FormulaPtr&)> walk =
        [&](const bimodal::FormulaPtr& g) -> bimodal::FormulaPtr {
        using F = bimodal::Formula;
        switch (g->kind) {
            case bimodal::Kind::Var: {
                auto it = names.find(g->var);
                if (it == names.end())
                    it = names.emplace(g->var, names.size()).first;
                return F::variable(it->second);
            }
            case bimodal::Kind::Neg:
                return F::neg(walk(g->left));
            case bimodal::Kind::And: {
                auto l = walk(g->left);
                return F::conj(std::move(l), walk(g->right));
            }
            case bimodal::Kind::Box:
                return F::box(walk(g->left));
            case bimodal::Kind::K:
                return F::know(walk(g->left));
        }
        return g;
    };
    return walk(f);
}

/// Every formula with at most 4 distinct subformulas, up to variable
/// renaming. Any such formula has AST height <= 3 (subformulas strictly
/// shrink along a path) and uses at most 2 distinct variables, so
/// enumerating all trees of height <= 3 over {x0, x1} is complete.
inline std::vector<bimodal::FormulaPtr> all_formulas_a_le4() {
    using F = bimodal::Formula;
    std::vector<bimodal::FormulaPtr> all{F::variable(0ULL), F::variable(1ULL)};
    for (int h = 1; h <= 3; ++h) {
        std::vector<bimodal::FormulaPtr> next;
        for (const auto& f : all) {
            next.push_back(F::neg(f));
            next.push_back(F::box(f));
            next.push_back(F::know(f));
        }
        for (const auto& f : all)
            for (const auto& g : all) next.push_back(F::conj(f, g));
        all.insert(all.end(), next.begin(), next.end());
        // Prune: wrapping only ever adds subformulas, so anything
        // already over 4 can be dropped. Dedupe by exact text here —
        // renaming-equivalent variants must survive as building blocks.
        std::vector<bimodal::FormulaPtr> kept;
        std::set<std::string> seen;
        for (const auto& f : all) {
            if (bimodal::subformulas(f).size() > 4) continue;
            if (seen.insert(bimodal::render(f)).second) kept.push_back(f);
        }
        all = std::move(kept);
    }
    std::vector<bimodal::FormulaPtr> out;
    std::set<std::string> seen;
    for (const auto& f : all) {
        auto canon = canonical_renaming(f);
        if (seen.insert(bimodal::render(canon)).second) out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return bimodal::render(a) < bimodal::render(b);
    });
    return out;
}

/// Random formula over `vars` variables with the given node budget.
inline bimodal::FormulaPtr random_formula(std::mt19937& rng, int nodes, int vars) {
    using F = bimodal::Formula;
    if (nodes <= 1) {
        std::uniform_int_distribution<int> v(0, vars - 1);
        return F::variable(static_cast<unsigned long long>(v(rng)));
    }
    std::uniform_int_distribution<int> k(0, nodes >= 3 ? 3 : 2);
    switch (k(rng)) {
        case 0: return F::neg(random_formula(rng, nodes - 1, vars));
        case 1: return F::box(random_formula(rng, nodes - 1, vars));
        case 2: return F::know(random_formula(rng, nodes - 1, vars));
        default: {
            std::uniform_int_distribution<int> split(1, nodes - 2);
            int l = split(rng);
            auto lhs = random_formula(rng, l, vars);
            return F::conj(std::move(lhs), random_formula(rng, nodes - 1 - l, vars));
        }
    }
}

/// Random formulas filtered to a simplified-length window and a cap on
/// the tableau-set count for the given logics (keeps the cloud space
/// searchable).
inline std::vector<bimodal::FormulaPtr> random_corpus(std::mt19937& rng, std::size_t count,
                                                      std::size_t min_ell, std::size_t max_ell,
                                                      std::size_t max_sets,
                                                      const std::vector<bimodal::Logic>& logics) {
    std::vector<bimodal::FormulaPtr> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        std::uniform_int_distribution<int> n(1, static_cast<int>(max_ell));
        auto f = random_formula(rng, n(rng), 2);
        auto len = bimodal::lengths(f);
        if (len.simplified < min_ell || len.simplified > max_ell) continue;
        if (!seen.insert(bimodal::render(f)).second) continue;
        bool small = true;
        for (bimodal::Logic x : logics)
            if (bimodal::enumerate_tableau_sets(bimodal::subformulas(f), x).size() > max_sets)
                small = false;
        if (!small) continue;
        out.push_back(std::move(f));
    }
    return out;
}

/// Transitive closure of a random relation.
inline bimodal::FiniteRelation random_transitive(std::mt19937& rng, std::size_t s,
                                                 double density = 0.3) {
    bimodal::FiniteRelation r(s);
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (edge(rng)) r.set(i, j);
    return r.transitive_closure();
}

/// Random equivalence relation from a random partition.
inline bimodal::FiniteRelation random_equivalence(std::mt19937& rng, std::size_t s) {
    std::vector<std::size_t> cls(s);
    std::uniform_int_distribution<std::size_t> c(0, s - 1);
    for (auto& v : cls) v = c(rng);
    bimodal::FiniteRelation e(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (cls[i] == cls[j]) e.set(i, j);
    return e;
}

/// Random model with at most max_worlds worlds that passes check_frame
/// for the logic (rejection sampling; the generators below bias towards
/// validity so rejection terminates fast at this scale).
inline bimodal::Model random_valid_model(std::mt19937& rng, bimodal::Logic x,
                                         std::size_t max_worlds, int vars = 2) {
    std::uniform_int_distribution<std::size_t> size_d(1, max_worlds);
    for (;;) {
        std::size_t s = size_d(rng);
        bimodal::Model m(s);
        bimodal::FiniteRelation d = random_transitive(rng, s, 0.35);
        if (x != bimodal::Logic::K4xS5)
            for (std::size_t i = 0; i < s; ++i) d.set(i, i);
        m.diamond = d;
        m.l_rel = random_equivalence(rng, s);

        // Persistence for SSL: atoms constant on weakly connected
        // diamond components.
        std::vector<std::size_t> comp(s);
        std::iota(comp.begin(), comp.end(), std::size_t{0});
        std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
            return comp[v] == v ? v : comp[v] = find(comp[v]);
        };
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (m.diamond.at(i, j)) comp[find(i)] = find(j);

        std::bernoulli_distribution bit(0.5);
        for (int v = 0; v < vars; ++v) {
            std::string numeral = bimodal::Formula::variable(
                static_cast<unsigned long long>(v))->var;
            std::map<std::size_t, bool> comp_val;
            for (std::size_t w = 0; w < s; ++w) {
                bool val;
                if (x == bimodal::Logic::SSL) {
                    auto [it, fresh] = comp_val.emplace(find(w), false);
                    if (fresh) it->second = bit(rng);
                    val = it->second;
                } else {
                    val = bit(rng);
                }
                if (val) m.valuation[numeral].insert(static_cast<int>(w));
            }
        }
        std::uniform_int_distribution<int> w(0, static_cast<int>(s) - 1);
        m.designated = w(rng);
        if (bimodal::check_frame(m, x).all_ok()) return m;
    }
}

}  // namespace support

#endif
