#ifndef BIMODAL_RELATIONS_HPP
#define BIMODAL_RELATIONS_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bimodal {

struct NotTransitive : std::runtime_error {
    NotTransitive() : std::runtime_error("relation is not transitive") {}
};
struct NotEquivalence : std::runtime_error {
    NotEquivalence() : std::runtime_error("relation is not an equivalence") {}
};
struct UniverseTooLarge : std::runtime_error {
    explicit UniverseTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

/// Binary relation on {0,...,s-1}, stored as an s x s adjacency matrix.
class FiniteRelation {
public:
    explicit FiniteRelation(std::size_t s) : s_(s), adj_(s * s, false) {}

    static FiniteRelation identity(std::size_t s) {
        FiniteRelation r(s);
        for (std::size_t i = 0; i < s; ++i) r.set(i, i);
        return r;
    }

    static FiniteRelation from_pairs(std::size_t s,
                                     std::initializer_list<std::pair<int, int>> pairs) {
        FiniteRelation r(s);
        for (auto [i, j] : pairs) r.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        return r;
    }

    std::size_t size() const { return s_; }
    bool at(std::size_t i, std::size_t j) const { return adj_[i * s_ + j]; }
    void set(std::size_t i, std::size_t j, bool v = true) { adj_[i * s_ + j] = v; }

    bool reflexive() const;
    bool transitive() const;
    bool symmetric() const;

    FiniteRelation inverse() const;
    FiniteRelation intersect(const FiniteRelation& o) const;
    FiniteRelation transitive_closure() const;

    bool operator==(const FiniteRelation& o) const { return s_ == o.s_ && adj_ == o.adj_; }

private:
    std::size_t s_;
    std::vector<bool> adj_;
};

struct RelationClassification {
    bool reflexive;
    bool transitive;
    bool symmetric;
};

RelationClassification classify(const FiniteRelation& r);

/// s < t :iff s <= t and not t <= s.
FiniteRelation strict_part(const FiniteRelation& r);

/// Maximum chain length of a transitive relation; throws NotTransitive.
std::size_t mcl(const FiniteRelation& r);

/// s == t :iff s = t or (s <= t and t <= s), for transitive r.
FiniteRelation derived_equivalence(const FiniteRelation& r);

/// Equivalence classes ordered by least member; throws NotEquivalence.
std::vector<std::vector<std::size_t>> equivalence_classes(const FiniteRelation& e);

/// Relation induced on the classes of e: C R D iff some w in C, v in D with w R v.
FiniteRelation quotient(const FiniteRelation& r, const FiniteRelation& e);

/// Lifted relation on all subsets of the universe (subset index = bitmask):
/// A <=' B iff every b in B has some a in A with a <= b. Universe capped at 5.
FiniteRelation lift_powerset(const FiniteRelation& r);

bool left_commutative(const FiniteRelation& r, const FiniteRelation& e);
bool right_commutative(const FiniteRelation& r, const FiniteRelation& e);

}  // namespace bimodal

#endif
