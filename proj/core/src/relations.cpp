#include "bimodal/relations.hpp"

#include <functional>

namespace bimodal {

bool FiniteRelation::reflexive() const {
    for (std::size_t i = 0; i < s_; ++i)
        if (!at(i, i)) return false;
    return true;
}

bool FiniteRelation::transitive() const {
    for (std::size_t i = 0; i < s_; ++i)
        for (std::size_t j = 0; j < s_; ++j) {
            if (!at(i, j)) continue;
            for (std::size_t k = 0; k < s_; ++k)
                if (at(j, k) && !at(i, k)) return false;
        }
    return true;
}

bool FiniteRelation::symmetric() const {
    for (std::size_t i = 0; i < s_; ++i)
        for (std::size_t j = 0; j < s_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

FiniteRelation FiniteRelation::inverse() const {
    FiniteRelation r(s_);
    for (std::size_t i = 0; i < s_; ++i)
        for (std::size_t j = 0; j < s_; ++j)
            if (at(i, j)) r.set(j, i);
    return r;
}

FiniteRelation FiniteRelation::intersect(const FiniteRelation& o) const {
    FiniteRelation r(s_);
    for (std::size_t i = 0; i < s_; ++i)
        for (std::size_t j = 0; j < s_; ++j)
            if (at(i, j) && o.at(i, j)) r.set(i, j);
    return r;
}

FiniteRelation FiniteRelation::transitive_closure() const {
    FiniteRelation r = *this;
    for (std::size_t k = 0; k < s_; ++k)
        for (std::size_t i = 0; i < s_; ++i)
            if (r.at(i, k))
                for (std::size_t j = 0; j < s_; ++j)
                    if (r.at(k, j)) r.set(i, j);
    return r;
}

RelationClassification classify(const FiniteRelation& r) {
    return {r.reflexive(), r.transitive(), r.symmetric()};
}

FiniteRelation strict_part(const FiniteRelation& r) {
    std::size_t s = r.size();
    FiniteRelation out(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (r.at(i, j) && !r.at(j, i)) out.set(i, j);
    return out;
}

std::size_t mcl(const FiniteRelation& r) {
    if (!r.transitive()) throw NotTransitive();
    FiniteRelation st = strict_part(r);
    std::size_t s = r.size();
    // Strict part of a transitive relation is a transitive DAG, so a
    // memoized longest-path walk is exact.
    std::vector<std::size_t> best(s, SIZE_MAX);
    std::function<std::size_t(std::size_t)> walk = [&](std::size_t v) {
        if (best[v] != SIZE_MAX) return best[v];
        std::size_t m = 0;
        for (std::size_t w = 0; w < s; ++w)
            if (st.at(v, w)) m = std::max(m, walk(w) + 1);
        return best[v] = m;
    };
    std::size_t m = 0;
    for (std::size_t v = 0; v < s; ++v) m = std::max(m, walk(v));
    return m;
}

FiniteRelation derived_equivalence(const FiniteRelation& r) {
    std::size_t s = r.size();
    FiniteRelation e(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i == j || (r.at(i, j) && r.at(j, i))) e.set(i, j);
    return e;
}

std::vector<std::vector<std::size_t>> equivalence_classes(const FiniteRelation& e) {
    if (!e.reflexive() || !e.symmetric() || !e.transitive()) throw NotEquivalence();
    std::size_t s = e.size();
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> seen(s, false);
    for (std::size_t i = 0; i < s; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = i; j < s; ++j)
            if (e.at(i, j)) {
                cls.push_back(j);
                seen[j] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

FiniteRelation quotient(const FiniteRelation& r, const FiniteRelation& e) {
    auto classes = equivalence_classes(e);
    FiniteRelation out(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t d = 0; d < classes.size(); ++d)
            for (std::size_t w : classes[c]) {
                bool hit = false;
                for (std::size_t v : classes[d])
                    if (r.at(w, v)) {
                        hit = true;
                        break;
                    }
                if (hit) {
                    out.set(c, d);
                    break;
                }
            }
    return out;
}

FiniteRelation lift_powerset(const FiniteRelation& r) {
    if (!r.transitive()) throw NotTransitive();
    std::size_t s = r.size();
    if (s > 5) throw UniverseTooLarge("lift_powerset universe capped at 5 elements");
    std::size_t n = std::size_t{1} << s;
    FiniteRelation out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool ok = true;
            for (std::size_t y = 0; y < s && ok; ++y) {
                if (!(b >> y & 1)) continue;
                bool found = false;
                for (std::size_t x = 0; x < s && !found; ++x)
                    if ((a >> x & 1) && r.at(x, y)) found = true;
                ok = found;
            }
            if (ok) out.set(a, b);
        }
    return out;
}

bool left_commutative(const FiniteRelation& r, const FiniteRelation& e) {
    std::size_t s = r.size();
    for (std::size_t w = 0; w < s; ++w)
        for (std::size_t u = 0; u < s; ++u) {
            if (!r.at(w, u)) continue;
            for (std::size_t u2 = 0; u2 < s; ++u2) {
                if (!e.at(u, u2)) continue;
                bool found = false;
                for (std::size_t w2 = 0; w2 < s && !found; ++w2)
                    if (e.at(w, w2) && r.at(w2, u2)) found = true;
                if (!found) return false;
            }
        }
    return true;
}

bool right_commutative(const FiniteRelation& r, const FiniteRelation& e) {
    std::size_t s = r.size();
    for (std::size_t w = 0; w < s; ++w)
        for (std::size_t w2 = 0; w2 < s; ++w2) {
            if (!e.at(w, w2)) continue;
            for (std::size_t u2 = 0; u2 < s; ++u2) {
                if (!r.at(w2, u2)) continue;
                bool found = false;
                for (std::size_t u = 0; u < s && !found; ++u)
                    if (r.at(w, u) && e.at(u, u2)) found = true;
                if (!found) return false;
            }
        }
    return true;
}

}  // namespace bimodal
