#include "bimodal/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace bimodal {

namespace {

/// Obligations of one cloud member: pairs (member index, chi index) for
/// each []chi in sf(phi) missing from the member's set.
struct Obligation {
    std::size_t f_idx;
    std::size_t chi_idx;
};

std::vector<Obligation> obligations(const Bitset& cloud, const TableauUniverse& u) {
    std::vector<Obligation> out;
    std::size_t a = u.table.size();
    cloud.for_each_set([&](std::size_t f_idx) {
        for (std::size_t k = 0; k < a; ++k)
            if (u.table.kinds[k] == Kind::Box && !u.sets[f_idx].test(k))
                out.push_back({f_idx, static_cast<std::size_t>(u.table.child0[k])});
    });
    return out;
}

bool cloud_discharges(const Bitset& cand, std::size_t f_idx, std::size_t chi_idx,
                      const TableauUniverse& u) {
    bool found = false;
    cand.for_each_set([&](std::size_t g) {
        if (!found && u.le(f_idx, g) && !u.sets[g].test(chi_idx)) found = true;
    });
    return found;
}

}  // namespace

bool verify_partial_tableau(const TableauUniverse& u, const std::vector<Bitset>& t,
                            const std::vector<Bitset>& seq) {
    if (seq.empty()) return false;
    for (const Bitset& c : t)
        if (!is_cloud(c, u)) return false;
    // Condition 1: the last sequence element belongs to t.
    if (std::find(t.begin(), t.end(), seq.back()) == t.end()) return false;

    // Condition 2, with the proper prefix of seq exempt.
    auto exempt_end = seq.end() - 1;
    for (const Bitset& c : t) {
        if (std::find(seq.begin(), exempt_end, c) != exempt_end) continue;
        for (const Obligation& ob : obligations(c, u)) {
            bool witnessed = false;
            for (const Bitset& d : t) {
                if (!cloud_successor(c, d, u)) continue;
                if (cloud_discharges(d, ob.f_idx, ob.chi_idx, u)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
    }
    return true;
}

bool exhaustive_search(const TableauUniverse& u) {
    std::vector<Bitset> clouds = all_clouds(u);
    std::size_t c = clouds.size();
    if (c > 15) throw TooLarge("cloud universe exceeds 15 clouds");

    // Witness masks: wit[i][k] = clouds that discharge obligation k of
    // cloud i. A subset is a partial tableau iff every member has every
    // witness mask intersect the subset.
    std::uint32_t phi_mask = 0;
    std::vector<std::vector<std::uint32_t>> wit(c);
    for (std::size_t i = 0; i < c; ++i) {
        if (clouds[i].intersects(u.phi_members)) phi_mask |= std::uint32_t{1} << i;
        for (const Obligation& ob : obligations(clouds[i], u)) {
            std::uint32_t w = 0;
            for (std::size_t j = 0; j < c; ++j)
                if (cloud_successor(clouds[i], clouds[j], u) &&
                    cloud_discharges(clouds[j], ob.f_idx, ob.chi_idx, u))
                    w |= std::uint32_t{1} << j;
            wit[i].push_back(w);
        }
    }
    if (!phi_mask) return false;

    std::uint32_t limit = std::uint32_t{1} << c;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        if (!(mask & phi_mask)) continue;
        bool valid = true;
        for (std::size_t i = 0; i < c && valid; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::uint32_t w : wit[i])
                if (!(w & mask)) {
                    valid = false;
                    break;
                }
        }
        if (!valid) continue;
        // Confirm the candidate with the literal definition.
        std::vector<Bitset> t;
        std::size_t f0 = SIZE_MAX;
        for (std::size_t i = 0; i < c; ++i)
            if (mask >> i & 1) {
                if (f0 == SIZE_MAX && (phi_mask >> i & 1)) f0 = i;
                t.push_back(clouds[i]);
            }
        if (verify_partial_tableau(u, t, {clouds[f0]})) return true;
    }
    return false;
}

bool exhaustive_search(const FormulaPtr& f, Logic x) {
    return exhaustive_search(enumerate_tableau_sets(subformulas(f), x));
}

bool eliminate_search(const TableauUniverse& u) {
    std::vector<Bitset> alive = all_clouds(u);
    if (alive.size() > 20000) throw TooLarge("cloud universe exceeds 20000 clouds");
    std::vector<std::vector<Obligation>> obs;
    obs.reserve(alive.size());
    for (const Bitset& c : alive) obs.push_back(obligations(c, u));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < alive.size();) {
            bool ok = true;
            for (const Obligation& ob : obs[i]) {
                bool witnessed = false;
                for (std::size_t j = 0; j < alive.size() && !witnessed; ++j)
                    if (cloud_successor(alive[i], alive[j], u) &&
                        cloud_discharges(alive[j], ob.f_idx, ob.chi_idx, u))
                        witnessed = true;
                if (!witnessed) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++i;
            } else {
                alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i));
                obs.erase(obs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            }
        }
    }
    for (const Bitset& c : alive)
        if (c.intersects(u.phi_members)) return true;
    return false;
}

bool eliminate_search(const FormulaPtr& f, Logic x) {
    return eliminate_search(enumerate_tableau_sets(subformulas(f), x));
}

}  // namespace bimodal
