#include "bimodal/tableau.hpp"

#include <unordered_map>

namespace bimodal {

std::string_view logic_name(Logic x) {
    switch (x) {
        case Logic::K4xS5: return "k4s5";
        case Logic::S4xS5: return "s4s5";
        case Logic::SSL: return "ssl";
    }
    return "";
}

std::optional<Logic> logic_from_name(std::string_view name) {
    if (name == "k4s5") return Logic::K4xS5;
    if (name == "s4s5") return Logic::S4xS5;
    if (name == "ssl") return Logic::SSL;
    return std::nullopt;
}

bool is_tableau_set(const Bitset& bits, const SubformulaTable& table, Logic x) {
    std::size_t a = table.size();
    for (std::size_t i = 0; i < a; ++i) {
        switch (table.kinds[i]) {
            case Kind::Neg:
                if (bits.test(i) == bits.test(static_cast<std::size_t>(table.child0[i])))
                    return false;
                break;
            case Kind::And:
                if (bits.test(i) != (bits.test(static_cast<std::size_t>(table.child0[i])) &&
                                     bits.test(static_cast<std::size_t>(table.child1[i]))))
                    return false;
                break;
            case Kind::K:
                if (bits.test(i) && !bits.test(static_cast<std::size_t>(table.child0[i])))
                    return false;
                break;
            case Kind::Box:
                if (x != Logic::K4xS5 && bits.test(i) &&
                    !bits.test(static_cast<std::size_t>(table.child0[i])))
                    return false;
                break;
            case Kind::Var:
                break;
        }
    }
    return true;
}

bool set_successor(const Bitset& f, const Bitset& g, const SubformulaTable& table, Logic x) {
    if (!(f & table.mask_box).subset_of(g)) return false;
    switch (x) {
        case Logic::K4xS5: {
            std::size_t a = table.size();
            for (std::size_t i = 0; i < a; ++i)
                if (table.kinds[i] == Kind::Box && f.test(i) &&
                    !g.test(static_cast<std::size_t>(table.child0[i])))
                    return false;
            return true;
        }
        case Logic::S4xS5:
            return true;
        case Logic::SSL:
            return (f & table.mask_at) == (g & table.mask_at);
    }
    return false;
}

int TableauUniverse::index_of(const Bitset& bits) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == bits) return static_cast<int>(i);
    return -1;
}

TableauUniverse enumerate_tableau_sets(const SubformulaTable& table, Logic x) {
    std::size_t a = table.size();
    if (a > 24) throw UniverseTooLarge("too many subformulas for exhaustive enumeration");
    TableauUniverse u;
    u.table = table;
    u.logic = x;

    // Ascending order of the strings s_1...s_a: counting with s_1 as the
    // most significant position.
    std::uint64_t limit = std::uint64_t{1} << a;
    for (std::uint64_t v = 0; v < limit; ++v) {
        Bitset bits(a);
        for (std::size_t i = 0; i < a; ++i)
            if (v >> (a - 1 - i) & 1) bits.set(i);
        if (is_tableau_set(bits, table, x)) u.sets.push_back(std::move(bits));
    }

    std::size_t A = u.sets.size();
    int root = static_cast<int>(a) - 1;
    u.phi_members = Bitset(A);
    for (std::size_t i = 0; i < A; ++i) {
        const Bitset& f = u.sets[i];
        u.proj_k.push_back(f & table.mask_k);
        u.proj_box.push_back(f & table.mask_box);
        u.proj_at.push_back(f & table.mask_at);
        Bitset ub(a);
        for (std::size_t k = 0; k < a; ++k)
            if (table.kinds[k] == Kind::Box && f.test(k))
                ub.set(static_cast<std::size_t>(table.child0[k]));
        u.unboxed.push_back(std::move(ub));
        if (f.test(static_cast<std::size_t>(root))) u.phi_members.set(i);
    }

    u.succ.assign(A, Bitset(A));
    u.pred.assign(A, Bitset(A));
    for (std::size_t i = 0; i < A; ++i)
        for (std::size_t j = 0; j < A; ++j)
            if (set_successor(u.sets[i], u.sets[j], table, x)) {
                u.succ[i].set(j);
                u.pred[j].set(i);
            }
    return u;
}

bool is_cloud(const Bitset& cloud, const TableauUniverse& u) {
    if (cloud.none()) return false;
    std::size_t first = cloud.next_set(0);
    const Bitset& ref = u.proj_k[first];
    Bitset common = u.sets[first];
    bool ok = true;
    cloud.for_each_set([&](std::size_t i) {
        if (u.proj_k[i] != ref) ok = false;
        common = common & u.sets[i];
    });
    if (!ok) return false;
    // Common knowledge introduction.
    std::size_t a = u.table.size();
    for (std::size_t k = 0; k < a; ++k)
        if (u.table.kinds[k] == Kind::K &&
            common.test(static_cast<std::size_t>(u.table.child0[k])) && !common.test(k))
            return false;
    return true;
}

bool cloud_successor(const Bitset& f, const Bitset& g, const TableauUniverse& u) {
    bool ok = true;
    g.for_each_set([&](std::size_t j) {
        if (!u.pred[j].intersects(f)) ok = false;
    });
    if (!ok) return false;
    if (u.logic == Logic::SSL) return true;
    f.for_each_set([&](std::size_t i) {
        if (!u.succ[i].intersects(g)) ok = false;
    });
    return ok;
}

CloudIterator::CloudIterator(const TableauUniverse& u, Filter filter)
    : u_(u), filter_(std::move(filter)), cursor_(0) {
    std::size_t A = u.size();
    if (A > 62) throw UniverseTooLarge("too many tableau-sets for cloud enumeration");
    end_ = std::uint64_t{1} << A;
}

std::optional<Bitset> CloudIterator::next() {
    std::size_t A = u_.size();
    while (++cursor_ < end_) {
        Bitset c(A);
        for (std::size_t i = 0; i < A; ++i)
            if (cursor_ >> (A - 1 - i) & 1) c.set(i);
        if (!is_cloud(c, u_)) continue;
        if (filter_ && !filter_(c)) continue;
        return c;
    }
    return std::nullopt;
}

std::vector<Bitset> all_clouds(const TableauUniverse& u) {
    std::vector<Bitset> out;
    CloudIterator it(u);
    while (auto c = it.next()) out.push_back(std::move(*c));
    return out;
}

}  // namespace bimodal
