#include "bimodal/models.hpp"

#include <algorithm>
#include <unordered_map>

#include "bimodal/oracle.hpp"

#include "json.hpp"

namespace bimodal {

namespace {

bool world_true(const Model& m, const std::string& numeral, int w) {
    auto it = m.valuation.find(numeral);
    return it != m.valuation.end() && it->second.count(w) > 0;
}

}  // namespace

FrameReport check_frame(const Model& m, Logic x) {
    FrameReport rep;
    auto add = [&](const char* name, bool ok, int a = -1, int b = -1, int c = -1) {
        rep.properties.push_back({name, ok, {a, b, c}});
    };
    int s = static_cast<int>(m.size());

    add("worlds nonempty", s > 0);

    {
        bool ok = true;
        int wa = -1;
        for (int w = 0; w < s && ok; ++w)
            if (!m.l_rel.at(w, w)) {
                ok = false;
                wa = w;
            }
        add("L reflexive", ok, wa);
    }
    {
        bool ok = true;
        int wa = -1, wb = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int v = 0; v < s && ok; ++v)
                if (m.l_rel.at(w, v) && !m.l_rel.at(v, w)) {
                    ok = false;
                    wa = w;
                    wb = v;
                }
        add("L symmetric", ok, wa, wb);
    }
    {
        bool ok = true;
        int wa = -1, wb = -1, wc = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int v = 0; v < s && ok; ++v)
                for (int u = 0; u < s && ok; ++u)
                    if (m.l_rel.at(w, v) && m.l_rel.at(v, u) && !m.l_rel.at(w, u)) {
                        ok = false;
                        wa = w;
                        wb = v;
                        wc = u;
                    }
        add("L transitive", ok, wa, wb, wc);
    }
    {
        bool ok = true;
        int wa = -1, wb = -1, wc = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int v = 0; v < s && ok; ++v)
                for (int u = 0; u < s && ok; ++u)
                    if (m.diamond.at(w, v) && m.diamond.at(v, u) && !m.diamond.at(w, u)) {
                        ok = false;
                        wa = w;
                        wb = v;
                        wc = u;
                    }
        add("diamond transitive", ok, wa, wb, wc);
    }
    if (x != Logic::K4xS5) {
        bool ok = true;
        int wa = -1;
        for (int w = 0; w < s && ok; ++w)
            if (!m.diamond.at(w, w)) {
                ok = false;
                wa = w;
            }
        add("diamond reflexive", ok, wa);
    }
    {
        bool ok = true;
        int wa = -1, wb = -1, wc = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int u = 0; u < s && ok; ++u) {
                if (!m.diamond.at(w, u)) continue;
                for (int u2 = 0; u2 < s && ok; ++u2) {
                    if (!m.l_rel.at(u, u2)) continue;
                    bool found = false;
                    for (int w2 = 0; w2 < s && !found; ++w2)
                        if (m.l_rel.at(w, w2) && m.diamond.at(w2, u2)) found = true;
                    if (!found) {
                        ok = false;
                        wa = w;
                        wb = u;
                        wc = u2;
                    }
                }
            }
        add("left commutativity", ok, wa, wb, wc);
    }
    if (x != Logic::SSL) {
        bool ok = true;
        int wa = -1, wb = -1, wc = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int w2 = 0; w2 < s && ok; ++w2) {
                if (!m.l_rel.at(w, w2)) continue;
                for (int u2 = 0; u2 < s && ok; ++u2) {
                    if (!m.diamond.at(w2, u2)) continue;
                    bool found = false;
                    for (int u = 0; u < s && !found; ++u)
                        if (m.diamond.at(w, u) && m.l_rel.at(u, u2)) found = true;
                    if (!found) {
                        ok = false;
                        wa = w;
                        wb = w2;
                        wc = u2;
                    }
                }
            }
        add("right commutativity", ok, wa, wb, wc);
    }
    if (x == Logic::SSL) {
        bool ok = true;
        int wa = -1, wb = -1;
        for (int w = 0; w < s && ok; ++w)
            for (int v = 0; v < s && ok; ++v) {
                if (!m.diamond.at(w, v)) continue;
                for (const auto& [numeral, worlds] : m.valuation)
                    if ((worlds.count(w) > 0) != (worlds.count(v) > 0)) {
                        ok = false;
                        wa = w;
                        wb = v;
                        break;
                    }
            }
        add("persistence", ok, wa, wb);
    }
    return rep;
}

namespace {

bool check_rec(const Model& m, int w, const Formula* f,
               std::unordered_map<const Formula*, std::vector<signed char>>& memo) {
    auto& cache = memo[f];
    if (cache.empty()) cache.assign(m.size(), -1);
    signed char& slot = cache[static_cast<std::size_t>(w)];
    if (slot >= 0) return slot != 0;

    bool v = false;
    int s = static_cast<int>(m.size());
    switch (f->kind) {
        case Kind::Var:
            v = world_true(m, f->var, w);
            break;
        case Kind::Neg:
            v = !check_rec(m, w, f->left.get(), memo);
            break;
        case Kind::And:
            v = check_rec(m, w, f->left.get(), memo) && check_rec(m, w, f->right.get(), memo);
            break;
        case Kind::Box:
            v = true;
            for (int u = 0; u < s && v; ++u)
                if (m.diamond.at(w, u) && !check_rec(m, u, f->left.get(), memo)) v = false;
            break;
        case Kind::K:
            v = true;
            for (int u = 0; u < s && v; ++u)
                if (m.l_rel.at(w, u) && !check_rec(m, u, f->left.get(), memo)) v = false;
            break;
    }
    slot = v ? 1 : 0;
    return v;
}

}  // namespace

bool model_check(const Model& m, int world, const FormulaPtr& f) {
    if (world < 0 || static_cast<std::size_t>(world) >= m.size()) throw UnknownWorld();
    std::unordered_map<const Formula*, std::vector<signed char>> memo;
    return check_rec(m, world, f.get(), memo);
}

std::vector<std::vector<bool>> truth_table(const Model& m, const SubformulaTable& table) {
    std::size_t s = m.size();
    std::size_t a = table.size();
    std::vector<std::vector<bool>> tt(s, std::vector<bool>(a, false));
    // Subformula-major: modal clauses read their child's value at every
    // world, so each entry must be complete across all worlds first.
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t w = 0; w < s; ++w) {
            bool v = false;
            switch (table.kinds[i]) {
                case Kind::Var:
                    v = world_true(m, table.formulas[i]->var, static_cast<int>(w));
                    break;
                case Kind::Neg:
                    v = !tt[w][static_cast<std::size_t>(table.child0[i])];
                    break;
                case Kind::And:
                    v = tt[w][static_cast<std::size_t>(table.child0[i])] &&
                        tt[w][static_cast<std::size_t>(table.child1[i])];
                    break;
                case Kind::Box:
                    v = true;
                    for (std::size_t u = 0; u < s && v; ++u)
                        if (m.diamond.at(w, u) && !tt[u][static_cast<std::size_t>(table.child0[i])])
                            v = false;
                    break;
                case Kind::K:
                    v = true;
                    for (std::size_t u = 0; u < s && v; ++u)
                        if (m.l_rel.at(w, u) && !tt[u][static_cast<std::size_t>(table.child0[i])])
                            v = false;
                    break;
            }
            tt[w][i] = v;
        }
    return tt;
}

Model model_from_tableau(const TableauUniverse& u, const PartialTableau& t) {
    if (!verify_partial_tableau(u, t.clouds, {t.initial})) throw InvalidTableau();

    // Worlds are (cloud index in t.clouds, tableau-set index) pairs, in
    // cloud-major order.
    std::vector<std::pair<int, int>> worlds;
    for (std::size_t c = 0; c < t.clouds.size(); ++c)
        t.clouds[c].for_each_set([&](std::size_t s) {
            worlds.emplace_back(static_cast<int>(c), static_cast<int>(s));
        });

    Model m(worlds.size());
    m.provenance = worlds;
    for (std::size_t i = 0; i < worlds.size(); ++i)
        for (std::size_t j = 0; j < worlds.size(); ++j) {
            auto [ci, si] = worlds[i];
            auto [cj, sj] = worlds[j];
            if (ci == cj) m.l_rel.set(i, j);
            if (cloud_successor(t.clouds[static_cast<std::size_t>(ci)],
                                t.clouds[static_cast<std::size_t>(cj)], u) &&
                u.le(static_cast<std::size_t>(si), static_cast<std::size_t>(sj)))
                m.diamond.set(i, j);
        }

    std::size_t a = u.table.size();
    for (std::size_t k = 0; k < a; ++k) {
        if (u.table.kinds[k] != Kind::Var) continue;
        std::set<int>& worlds_of = m.valuation[u.table.formulas[k]->var];
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (u.sets[static_cast<std::size_t>(worlds[i].second)].test(k))
                worlds_of.insert(static_cast<int>(i));
    }

    int init_cloud = static_cast<int>(
        std::find(t.clouds.begin(), t.clouds.end(), t.initial) - t.clouds.begin());
    int init_set = u.index_of(t.designated_set);
    for (std::size_t i = 0; i < worlds.size(); ++i)
        if (worlds[i] == std::make_pair(init_cloud, init_set)) {
            m.designated = static_cast<int>(i);
            break;
        }
    return m;
}

ExtractedTableau tableau_from_model(const Model& m, const FormulaPtr& f, Logic x, int world) {
    if (world < 0 || static_cast<std::size_t>(world) >= m.size()) throw UnknownWorld();
    if (!check_frame(m, x).all_ok()) throw InvalidFrame();

    ExtractedTableau out;
    out.universe = enumerate_tableau_sets(subformulas(f), x);
    const TableauUniverse& u = out.universe;
    std::size_t a = u.table.size();
    std::size_t A = u.size();

    auto tt = truth_table(m, u.table);
    std::vector<std::size_t> sat_idx(m.size());
    for (std::size_t w = 0; w < m.size(); ++w) {
        Bitset sat(a);
        for (std::size_t i = 0; i < a; ++i)
            if (tt[w][i]) sat.set(i);
        int idx = u.index_of(sat);
        if (idx < 0) throw InvalidFrame();
        sat_idx[w] = static_cast<std::size_t>(idx);
    }

    // One cloud per L-class, ordered by least class member.
    auto classes = equivalence_classes(m.l_rel);
    Bitset initial(A);
    for (const auto& cls : classes) {
        Bitset cloud(A);
        for (std::size_t w : cls) cloud.set(sat_idx[w]);
        bool of_world = std::find(cls.begin(), cls.end(),
                                  static_cast<std::size_t>(world)) != cls.end();
        if (of_world) initial = cloud;
        if (std::find(out.clouds.begin(), out.clouds.end(), cloud) == out.clouds.end())
            out.clouds.push_back(cloud);
    }
    out.initial = initial;
    return out;
}

std::string model_to_json(const Model& m, Logic x) {
    nlohmann::json j;
    j["logic"] = std::string(logic_name(x));
    j["worlds"] = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        j["worlds"].push_back({{"id", i},
                               {"cloud", m.provenance[i].first},
                               {"set", m.provenance[i].second}});
    j["diamond"] = nlohmann::json::array();
    j["L"] = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m.diamond.at(i, k)) j["diamond"].push_back({i, k});
            if (m.l_rel.at(i, k)) j["L"].push_back({i, k});
        }
    j["valuation"] = nlohmann::json::object();
    for (const auto& [numeral, worlds] : m.valuation)
        j["valuation"][numeral] = std::vector<int>(worlds.begin(), worlds.end());
    j["designated"] = m.designated;
    return j.dump(2) + "\n";
}

std::pair<Model, Logic> model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelFormatError(e.what());
    }
    try {
        auto logic = logic_from_name(j.at("logic").get<std::string>());
        if (!logic) throw ModelFormatError("unknown logic name");
        const auto& worlds = j.at("worlds");
        if (!worlds.is_array() || worlds.empty())
            throw ModelFormatError("worlds must be a nonempty array");
        std::size_t s = worlds.size();
        Model m(s);
        for (const auto& w : worlds) {
            auto id = w.at("id").get<std::size_t>();
            if (id >= s) throw ModelFormatError("world id out of range");
            m.provenance[id] = {w.value("cloud", -1), w.value("set", -1)};
        }
        auto read_rel = [&](const char* key, FiniteRelation& rel) {
            for (const auto& pair : j.at(key)) {
                auto a = pair.at(0).get<std::size_t>();
                auto b = pair.at(1).get<std::size_t>();
                if (a >= s || b >= s) throw ModelFormatError("relation index out of range");
                rel.set(a, b);
            }
        };
        read_rel("diamond", m.diamond);
        read_rel("L", m.l_rel);
        for (const auto& [numeral, ids] : j.at("valuation").items()) {
            std::set<int>& ws = m.valuation[numeral];
            for (const auto& id : ids) {
                auto v = id.get<std::size_t>();
                if (v >= s) throw ModelFormatError("valuation world out of range");
                ws.insert(static_cast<int>(v));
            }
        }
        m.designated = j.value("designated", 0);
        if (m.designated < 0 || static_cast<std::size_t>(m.designated) >= s)
            throw ModelFormatError("designated world out of range");
        return {std::move(m), *logic};
    } catch (const nlohmann::json::exception& e) {
        throw ModelFormatError(e.what());
    }
}

}  // namespace bimodal
