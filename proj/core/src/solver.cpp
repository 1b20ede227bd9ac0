#include "bimodal/solver.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace bimodal {

std::size_t recursion_depth_bound(std::size_t n, std::size_t A) { return 5 * n * A * A; }

namespace {

struct Run {
    const TableauUniverse& u;
    const SearchOptions& opts;
    SearchStats& stats;
    std::vector<Bitset> clouds;               // ascending bitstring order
    std::vector<std::size_t> box_indices;     // Box formulas of sf(phi)
    std::size_t depth_limit;
    std::unordered_map<std::string, bool> memo;

    Run(const TableauUniverse& u_, const SearchOptions& opts_, SearchStats& stats_)
        : u(u_), opts(opts_), stats(stats_) {
        clouds = all_clouds(u);
        for (std::size_t i = 0; i < u.table.size(); ++i)
            if (u.table.kinds[i] == Kind::Box) box_indices.push_back(i);
        std::size_t n = lengths(u.table.formulas.back()).symbols;
        depth_limit = opts.depth_limit_override
                          ? *opts.depth_limit_override
                          : recursion_depth_bound(n, u.size());
    }

    bool cloud_in_seq(const Bitset& c, const std::vector<Bitset>& seq) const {
        return std::find(seq.begin(), seq.end(), c) != seq.end();
    }

    /// Some G in the cloud with F set-preceding G and chi not in G.
    bool discharges(const Bitset& cloud, std::size_t f_idx, std::size_t chi_idx) const {
        bool found = false;
        cloud.for_each_set([&](std::size_t g) {
            if (!found && u.le(f_idx, g) && !u.sets[g].test(chi_idx)) found = true;
        });
        return found;
    }

    static std::string seq_key(const std::vector<Bitset>& seq) {
        std::string k;
        for (const auto& c : seq) {
            k += c.to_string();
            k += '/';
        }
        return k;
    }

    bool alg(std::vector<Bitset>& seq, std::vector<Bitset>* collector, bool use_memo) {
        if (++stats.steps > opts.step_limit)
            throw ResourceLimit("step budget exceeded");
        std::size_t m = seq.size() - 1;
        stats.max_recursion_depth = std::max(stats.max_recursion_depth, m);
        if (m >= depth_limit) {
            if (opts.depth_limit_override)
                throw ResourceLimit("depth limit exceeded");
            throw std::logic_error("recursion depth reached 5*n*A^2");
        }
        if (opts.on_call) opts.on_call(seq);

        std::string key;
        if (use_memo) {
            key = seq_key(seq);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }

        // Copied: recursive calls below grow seq and may reallocate it.
        const Bitset last = seq.back();
        bool result = true;
        std::vector<Bitset> gathered;

        for (std::size_t chi_owner : box_indices) {
            auto chi = static_cast<std::size_t>(u.table.child0[chi_owner]);
            bool stop = false;
            last.for_each_set([&](std::size_t f_idx) {
                if (stop || u.sets[f_idx].test(chi_owner)) return;
                ++stats.pairs_checked;

                // Condition (I): a backwards loop to some seq member.
                for (std::size_t i = 0; i <= m; ++i) {
                    if (cloud_successor(last, seq[i], u) && discharges(seq[i], f_idx, chi))
                        return;
                }

                // Condition (II): a fresh successor cloud, ascending order.
                for (const Bitset& cand : clouds) {
                    ++stats.clouds_enumerated;
                    if (cloud_in_seq(cand, seq)) continue;
                    if (!cloud_successor(last, cand, u)) continue;
                    if (!discharges(cand, f_idx, chi)) continue;
                    seq.push_back(cand);
                    bool ok;
                    if (collector) {
                        std::vector<Bitset> sub;
                        ok = alg(seq, &sub, use_memo);
                        if (ok)
                            gathered.insert(gathered.end(), sub.begin(), sub.end());
                    } else {
                        ok = alg(seq, nullptr, use_memo);
                    }
                    seq.pop_back();
                    if (ok) return;
                }
                result = false;
                stop = true;
            });
            if (!result) break;
        }

        if (use_memo) memo.emplace(std::move(key), result);
        if (result && collector) {
            collector->insert(collector->end(), gathered.begin(), gathered.end());
            collector->insert(collector->end(), seq.begin(), seq.end());
        }
        return result;
    }
};

PartialTableau make_witness(const TableauUniverse& u, const Bitset& initial,
                            std::vector<Bitset> collected) {
    // Deduplicate and order by bitstring (clouds come from the ascending
    // enumeration, so bitstring order equals cursor order).
    std::sort(collected.begin(), collected.end(), [](const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.test(i) != b.test(i)) return b.test(i);
        return false;
    });
    collected.erase(std::unique(collected.begin(), collected.end()), collected.end());
    PartialTableau t;
    t.clouds = std::move(collected);
    t.initial = initial;
    std::size_t member = SIZE_MAX;
    initial.for_each_set([&](std::size_t i) {
        if (member == SIZE_MAX && u.phi_members.test(i)) member = i;
    });
    t.designated_set = u.sets[member];
    return t;
}

}  // namespace

bool alg_rec(const TableauUniverse& u, const std::vector<Bitset>& seq,
             const SearchOptions& opts, SearchStats& stats,
             std::vector<Bitset>* collector) {
    Run run(u, opts, stats);
    std::vector<Bitset> s = seq;
    return run.alg(s, collector, opts.memoize && collector == nullptr);
}

Verdict solve(const TableauUniverse& u, const SearchOptions& opts) {
    Verdict v;
    Run run(u, opts, v.stats);
    for (const Bitset& initial : run.clouds) {
        ++v.stats.clouds_enumerated;
        if (!initial.intersects(u.phi_members)) continue;
        std::vector<Bitset> seq{initial};
        if (run.alg(seq, nullptr, opts.memoize)) {
            v.satisfiable = true;
            if (opts.collect_tableau) {
                // Re-run the accepting branch gathering the cloud union.
                std::vector<Bitset> collected;
                std::vector<Bitset> seq2{initial};
                run.alg(seq2, &collected, false);
                v.witness = make_witness(u, initial, std::move(collected));
            }
            return v;
        }
    }
    return v;
}

Verdict solve(const FormulaPtr& f, const SearchOptions& opts) {
    return solve(enumerate_tableau_sets(subformulas(f), opts.logic), opts);
}

std::size_t count_tableau_sets(const FormulaPtr& f, Logic x) {
    return enumerate_tableau_sets(subformulas(f), x).size();
}

}  // namespace bimodal
