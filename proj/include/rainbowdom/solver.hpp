#pragma once

#include <array>
#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <vector>

#include "rainbowdom/verify.hpp"

namespace rainbowdom {

inline constexpr int kDefaultSolverCap = 24;
inline constexpr const char * kSolverCapEnv = "RAINBOWDOM_SOLVER_CAP";

// Active instance-size cap: explicit argument wins, then the environment
// override, then the default.
inline int solver_cap(int requested = -1)
{
    if (requested >= 0)
        return requested;
    const char * raw = std::getenv(kSolverCapEnv);
    if (!raw)
        return kDefaultSolverCap;
    char * end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        throw DomainError(std::string(kSolverCapEnv) + " must be a positive integer, got \"" +
                          raw + "\"");
    return static_cast<int>(value);
}

struct SolveStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct SolveResult {
    int value = 0;
    RainbowAssignment certificate;
    SolveStats stats;
};

namespace detail {

// Candidate color sets in branch order: by cardinality, then by bit value.
inline std::vector<std::uint8_t> candidate_sets(int k)
{
    std::vector<std::uint8_t> out;
    out.reserve(1u << k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
        out.push_back(static_cast<std::uint8_t>(mask));
    std::stable_sort(out.begin(), out.end(), [](std::uint8_t a, std::uint8_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    return out;
}

// Depth-first branch and bound over vertices in index order. Assignments
// are extended one vertex at a time; every bound below is admissible, so
// the first optimum reached in branch order is the one reported, making
// certificates reproducible across runs.
class BnbSolver {
public:
    BnbSolver(const Graph & g, int k) : n_(g.order()), k_(k), full_((1u << k) - 1u)
    {
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (const Edge & e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= 1ull << e.v;
            adj_[static_cast<std::size_t>(e.v)] |= 1ull << e.u;
        }
        value_.assign(static_cast<std::size_t>(n_), -1);
        seen_.assign(static_cast<std::size_t>(n_), 0);
        rem_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            rem_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(g.degree(v));
        candidates_ = candidate_sets(k);
    }

    // Minimize total weight; keeps the first optimum in branch order.
    SolveResult run()
    {
        auto start = std::chrono::steady_clock::now();
        // Seed with a greedy incumbent value, exclusive. No optimum reaches
        // best_, so the first optimal leaf in branch order is never pruned
        // and the reported certificate is independent of the seed quality.
        best_ = greedy_upper() + 1;
        best_values_.assign(static_cast<std::size_t>(n_), 0);
        nodes_ = 0;
        dfs(0, 0);
        auto stop = std::chrono::steady_clock::now();
        SolveResult result;
        result.value = best_;
        result.certificate = make_assignment(k_, AssignmentDomain::plain, n_);
        for (int v = 0; v < n_; ++v)
            result.certificate.values[static_cast<std::size_t>(v)] =
                ColorSet::of_bits(best_values_[static_cast<std::size_t>(v)]);
        result.stats.nodes = nodes_;
        result.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        return result;
    }

    // All optima: fix the target weight and collect every leaf that attains
    // it, in branch order.
    std::vector<RainbowAssignment> collect(int target)
    {
        best_ = target;
        nodes_ = 0;
        collected_.clear();
        collecting_ = true;
        dfs(0, 0);
        collecting_ = false;
        std::vector<RainbowAssignment> out;
        out.reserve(collected_.size());
        for (const auto & values : collected_) {
            RainbowAssignment f = make_assignment(k_, AssignmentDomain::plain, n_);
            for (int v = 0; v < n_; ++v)
                f.values[static_cast<std::size_t>(v)] =
                    ColorSet::of_bits(values[static_cast<std::size_t>(v)]);
            out.push_back(std::move(f));
        }
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(int i, int w)
    {
        ++nodes_;
        if (i == n_) {
            if (collecting_) {
                if (w == best_)
                    collected_.emplace_back(value_.begin(), value_.end());
            } else if (w < best_) {
                best_ = w;
                for (int v = 0; v < n_; ++v)
                    best_values_[static_cast<std::size_t>(v)] =
                        static_cast<std::uint8_t>(value_[static_cast<std::size_t>(v)]);
            }
            return;
        }
        int lb = lower_bound();
        if (collecting_ ? (w + lb > best_) : (w + lb >= best_))
            return;
        std::array<std::uint8_t, 64> saved_seen{};
        for (std::uint8_t c : candidates_) {
            int pc = std::popcount(c);
            if (collecting_ ? (w + pc > best_) : (w + pc >= best_))
                break;
            std::size_t si = static_cast<std::size_t>(i);
            if (c == 0 && rem_[si] == 0 && seen_[si] != full_)
                continue; // i would end empty and unsatisfied
            bool ok = true;
            std::uint64_t nb = adj_[si];
            for (std::uint64_t bits = nb; bits;) {
                int j = std::countr_zero(bits);
                bits &= bits - 1;
                std::size_t sj = static_cast<std::size_t>(j);
                saved_seen[sj] = seen_[sj];
                seen_[sj] |= c;
                --rem_[sj];
                if (value_[sj] == 0 && rem_[sj] == 0 && seen_[sj] != full_)
                    ok = false; // empty neighbor can no longer be satisfied
            }
            value_[si] = static_cast<std::int16_t>(c);
            if (ok)
                dfs(i + 1, w + pc);
            value_[si] = -1;
            for (std::uint64_t bits = nb; bits;) {
                int j = std::countr_zero(bits);
                bits &= bits - 1;
                std::size_t sj = static_cast<std::size_t>(j);
                seen_[sj] = saved_seen[sj];
                ++rem_[sj];
            }
        }
    }

    // Feasible assignment, greedily built then color-pruned: pick the vertex
    // supplying the most missing color units, give it every color, repeat;
    // afterwards drop single colors wherever validity survives. Never worse
    // than all-{1} since that is compared in at the end.
    int greedy_upper() const
    {
        std::vector<std::uint8_t> f(static_cast<std::size_t>(n_), 0);
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
        auto satisfied = [&](int v) {
            std::size_t sv = static_cast<std::size_t>(v);
            return f[sv] != 0 || seen[sv] == full_;
        };
        while (true) {
            bool done = true;
            for (int v = 0; v < n_ && done; ++v)
                done = satisfied(v);
            if (done)
                break;
            int pick = 0;
            int pick_gain = -1;
            for (int u = 0; u < n_; ++u) {
                std::size_t su = static_cast<std::size_t>(u);
                int gain = satisfied(u) ? 0 : 1;
                for (std::uint64_t bits = adj_[su]; bits;) {
                    int w = std::countr_zero(bits);
                    bits &= bits - 1;
                    std::size_t sw = static_cast<std::size_t>(w);
                    if (f[sw] == 0)
                        gain += std::popcount(static_cast<std::uint8_t>(full_ & ~seen[sw]));
                }
                if (gain > pick_gain) {
                    pick_gain = gain;
                    pick = u;
                }
            }
            f[static_cast<std::size_t>(pick)] = full_;
            for (std::uint64_t bits = adj_[static_cast<std::size_t>(pick)]; bits;) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                seen[static_cast<std::size_t>(w)] |= full_;
            }
        }
        auto valid_at = [&](int v) {
            std::size_t sv = static_cast<std::size_t>(v);
            if (f[sv] != 0)
                return true;
            std::uint8_t s = 0;
            for (std::uint64_t bits = adj_[sv]; bits;) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                s |= f[static_cast<std::size_t>(w)];
            }
            return s == full_;
        };
        for (int u = 0; u < n_; ++u) {
            std::size_t su = static_cast<std::size_t>(u);
            for (int b = 0; b < k_; ++b) {
                std::uint8_t c = static_cast<std::uint8_t>(1u << b);
                if (!(f[su] & c))
                    continue;
                f[su] = static_cast<std::uint8_t>(f[su] & ~c);
                bool ok = valid_at(u);
                for (std::uint64_t bits = adj_[su]; ok && bits;) {
                    int w = std::countr_zero(bits);
                    bits &= bits - 1;
                    ok = valid_at(w);
                }
                if (!ok)
                    f[su] = static_cast<std::uint8_t>(f[su] | c);
            }
        }
        int weight = 0;
        for (std::uint8_t c : f)
            weight += std::popcount(c);
        return std::min(weight, n_);
    }

    // Admissible lower bound on the extra weight any completion must add.
    int lower_bound()
    {
        int count = 0;
        int total_missing = 0;
        std::uint64_t demand_mask = 0;
        std::uint64_t unassigned = 0;
        std::array<std::uint8_t, 64> demand_v{};
        std::array<std::uint8_t, 64> demand_miss{};
        for (int v = 0; v < n_; ++v) {
            std::size_t sv = static_cast<std::size_t>(v);
            if (value_[sv] < 0) {
                unassigned |= 1ull << v;
            } else if (value_[sv] == 0) {
                std::uint8_t miss = full_ & ~seen_[sv];
                if (miss) {
                    demand_v[static_cast<std::size_t>(count)] = static_cast<std::uint8_t>(v);
                    demand_miss[static_cast<std::size_t>(count)] = miss;
                    ++count;
                    total_missing += std::popcount(miss);
                    demand_mask |= 1ull << v;
                }
            }
        }
        // An unassigned vertex with every neighbor already assigned and an
        // incomplete palette can only be satisfied by becoming nonempty.
        // When it is not adjacent to any demander that unit of weight is
        // disjoint from all supply counted below.
        int forced_self = 0;
        for (std::uint64_t bits = unassigned; bits;) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            std::size_t su = static_cast<std::size_t>(u);
            if (seen_[su] != full_ && (adj_[su] & unassigned) == 0 &&
                (adj_[su] & demand_mask) == 0)
                ++forced_self;
        }
        if (total_missing == 0)
            return forced_self;
        // Ratio bound: one color placed at u serves at most the demanders
        // adjacent to u, one missing unit each.
        int max_mult = 1;
        for (std::uint64_t bits = unassigned; bits;) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            int mult = std::popcount(adj_[static_cast<std::size_t>(u)] & demand_mask);
            max_mult = std::max(max_mult, mult);
        }
        int lb_ratio = (total_missing + max_mult - 1) / max_mult;
        // Disjoint-support bound: demanders whose open candidate sets do not
        // overlap pay for their missing colors independently.
        std::array<std::uint64_t, 64> support{};
        for (int t = 0; t < count; ++t)
            support[static_cast<std::size_t>(t)] =
                adj_[static_cast<std::size_t>(demand_v[static_cast<std::size_t>(t)])] & unassigned;
        int lb_disjoint = 0;
        std::uint64_t used = 0;
        for (int t = 0; t < count; ++t) {
            std::size_t st = static_cast<std::size_t>(t);
            if (support[st] & used)
                continue;
            lb_disjoint += std::popcount(demand_miss[st]);
            used |= support[st];
        }
        // Per-color variant of the same idea.
        int lb_per_color = 0;
        for (int b = 0; b < k_; ++b) {
            std::uint64_t used_c = 0;
            for (int t = 0; t < count; ++t) {
                std::size_t st = static_cast<std::size_t>(t);
                if (!((demand_miss[st] >> b) & 1u))
                    continue;
                if (support[st] & used_c)
                    continue;
                ++lb_per_color;
                used_c |= support[st];
            }
        }
        return std::max(lb_ratio, std::max(lb_disjoint, lb_per_color)) + forced_self;
    }

    int n_;
    int k_;
    std::uint8_t full_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::int16_t> value_;
    std::vector<std::uint8_t> seen_;
    std::vector<std::uint8_t> rem_;
    std::vector<std::uint8_t> candidates_;
    std::vector<std::uint8_t> best_values_;
    int best_ = 0;
    std::uint64_t nodes_ = 0;
    bool collecting_ = false;
    std::vector<std::vector<std::uint8_t>> collected_;
};

} // namespace detail

// Exact minimum-weight k-rainbow dominating function on a plain graph.
inline SolveResult solve_krdf(const Graph & g, int k, int cap = -1)
{
    require_color_count(k);
    int active_cap = solver_cap(cap);
    if (g.order() > active_cap)
        throw CapacityError("solver cap is " + std::to_string(active_cap) + " vertices, instance has " +
                            std::to_string(g.order()) + " (set " + kSolverCapEnv + " to raise)");
    if (g.order() > 64)
        throw CapacityError("solver supports at most 64 vertices");
    detail::BnbSolver solver(g, k);
    return solver.run();
}

// Same, on the middle graph of g; the certificate comes back keyed by the
// elements of g.
inline SolveResult solve_middle(const Graph & g, int k, int cap = -1)
{
    MiddleGraph mg(g);
    SolveResult result = solve_krdf(mg.host(), k, cap);
    result.certificate.domain = AssignmentDomain::middle;
    return result;
}

inline constexpr int kBruteCap = 8;

// Plain odometer over all (2^k)^n assignments. Used as an oracle against
// the branch-and-bound path; no pruning beyond the running-best weight.
inline int brute_force_krdf(const Graph & g, int k)
{
    require_color_count(k);
    int n = g.order();
    if (n > kBruteCap)
        throw CapacityError("brute force cap is " + std::to_string(kBruteCap) +
                            " elements, instance has " + std::to_string(n));
    std::uint8_t full = static_cast<std::uint8_t>((1u << k) - 1u);
    std::vector<std::uint8_t> val(static_cast<std::size_t>(n), 0);
    int best = n + 1;
    while (true) {
        int w = 0;
        for (std::uint8_t c : val)
            w += std::popcount(c);
        if (w < best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v) {
                if (val[static_cast<std::size_t>(v)] != 0)
                    continue;
                std::uint8_t seen = 0;
                for (int u : g.neighbors(v))
                    seen |= val[static_cast<std::size_t>(u)];
                valid = seen == full;
            }
            if (valid)
                best = w;
        }
        int pos = 0;
        while (pos < n && val[static_cast<std::size_t>(pos)] == full)
            val[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
        ++val[static_cast<std::size_t>(pos)];
    }
    return best;
}

// Every minimum-weight assignment, in solver branch order.
inline std::vector<RainbowAssignment> enumerate_optimal_krdf(const Graph & g, int k)
{
    require_color_count(k);
    if (k * g.order() > 27)
        throw CapacityError("optimum enumeration supports k*n <= 27, got " +
                            std::to_string(k * g.order()));
    detail::BnbSolver solver(g, k);
    int target = solver.run().value;
    detail::BnbSolver collector(g, k);
    return collector.collect(target);
}

} // namespace rainbowdom
