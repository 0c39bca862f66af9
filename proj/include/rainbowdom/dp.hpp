#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

enum class LinearKind { path, cycle };

namespace detail {
namespace dp {

// The elements of M(P_n) line up as v1, e12, v2, e23, ..., vn: vertices at
// odd positions, edges at even positions. An element only interacts with
// positions at distance <= 2, and distance 2 only between edges, so a
// sliding window of the last two elements carries the whole state.
//
// Per-element state: its color set c, plus (when c is empty) the demand d of
// palette colors it still needs from elements yet to come. 3-color palette,
// so 8 demand values for empty elements plus 7 non-empty color sets.

constexpr int kFull = 7;
constexpr int kPairs = 15;
constexpr int kStates = kPairs * kPairs;
constexpr int kInf = 1 << 29;
// Period count above which evolving via matrix powers beats direct steps.
constexpr long long kMatrixThreshold = 200;

inline int pair_id(int c, int d)
{
    return c ? 7 + c : d;
}

inline int pair_color(int id)
{
    return id <= 7 ? 0 : id - 7;
}

inline int pair_demand(int id)
{
    return id <= 7 ? id : 0;
}

using Vec = std::array<int, kStates>;
using Mat = std::vector<std::array<int, kStates>>;

// Place the next element. even_pos says whether that element sits at an
// even (edge) position, where it also touches the element two back. The
// element leaving the window has no future neighbors, so its demand must
// close out here.
inline Vec step(const Vec & in, bool even_pos)
{
    Vec out;
    out.fill(kInf);
    for (int s = 0; s < kStates; ++s) {
        if (in[static_cast<std::size_t>(s)] >= kInf)
            continue;
        int a = s / kPairs;
        int b = s % kPairs;
        int ca = pair_color(a);
        int da = pair_demand(a);
        int cb = pair_color(b);
        int db = pair_demand(b);
        for (int c = 0; c <= kFull; ++c) {
            int da2 = even_pos ? (da & ~c) : da;
            if (da2 != 0)
                continue;
            int db2 = db & ~c;
            int dn = c ? 0 : (kFull & ~cb & (even_pos ? ~ca : kFull));
            int ns = pair_id(cb, db2) * kPairs + pair_id(c, dn);
            int cost = in[static_cast<std::size_t>(s)] + std::popcount(static_cast<unsigned>(c));
            if (cost < out[static_cast<std::size_t>(ns)])
                out[static_cast<std::size_t>(ns)] = cost;
        }
    }
    return out;
}

// One period = one vertex placement followed by one edge placement.
inline Vec step_period(const Vec & in)
{
    return step(step(in, false), true);
}

inline Mat period_matrix()
{
    Mat m(kStates);
    for (int s = 0; s < kStates; ++s) {
        Vec unit;
        unit.fill(kInf);
        unit[static_cast<std::size_t>(s)] = 0;
        m[static_cast<std::size_t>(s)] = step_period(unit);
    }
    return m;
}

inline Mat mat_mul(const Mat & a, const Mat & b)
{
    Mat out(kStates);
    for (auto & row : out)
        row.fill(kInf);
    for (int i = 0; i < kStates; ++i) {
        for (int j = 0; j < kStates; ++j) {
            int aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (aij >= kInf)
                continue;
            const auto & brow = b[static_cast<std::size_t>(j)];
            auto & orow = out[static_cast<std::size_t>(i)];
            for (int t = 0; t < kStates; ++t) {
                int v = aij + brow[static_cast<std::size_t>(t)];
                if (v < orow[static_cast<std::size_t>(t)])
                    orow[static_cast<std::size_t>(t)] = v;
            }
        }
    }
    return out;
}

inline Mat mat_pow(Mat base, long long e)
{
    // e >= 1
    Mat result;
    bool have = false;
    while (e > 0) {
        if (e & 1) {
            result = have ? mat_mul(result, base) : base;
            have = true;
        }
        e >>= 1;
        if (e > 0)
            base = mat_mul(base, base);
    }
    return result;
}

inline Vec vec_mat(const Vec & v, const Mat & m)
{
    Vec out;
    out.fill(kInf);
    for (int s = 0; s < kStates; ++s) {
        int vs = v[static_cast<std::size_t>(s)];
        if (vs >= kInf)
            continue;
        const auto & row = m[static_cast<std::size_t>(s)];
        for (int t = 0; t < kStates; ++t) {
            int cost = vs + row[static_cast<std::size_t>(t)];
            if (cost < out[static_cast<std::size_t>(t)])
                out[static_cast<std::size_t>(t)] = cost;
        }
    }
    return out;
}

// Advance t periods, via repeated steps or a precomputed matrix power.
inline Vec evolve(Vec v, long long t, const Mat * matrix_power)
{
    if (matrix_power)
        return vec_mat(v, *matrix_power);
    for (long long i = 0; i < t; ++i)
        v = step_period(v);
    return v;
}

inline int popc(int c)
{
    return std::popcount(static_cast<unsigned>(c));
}

inline long long dp_path(long long n)
{
    // Window starts holding (v1, e12); v1's only neighbor is e12, so its
    // demand is already final and the first generic step checks it.
    Vec v;
    v.fill(kInf);
    for (int c1 = 0; c1 <= kFull; ++c1) {
        for (int c2 = 0; c2 <= kFull; ++c2) {
            int d1 = c1 ? 0 : kFull & ~c2;
            int d2 = c2 ? 0 : kFull & ~c1;
            int s = pair_id(c1, d1) * kPairs + pair_id(c2, d2);
            int cost = popc(c1) + popc(c2);
            if (cost < v[static_cast<std::size_t>(s)])
                v[static_cast<std::size_t>(s)] = cost;
        }
    }
    long long t = n - 2;
    std::unique_ptr<Mat> mt;
    if (t > kMatrixThreshold)
        mt = std::make_unique<Mat>(mat_pow(period_matrix(), t));
    v = evolve(v, t, mt.get());
    v = step(v, false); // final vertex vn
    int best = kInf;
    for (int s = 0; s < kStates; ++s) {
        if (v[static_cast<std::size_t>(s)] >= kInf)
            continue;
        if (pair_demand(s / kPairs) == 0 && pair_demand(s % kPairs) == 0)
            best = std::min(best, v[static_cast<std::size_t>(s)]);
    }
    return best;
}

inline long long dp_cycle(long long n)
{
    // Same window sweep as the path, but v1 and e(v1,v2) keep a residual
    // demand toward the closing edge e(vn,v1), which also neighbors both of
    // them. Enumerate the boundary colors (c1, c2), carry the residuals
    // outside the window, and settle them when the closing edge is placed.
    long long t = n - 3;
    std::unique_ptr<Mat> mt;
    if (t > kMatrixThreshold)
        mt = std::make_unique<Mat>(mat_pow(period_matrix(), t));
    int best = kInf;
    for (int c1 = 0; c1 <= kFull; ++c1) {
        for (int c2 = 0; c2 <= kFull; ++c2) {
            int base = popc(c1) + popc(c2);
            int rem1 = c1 ? 0 : kFull & ~c2;
            // Start vectors after placing v2 and e(v2,v3), grouped by the
            // residual demand of e(v1,v2).
            std::array<Vec, 8> group;
            std::array<char, 8> used{};
            for (int c3 = 0; c3 <= kFull; ++c3) {
                for (int c4 = 0; c4 <= kFull; ++c4) {
                    int rem2 = c2 ? 0 : (kFull & ~c1) & ~c3 & ~c4;
                    int d3 = (c3 ? 0 : kFull & ~c2) & ~c4;
                    int d4 = c4 ? 0 : kFull & ~c3 & ~c2;
                    int s = pair_id(c3, d3) * kPairs + pair_id(c4, d4);
                    int cost = base + popc(c3) + popc(c4);
                    std::size_t gi = static_cast<std::size_t>(rem2);
                    if (!used[gi]) {
                        group[gi].fill(kInf);
                        used[gi] = 1;
                    }
                    if (cost < group[gi][static_cast<std::size_t>(s)])
                        group[gi][static_cast<std::size_t>(s)] = cost;
                }
            }
            for (int rem2 = 0; rem2 <= kFull; ++rem2) {
                if (!used[static_cast<std::size_t>(rem2)])
                    continue;
                Vec v = evolve(group[static_cast<std::size_t>(rem2)], t, mt.get());
                v = step(v, false); // vn
                v = step(v, true);  // closing edge e(vn,v1)
                for (int s = 0; s < kStates; ++s) {
                    int cost = v[static_cast<std::size_t>(s)];
                    if (cost >= kInf || cost >= best)
                        continue;
                    if (pair_demand(s / kPairs) != 0)
                        continue; // vn unsatisfied
                    int cl = pair_color(s % kPairs);
                    int dl = pair_demand(s % kPairs);
                    if (dl & ~c1 & ~c2)
                        continue; // closing edge unsatisfied
                    if (rem1 & ~cl)
                        continue; // v1 unsatisfied
                    if (rem2 & ~cl)
                        continue; // e(v1,v2) unsatisfied
                    best = cost;
                }
            }
        }
    }
    return best;
}

} // namespace dp
} // namespace detail

// Minimum MkRDF weight for k = 3 on a path or cycle of order n, by dynamic
// programming over the element sequence of the middle graph. Runs in
// O(log n) matrix steps for large n.
inline long long dp_middle(LinearKind kind, long long n)
{
    if (n > 100000)
        throw CapacityError("dp supports n <= 100000, got " + std::to_string(n));
    if (kind == LinearKind::path) {
        if (n < 2)
            throw DomainError("path dp requires n >= 2");
        return detail::dp::dp_path(n);
    }
    if (n < 3)
        throw DomainError("cycle dp requires n >= 3");
    return detail::dp::dp_cycle(n);
}

} // namespace rainbowdom
