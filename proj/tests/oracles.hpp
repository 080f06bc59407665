#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond its plain data types, so agreement is meaningful.

#include "affschur/symcore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using affschur::Partition;

// Fill the shape cell by cell with 1..maxv, rows weak, columns strict.
inline void fill_tableaux(const Partition& outer, const Partition& inner, int maxv,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        int start = i < inner.size() ? inner[i] : 0;
        for (int j = start; j < outer[i]; ++j)
            cells.push_back({static_cast<int>(i), j});
    }
    std::vector<std::vector<int>> t(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i)
        t[i].assign(outer[i], 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(t);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1;
        int start = static_cast<std::size_t>(i) < inner.size() ? inner[i] : 0;
        if (j > start)
            lo = std::max(lo, t[i][j - 1]);
        if (i > 0) {
            int above_start = static_cast<std::size_t>(i - 1) < inner.size() ? inner[i - 1] : 0;
            if (j >= above_start)
                lo = std::max(lo, t[i - 1][j] + 1);
        }
        for (int v = lo; v <= maxv; ++v) {
            t[i][j] = v;
            rec(idx + 1);
        }
        t[i][j] = 0;
    };
    rec(0);
}

inline long kostka(const Partition& lam, const Partition& mu)
{
    long count = 0;
    int m = static_cast<int>(mu.size());
    fill_tableaux(lam, {}, m, [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> c(m + 1, 0);
        for (auto& row : t)
            for (int v : row)
                ++c[v];
        for (int i = 0; i < m; ++i)
            if (c[i + 1] != mu[i])
                return;
        ++count;
    });
    return count;
}

// Littlewood-Richardson: skew tableaux of shape nu/lam whose reverse reading
// word (rows top to bottom, right to left) is a lattice word.
inline std::map<Partition, long> skew_schur(const Partition& lam, const Partition& nu)
{
    std::map<Partition, long> out;
    int size = std::accumulate(nu.begin(), nu.end(), 0) - std::accumulate(lam.begin(), lam.end(), 0);
    fill_tableaux(nu, lam, std::max(size, 1), [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> count(size + 2, 0);
        for (std::size_t i = 0; i < nu.size(); ++i) {
            int start = i < lam.size() ? lam[i] : 0;
            for (int j = nu[i] - 1; j >= start; --j) {
                int v = t[i][j];
                ++count[v];
                if (v > 1 && count[v] > count[v - 1])
                    return;
            }
        }
        Partition mu;
        for (int v = 1; v <= size; ++v)
            if (count[v])
                mu.push_back(count[v]);
        ++out[mu];
    });
    return out;
}

// Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}), expanded over permutations.
inline std::map<Partition, long> jacobi_trudi(const Partition& lam)
{
    std::map<Partition, long> out;
    int l = static_cast<int>(lam.size());
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                inv += sigma[i] > sigma[j];
        Partition h;
        bool zero = false;
        for (int i = 0; i < l; ++i) {
            int part = lam[i] - i + sigma[i];
            if (part < 0)
                zero = true;
            else if (part > 0)
                h.push_back(part);
        }
        if (zero)
            continue;
        std::sort(h.rbegin(), h.rend());
        out[h] += inv % 2 ? -1 : 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

inline long inversions(const std::vector<long>& w)
{
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            c += w[i] > w[j];
    return c;
}

inline bool has_321(const std::vector<long>& w)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            for (std::size_t k = j + 1; k < w.size(); ++k)
                if (w[i] > w[j] && w[j] > w[k])
                    return true;
    return false;
}

// r-Bruhat cover in S_N by lengths: w = u with positions i <= r < j swapped
// and one more inversion. Returns the covers with value labels (a,b).
inline std::vector<std::pair<std::pair<long, long>, std::vector<long>>> rbruhat_covers(const std::vector<long>& u, int r)
{
    std::vector<std::pair<std::pair<long, long>, std::vector<long>>> out;
    long lu = inversions(u);
    for (int i = 0; i < r && i < static_cast<int>(u.size()); ++i)
        for (std::size_t j = r; j < u.size(); ++j) {
            auto w = u;
            std::swap(w[i], w[j]);
            if (inversions(w) == lu + 1)
                out.push_back({{u[i], u[j]}, w});
        }
    return out;
}

// Affine permutation helpers on plain windows.
inline long aff_value(const std::vector<long>& win, long i)
{
    long n = static_cast<long>(win.size());
    long q = (i - 1) >= 0 ? (i - 1) / n : -((n - i) / n);
    return win[(i - 1) - q * n] + q * n;
}

inline long aff_length(const std::vector<long>& win)
{
    long n = static_cast<long>(win.size()), c = 0;
    long span = 0;
    for (long x : win)
        span = std::max(span, std::labs(x));
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= i + n * (span + 2); ++j)
            c += aff_value(win, i) > aff_value(win, j);
    return c;
}

// Zero-Bruhat step via lengths: swap positions a+mn, b+mn, require one more
// inversion and u(a) <= 0 < u(b).
inline std::optional<std::vector<long>> aff_zero_op(const std::vector<long>& win, long a, long b)
{
    long ua = aff_value(win, a), ub = aff_value(win, b);
    if (!(ua <= 0 && ub > 0))
        return std::nullopt;
    long n = static_cast<long>(win.size());
    auto w = win;
    auto set = [&](long pos, long val) {
        long r = ((pos - 1) % n + n) % n;
        long q = (pos - 1 - r) / n;
        w[r] = val - q * n;
    };
    set(a, ub);
    set(b, ua);
    if (aff_length(w) != aff_length(win) + 1)
        return std::nullopt;
    return w;
}

} // namespace oracle
