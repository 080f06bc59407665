#include "affschur/young.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace affschur {

std::vector<std::pair<int, Partition>> covers_up(const Partition& lam)
{
    std::vector<std::pair<int, Partition>> out;
    int rows = static_cast<int>(lam.size());
    for (int i = 0; i <= rows; ++i) {
        int len = i < rows ? lam[i] : 0;
        if (i > 0 && lam[i - 1] == len)
            continue;
        Partition nu = lam;
        if (i < rows)
            ++nu[i];
        else
            nu.push_back(1);
        out.emplace_back(len + 1 - (i + 1), nu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Partition> apply_u(int r, const Partition& lam)
{
    for (auto& [c, nu] : covers_up(lam))
        if (c == r)
            return nu;
    return std::nullopt;
}

std::optional<Partition> apply_word(const std::vector<int>& word, const Partition& lam)
{
    std::optional<Partition> cur = lam;
    for (int r : word) {
        cur = apply_u(r, *cur);
        if (!cur)
            return std::nullopt;
    }
    return cur;
}

IntegerPermutation border_word(const Partition& lam)
{
    // row i steps to position lam_i - i + 1 carrying 1 - i; column j to j - lam'_j carrying j
    std::map<long, long> m;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        long row = static_cast<long>(i) + 1;
        m[lam[i] - row + 1] = 1 - row;
    }
    Partition conj = conjugate(lam);
    for (std::size_t j = 0; j < conj.size(); ++j) {
        long col = static_cast<long>(j) + 1;
        m[col - conj[j]] = col;
    }
    return IntegerPermutation::from_map(m);
}

namespace {

using Cell = std::pair<int, int>; // (column, row)

Partition down_closure(const std::set<Cell>& cells)
{
    std::vector<int> rows;
    for (auto [c, r] : cells) {
        if (static_cast<int>(rows.size()) < r)
            rows.resize(r, 0);
        for (int rr = 0; rr < r; ++rr)
            rows[rr] = std::max(rows[rr], c);
    }
    return rows;
}

bool in_shape(const Partition& p, int c, int r)
{
    return r >= 1 && r <= static_cast<int>(p.size()) && c >= 1 && c <= p[r - 1];
}

SkewShape shape_of(const std::set<Cell>& cells)
{
    Partition outer = down_closure(cells);
    Partition inner(outer.size(), 0);
    for (std::size_t r = 0; r < outer.size(); ++r) {
        int len = outer[r];
        while (len > 0 && cells.count({len, static_cast<int>(r) + 1}))
            --len;
        // every remaining cell of the row must lie outside the skew set
        for (int c = 1; c <= len; ++c)
            if (cells.count({c, static_cast<int>(r) + 1}))
                throw domain_error("skew construction produced a non-convex row");
        inner[r] = len;
    }
    for (std::size_t r = 1; r < inner.size(); ++r)
        if (inner[r] > inner[r - 1])
            throw domain_error("skew construction produced a non-partition inner shape");
    while (!inner.empty() && inner.back() == 0)
        inner.pop_back();
    return {inner, outer};
}

} // namespace

std::vector<int> reading_word(const SkewShape& s)
{
    std::vector<int> w;
    for (std::size_t r = 0; r < s.outer.size(); ++r) {
        int from = r < s.inner.size() ? s.inner[r] : 0;
        for (int c = from + 1; c <= s.outer[r]; ++c)
            w.push_back(c - static_cast<int>(r) - 1);
    }
    return w;
}

SkewShape skew_from_321(const IntegerPermutation& p)
{
    long i, j, k;
    if (find_321(p, i, j, k)) {
        std::ostringstream os;
        os << "not 321-avoiding: positions " << i << "," << j << "," << k << " carry " << p(i) << ">" << p(j)
           << ">" << p(k);
        throw domain_error(os.str());
    }
    return skew_from_word(lex_max_reduced_word(p));
}

SkewShape skew_from_word(const std::vector<long>& word)
{
    IntegerPermutation p = word_product(word);
    if (length(p) != static_cast<long>(word.size()))
        throw domain_error("skew_from_word: word is not reduced");
    if (!is_321_avoiding(p))
        throw domain_error("skew_from_word: product is not 321-avoiding");
    std::set<Cell> cells;
    std::vector<long> done;
    for (long d : word) {
        Partition outer = down_closure(cells);
        int r = std::max(1L, 1 - d);
        int c = static_cast<int>(r + d);
        while (in_shape(outer, c, r)) {
            ++r;
            ++c;
        }
        bool left_ok = c == 1 || in_shape(outer, c - 1, r);
        bool below_ok = r == 1 || in_shape(outer, c, r - 1);
        if (!left_ok || !below_ok) {
            std::set<Cell> moved;
            for (auto [cc, rr] : cells) {
                bool shift = !left_ok ? rr >= r : cc >= c;
                moved.insert(shift ? Cell{cc + 1, rr + 1} : Cell{cc, rr});
            }
            cells.swap(moved);
        }
        cells.insert({c, r});
        done.push_back(d);
        SkewShape s = shape_of(cells);
        auto w = reading_word(s);
        std::vector<long> lw(w.begin(), w.end());
        if (!apply_word(w, s.inner) || length(word_product(lw)) != static_cast<long>(lw.size())
            || !(word_product(lw) == word_product(done)))
            throw domain_error("skew construction failed to realize the word");
    }
    if (cells.empty())
        return {};
    return shape_of(cells);
}

PartitionSum young_H(int k, const Partition& lam)
{
    PartitionSum out;
    std::function<void(const Partition&, int, int)> rec = [&](const Partition& cur, int last, int left) {
        if (left == 0) {
            out.add(cur, 1);
            return;
        }
        for (auto& [c, nu] : covers_up(cur))
            if (c > last)
                rec(nu, c, left - 1);
    };
    rec(lam, std::numeric_limits<int>::min(), k);
    return out;
}

PartitionSum young_H(int k, const PartitionSum& v)
{
    PartitionSum out;
    for (auto& [lam, c] : v.terms())
        out.add(young_H(k, lam), c);
    return out;
}

bool is_consecutive_cycle_form(const IntegerPermutation& zeta, int k)
{
    if (length(zeta) != k)
        return false;
    std::set<long> seen;
    for (auto [a, b] : zeta.moved()) {
        if (seen.count(a))
            continue;
        // a is the smallest point of its cycle; it must map to the top of a run
        long top = b;
        if (top <= a)
            return false;
        for (long x = top; x > a; --x) {
            if (zeta(x) != x - 1)
                return false;
            seen.insert(x);
        }
        seen.insert(a);
    }
    return true;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.size() > outer.size())
        return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

Expansion young_K(const Partition& lam, const Partition& nu)
{
    if (!contains(nu, lam))
        throw domain_error("young_K: inner partition is not contained in outer");
    Expansion out(Basis::F);
    int n = size_of(nu) - size_of(lam);
    std::vector<int> labels;
    std::function<void(const Partition&)> rec = [&](const Partition& cur) {
        if (static_cast<int>(labels.size()) == n) {
            std::set<int> d;
            for (int i = 0; i + 1 < n; ++i)
                if (labels[i] > labels[i + 1])
                    d.insert(i + 1);
            out.add(composition_from_descents(n, d), 1);
            return;
        }
        for (auto& [c, next] : covers_up(cur)) {
            if (!contains(nu, next))
                continue;
            labels.push_back(c);
            rec(next);
            labels.pop_back();
        }
    };
    rec(lam);
    return out;
}

} // namespace affschur
