#include "affschur/schubert.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace affschur {

std::optional<IntegerPermutation> monk_cover(const IntegerPermutation& u, long a, long b, int r)
{
    if (a >= b)
        return std::nullopt;
    IntegerPermutation inv = u.inverse();
    long i = inv(a), j = inv(b);
    if (!(i <= r && r < j))
        return std::nullopt;
    for (long l = i + 1; l < j; ++l)
        if (a < u(l) && u(l) < b)
            return std::nullopt;
    return multiply(IntegerPermutation::transposition(a, b), u);
}

std::optional<IntegerPermutation> apply_chain(const Chain& c, const IntegerPermutation& u, int r)
{
    std::optional<IntegerPermutation> cur = u;
    for (auto& l : c) {
        cur = monk_cover(*cur, l.a, l.b, r);
        if (!cur)
            break;
    }
    return cur;
}

Interval zeta_to_interval(const IntegerPermutation& zeta)
{
    if (zeta.is_identity())
        throw domain_error("zeta_to_interval: identity has no interval");
    auto up = up_set(zeta);
    long n = zeta.max_moved();
    std::vector<long> images(up.begin(), up.end());
    for (long x = 1; x <= n; ++x)
        if (!up.count(x))
            images.push_back(x);
    IntegerPermutation w = IntegerPermutation::from_window(images);
    IntegerPermutation u = multiply(zeta.inverse(), w);
    return {u, w, static_cast<int>(up.size())};
}

std::optional<Chain> canonical_chain(const IntegerPermutation& u, const IntegerPermutation& w, int r)
{
    Chain c;
    IntegerPermutation cur = u;
    long steps = length(w) - length(u);
    while (!(cur == w)) {
        if (static_cast<long>(c.size()) >= steps)
            return std::nullopt;
        long i1 = 0;
        bool found = false;
        for (long i = r; i >= 1; --i)
            if (cur(i) < w(i)) {
                i1 = i;
                found = true;
                break;
            }
        if (!found)
            return std::nullopt;
        long hi = std::max({cur.max_moved(), w.max_moved(), static_cast<long>(r) + 1});
        long j1 = 0;
        found = false;
        for (long j = r + 1; j <= hi; ++j)
            if (cur(j) > cur(i1) && cur(i1) >= w(j)) {
                j1 = j;
                found = true;
                break;
            }
        if (!found)
            return std::nullopt;
        MonkLabel l{cur(i1), cur(j1)};
        auto next = monk_cover(cur, l.a, l.b, r);
        if (!next)
            return std::nullopt;
        c.push_back(l);
        cur = *next;
    }
    return c;
}

namespace {

long support_bound(const IntegerPermutation& u, const IntegerPermutation& w, int r)
{
    return std::max({u.max_moved(), w.max_moved(), static_cast<long>(r) + 1});
}

} // namespace

std::vector<Chain> enumerate_chains(const IntegerPermutation& u, const IntegerPermutation& w, int r)
{
    std::vector<Chain> out;
    long steps = length(w) - length(u);
    if (steps < 0)
        return out;
    long n = support_bound(u, w, r);
    std::map<IntegerPermutation, bool> reach;
    std::function<bool(const IntegerPermutation&, long)> can = [&](const IntegerPermutation& v, long left) {
        if (left == 0)
            return v == w;
        auto it = reach.find(v);
        if (it != reach.end())
            return it->second;
        bool ok = false;
        for (long a = 1; a <= n && !ok; ++a)
            for (long b = a + 1; b <= n && !ok; ++b)
                if (auto nx = monk_cover(v, a, b, r))
                    ok = can(*nx, left - 1);
        reach[v] = ok;
        return ok;
    };
    Chain cur;
    std::function<void(const IntegerPermutation&, long)> rec = [&](const IntegerPermutation& v, long left) {
        if (left == 0) {
            if (v == w)
                out.push_back(cur);
            return;
        }
        for (long a = 1; a <= n; ++a)
            for (long b = a + 1; b <= n; ++b) {
                auto nx = monk_cover(v, a, b, r);
                if (!nx || !can(*nx, left - 1))
                    continue;
                cur.push_back({a, b});
                rec(*nx, left - 1);
                cur.pop_back();
            }
    };
    if (can(u, steps))
        rec(u, steps);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> b_descents(const Chain& c)
{
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i].b > c[i + 1].b)
            d.insert(static_cast<int>(i) + 1);
    return d;
}

Expansion chains_to_F(const std::vector<Chain>& chains)
{
    Expansion out(Basis::F);
    for (auto& c : chains)
        out.add(composition_from_descents(static_cast<int>(c.size()), b_descents(c)), 1);
    return out;
}

Expansion schubert_K(const IntegerPermutation& u, const IntegerPermutation& w, int r)
{
    return chains_to_F(enumerate_chains(u, w, r));
}

namespace {

struct Cycle {
    std::vector<long> pts; // c_1 > c_2 > ... > c_m
};

bool totally_disjoint(const Cycle& x, const Cycle& y)
{
    long xlo = x.pts.back(), xhi = x.pts.front();
    long ylo = y.pts.back(), yhi = y.pts.front();
    if (xhi < ylo || yhi < xlo)
        return true;
    auto none_in = [](const std::vector<long>& pts, long lo, long hi) {
        return std::none_of(pts.begin(), pts.end(), [&](long p) { return lo <= p && p <= hi; });
    };
    return none_in(y.pts, xlo, xhi) || none_in(x.pts, ylo, yhi);
}

} // namespace

bool is_k_increasing(const IntegerPermutation& zeta, int k)
{
    std::vector<Cycle> cycles;
    std::set<long> seen;
    for (auto it = zeta.moved().rbegin(); it != zeta.moved().rend(); ++it) {
        long top = it->first;
        if (seen.count(top))
            continue;
        Cycle c;
        long x = top;
        do {
            c.pts.push_back(x);
            seen.insert(x);
            x = zeta(x);
        } while (x != top);
        for (std::size_t i = 1; i < c.pts.size(); ++i)
            if (c.pts[i] >= c.pts[i - 1])
                return false;
        cycles.push_back(c);
    }
    int total = 0;
    for (auto& c : cycles)
        total += static_cast<int>(c.pts.size()) - 1;
    if (total != k)
        return false;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (!totally_disjoint(cycles[i], cycles[j]))
                return false;
    return true;
}

PermSum schubert_H(int k, const IntegerPermutation& u, int r)
{
    PermSum out;
    long n = std::max(u.max_moved(), static_cast<long>(r) + 1) + k;
    std::function<void(const IntegerPermutation&, long, int)> rec = [&](const IntegerPermutation& v, long last,
                                                                         int left) {
        if (left == 0) {
            out.add(v, 1);
            return;
        }
        for (long b = last + 1; b <= n; ++b)
            for (long a = 1; a < b; ++a)
                if (auto nx = monk_cover(v, a, b, r))
                    rec(*nx, b, left - 1);
    };
    rec(u, 0, k);
    return out;
}

PermSum schubert_H(int k, const PermSum& v, int r)
{
    PermSum out;
    for (auto& [u, c] : v.terms())
        out.add(schubert_H(k, u, r), c);
    return out;
}

namespace {

// Pattern entry: each coordinate names a variable.
struct Pat {
    char first, second;
};
using Triple = std::array<Pat, 3>;

struct Rule {
    Triple lhs, rhs;
    bool generic; // Greek-letter family, with disjointness condition
    char disjoint_l[4], disjoint_r[4];
};

// Application order (positions i-1, i, i+1).
const std::vector<Rule>& rules()
{
    static const std::vector<Rule> r = {
        // A
        {{{{'B', 'b'}, {'A', 'a'}, {'G', 'c'}}}, {{{'B', 'b'}, {'G', 'c'}, {'A', 'a'}}}, true, "aA", "cG"},
        {{{{'G', 'c'}, {'A', 'a'}, {'B', 'b'}}}, {{{'A', 'a'}, {'G', 'c'}, {'B', 'b'}}}, true, "aA", "cG"},
        // B
        {{{{'b', 'd'}, {'a', 'b'}, {'b', 'c'}}}, {{{'b', 'c'}, {'c', 'd'}, {'a', 'c'}}}, false, "", ""},
        {{{{'b', 'c'}, {'a', 'b'}, {'b', 'd'}}}, {{{'a', 'c'}, {'c', 'd'}, {'b', 'c'}}}, false, "", ""},
        // C
        {{{{'a', 'c'}, {'A', 'a'}, {'B', 'b'}}}, {{{'B', 'b'}, {'a', 'c'}, {'A', 'a'}}}, true, "Aac", "bB"},
        {{{{'B', 'b'}, {'A', 'a'}, {'a', 'c'}}}, {{{'A', 'a'}, {'a', 'c'}, {'B', 'b'}}}, true, "Aac", "bB"},
    };
    return r;
}

bool match_pattern(const Triple& pat, const std::array<MonkLabel, 3>& t, std::map<char, long>& env)
{
    for (int i = 0; i < 3; ++i)
        for (auto [var, val] : {std::pair{pat[i].first, t[i].a}, std::pair{pat[i].second, t[i].b}}) {
            auto [it, fresh] = env.try_emplace(var, val);
            if (!fresh && it->second != val)
                return false;
        }
    return true;
}

bool rule_conditions(const Rule& rule, std::map<char, long>& env)
{
    if (rule.generic) {
        if (!(env['a'] < env['b'] && env['b'] < env['c']))
            return false;
        std::set<long> l, r;
        for (const char* p = rule.disjoint_l; *p; ++p)
            l.insert(env[*p]);
        for (const char* p = rule.disjoint_r; *p; ++p)
            r.insert(env[*p]);
        for (long x : l)
            if (r.count(x))
                return false;
        return true;
    }
    return env['a'] < env['b'] && env['b'] < env['c'] && env['c'] < env['d'];
}

std::array<MonkLabel, 3> instantiate(const Triple& pat, std::map<char, long>& env)
{
    std::array<MonkLabel, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = {env[pat[i].first], env[pat[i].second]};
    return out;
}

} // namespace

Chain phi_involution(int i, const Chain& c)
{
    int n = static_cast<int>(c.size());
    if (i <= 1 || i >= n)
        throw domain_error("phi_involution: index out of range");
    auto d = b_descents(c);
    if (static_cast<int>(d.count(i - 1)) + static_cast<int>(d.count(i)) != 1)
        return c;
    std::array<MonkLabel, 3> t{c[i - 2], c[i - 1], c[i]};
    for (auto& rule : rules())
        for (int dir = 0; dir < 2; ++dir) {
            const Triple& from = dir ? rule.rhs : rule.lhs;
            const Triple& to = dir ? rule.lhs : rule.rhs;
            std::map<char, long> env;
            if (!match_pattern(from, t, env) || !rule_conditions(rule, env))
                continue;
            auto img = instantiate(to, env);
            Chain out = c;
            out[i - 2] = img[0];
            out[i - 1] = img[1];
            out[i] = img[2];
            return out;
        }
    throw unmatched_case("phi_involution: triple matches no case");
}

} // namespace affschur
