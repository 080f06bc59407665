#include "affschur/symcore.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace affschur {

not_symmetric::not_symmetric(Composition a, Composition b)
    : domain_error("expansion is not symmetric"), first(std::move(a)), second(std::move(b))
{
}

const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::M: return "M";
    case Basis::F: return "F";
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::R: return "R";
    case Basis::hN: return "hN";
    }
    return "?";
}

Basis basis_from_name(const std::string& name)
{
    for (Basis b : {Basis::M, Basis::F, Basis::m, Basis::h, Basis::s, Basis::R, Basis::hN})
        if (name == basis_name(b))
            return b;
    throw std::invalid_argument("unknown basis: " + name);
}

bool basis_uses_compositions(Basis b)
{
    return b == Basis::M || b == Basis::F || b == Basis::R || b == Basis::hN;
}

Partition make_partition(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return parts;
}

Composition make_composition(std::vector<int> parts)
{
    for (int p : parts)
        if (p <= 0)
            throw std::invalid_argument("composition parts must be positive");
    return parts;
}

int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Partition sorted_partition(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return parts;
}

Partition conjugate(const Partition& p)
{
    Partition c;
    if (p.empty())
        return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j)
                ++cnt;
        c.push_back(cnt);
    }
    return c;
}

bool dominates(const Partition& lam, const Partition& mu)
{
    int a = 0, b = 0;
    std::size_t n = std::max(lam.size(), mu.size());
    for (std::size_t i = 0; i < n; ++i) {
        a += i < lam.size() ? lam[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a < b)
            return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n, int max_part)
{
    if (max_part < 0 || max_part > n)
        max_part = n;
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int bound) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, bound); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> d;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                d.insert(i);
        out.push_back(composition_from_descents(n, d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> descent_set(const Composition& alpha)
{
    std::set<int> d;
    int s = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        s += alpha[i];
        d.insert(s);
    }
    return d;
}

Composition composition_from_descents(int n, const std::set<int>& descents)
{
    Composition c;
    int prev = 0;
    for (int d : descents) {
        if (d < 1 || d > n - 1)
            throw domain_error("descent " + std::to_string(d) + " outside 1.." + std::to_string(n - 1));
        c.push_back(d - prev);
        prev = d;
    }
    if (n > 0)
        c.push_back(n - prev);
    return c;
}

bool refines(const Composition& beta, const Composition& alpha)
{
    if (size_of(beta) != size_of(alpha))
        throw domain_error("refines: size mismatch");
    auto da = descent_set(alpha), db = descent_set(beta);
    return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

namespace {

void require_basis(const Expansion& e, Basis b, const char* op)
{
    if (e.basis != b)
        throw domain_error(std::string(op) + ": expected basis " + basis_name(b) + ", got " + basis_name(e.basis));
}

// Calls f(beta, extra) for every beta whose descent set contains D(alpha);
// extra is the number of added descents.
template <class Fn>
void for_each_refinement(const Composition& alpha, Fn f)
{
    int n = size_of(alpha);
    auto d = descent_set(alpha);
    std::vector<int> free;
    for (int i = 1; i < n; ++i)
        if (!d.count(i))
            free.push_back(i);
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        auto e = d;
        int extra = 0;
        for (std::size_t j = 0; j < free.size(); ++j)
            if (mask & (1u << j)) {
                e.insert(free[j]);
                ++extra;
            }
        f(composition_from_descents(n, e), extra);
    }
}

// All horizontal strips nu/lam of size k, with nu bounded by outer.
void horizontal_strips(const Partition& lam, int k, const Partition& outer,
                       const std::function<void(const Partition&)>& f)
{
    std::size_t rows = outer.size();
    Partition nu(rows, 0);
    for (std::size_t i = 0; i < lam.size(); ++i)
        nu[i] = lam[i];
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == rows) {
            if (rest == 0)
                f(sorted_partition(nu));
            return;
        }
        int base = i < lam.size() ? lam[i] : 0;
        int cap = outer[i];
        if (i > 0)
            cap = std::min(cap, i - 1 < lam.size() ? lam[i - 1] : 0);
        for (int add = 0; base + add <= cap && add <= rest; ++add) {
            nu[i] = base + add;
            rec(i + 1, rest - add);
        }
        nu[i] = base;
    };
    rec(0, k);
}

} // namespace

Expansion F_to_M(const Expansion& e)
{
    require_basis(e, Basis::F, "F_to_M");
    Expansion out(Basis::M);
    for (auto& [alpha, c] : e.terms.terms())
        for_each_refinement(alpha, [&](const Composition& beta, int) { out.add(beta, c); });
    return out;
}

Expansion M_to_F(const Expansion& e)
{
    require_basis(e, Basis::M, "M_to_F");
    Expansion out(Basis::F);
    for (auto& [alpha, c] : e.terms.terms())
        for_each_refinement(alpha, [&](const Composition& beta, int extra) {
            out.add(beta, extra % 2 ? Int(-c) : c);
        });
    return out;
}

namespace {

// Returns a witness pair when symmetry fails.
bool symmetric_witness(const Expansion& e, Composition& a, Composition& b)
{
    std::map<Partition, std::pair<Composition, std::size_t>> classes;
    for (auto& [alpha, c] : e.terms.terms()) {
        Partition key = sorted_partition(alpha);
        auto [it, fresh] = classes.try_emplace(key, alpha, 0);
        if (!fresh && e.coeff(it->second.first) != c) {
            a = it->second.first;
            b = alpha;
            return false;
        }
        ++it->second.second;
    }
    for (auto& [key, info] : classes) {
        // count distinct rearrangements of key
        std::map<int, int> mult;
        for (int x : key)
            ++mult[x];
        Int total = 1;
        int placed = 0;
        for (auto& [part, m] : mult)
            for (int i = 1; i <= m; ++i) {
                ++placed;
                total = total * placed / i;
            }
        if (total == info.second)
            continue;
        Composition perm(key.rbegin(), key.rend());
        do {
            if (e.coeff(perm) == 0) {
                a = info.first;
                b = perm;
                return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

} // namespace

bool is_symmetric(const Expansion& e)
{
    require_basis(e, Basis::M, "is_symmetric");
    Composition a, b;
    return symmetric_witness(e, a, b);
}

Expansion M_to_m(const Expansion& e)
{
    require_basis(e, Basis::M, "M_to_m");
    Composition a, b;
    if (!symmetric_witness(e, a, b))
        throw not_symmetric(a, b);
    Expansion out(Basis::m);
    for (auto& [alpha, c] : e.terms.terms()) {
        Partition p = sorted_partition(alpha);
        if (p == alpha)
            out.add(p, c);
    }
    return out;
}

Int kostka(const Partition& lam, const Partition& mu)
{
    if (size_of(lam) != size_of(mu))
        throw domain_error("kostka: size mismatch");
    // Fill value i as a horizontal strip of size mu_i.
    Int count = 0;
    std::function<void(const Partition&, std::size_t)> rec = [&](const Partition& cur, std::size_t i) {
        if (i == mu.size()) {
            if (cur == lam)
                ++count;
            return;
        }
        horizontal_strips(cur, mu[i], lam, [&](const Partition& nu) { rec(nu, i + 1); });
    };
    rec(Partition{}, 0);
    return count;
}

Expansion s_to_m(const Expansion& e)
{
    require_basis(e, Basis::s, "s_to_m");
    Expansion out(Basis::m);
    for (auto& [lam, c] : e.terms.terms())
        for (auto& mu : partitions_of(size_of(lam))) {
            if (!dominates(lam, mu))
                continue;
            Int kk = kostka(lam, mu);
            if (kk != 0)
                out.add(mu, c * kk);
        }
    return out;
}

Expansion m_to_s(const Expansion& e)
{
    require_basis(e, Basis::m, "m_to_s");
    // K is unitriangular in dominance, hence in lex order: peel the largest term.
    Expansion rest = e;
    Expansion out(Basis::s);
    while (!rest.terms.empty()) {
        auto it = std::prev(rest.terms.terms().end());
        Partition lam = it->first;
        Int c = it->second;
        out.add(lam, c);
        Expansion sl(Basis::s);
        sl.add(lam, 1);
        rest.terms.add(s_to_m(sl).terms, -c);
    }
    return out;
}

Expansion F_to_s(const Expansion& e)
{
    require_basis(e, Basis::F, "F_to_s");
    return m_to_s(M_to_m(F_to_M(e)));
}

Expansion schur_in_F(const Partition& lam)
{
    Expansion out(Basis::F);
    int n = size_of(lam);
    // row_of[v] = row holding v; fill 1..n one at a time.
    std::vector<int> row_of(n + 1, 0);
    Partition cur(lam.size(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            std::set<int> d;
            for (int i = 1; i < n; ++i)
                if (row_of[i + 1] > row_of[i])
                    d.insert(i);
            out.add(composition_from_descents(n, d), 1);
            return;
        }
        for (std::size_t r = 0; r < lam.size(); ++r) {
            if (cur[r] >= lam[r])
                continue;
            if (r > 0 && cur[r - 1] <= cur[r])
                continue;
            ++cur[r];
            row_of[v] = static_cast<int>(r);
            rec(v + 1);
            --cur[r];
        }
    };
    rec(1);
    return out;
}

Expansion ribbon_from_h(const Composition& alpha)
{
    Expansion out(Basis::hN);
    int n = size_of(alpha);
    auto d = descent_set(alpha);
    std::vector<int> ds(d.begin(), d.end());
    for (unsigned mask = 0; mask < (1u << ds.size()); ++mask) {
        std::set<int> e;
        int dropped = 0;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (mask & (1u << j))
                e.insert(ds[j]);
            else
                ++dropped;
        }
        out.add(composition_from_descents(n, e), dropped % 2 ? -1 : 1);
    }
    return out;
}

Expansion convert(const Expansion& e, Basis target)
{
    if (e.basis == target)
        return e;
    if (e.basis == Basis::F) {
        if (target == Basis::M)
            return F_to_M(e);
        if (target == Basis::m)
            return M_to_m(F_to_M(e));
        if (target == Basis::s)
            return F_to_s(e);
    }
    if (e.basis == Basis::M) {
        if (target == Basis::F)
            return M_to_F(e);
        if (target == Basis::m)
            return M_to_m(e);
        if (target == Basis::s)
            return m_to_s(M_to_m(e));
    }
    throw domain_error(std::string("no conversion from ") + basis_name(e.basis) + " to " + basis_name(target));
}

namespace {

nlohmann::json coeff_json(const Int& c)
{
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

} // namespace

std::string to_json_string(const Expansion& e)
{
    nlohmann::json j;
    j["basis"] = basis_name(e.basis);
    j["terms"] = nlohmann::json::array();
    for (auto& [idx, c] : e.terms.terms())
        j["terms"].push_back({{"index", idx}, {"coeff", coeff_json(c)}});
    return j.dump();
}

std::string to_pretty(const Expansion& e)
{
    if (e.terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // dominant index first
    for (auto it = e.terms.terms().rbegin(); it != e.terms.terms().rend(); ++it) {
        auto& [idx, c] = *it;
        Int a = c < 0 ? Int(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (idx.empty()) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << "*";
        os << basis_name(e.basis) << "[";
        for (std::size_t i = 0; i < idx.size(); ++i)
            os << (i ? "," : "") << idx[i];
        os << "]";
    }
    return os.str();
}

} // namespace affschur
