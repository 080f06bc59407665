#include "affschur/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace affschur {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long mod(long a, long b) { return a - floor_div(a, b) * b; }

} // namespace

AffinePermutation AffinePermutation::from_window(int k, std::vector<long> window)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    long n = k + 1;
    if (static_cast<long>(window.size()) != n)
        throw std::invalid_argument("window must have k+1 = " + std::to_string(n) + " entries");
    std::set<long> res;
    long sum = 0;
    for (long x : window) {
        if (!res.insert(mod(x, n)).second)
            throw std::invalid_argument("window entries must be pairwise incongruent mod k+1");
        sum += x;
    }
    if (sum != n * (n + 1) / 2)
        throw std::invalid_argument("window sum must be (k+2 choose 2) = " + std::to_string(n * (n + 1) / 2));
    AffinePermutation u;
    u.k_ = k;
    u.win_ = std::move(window);
    return u;
}

AffinePermutation AffinePermutation::identity(int k)
{
    std::vector<long> w;
    for (long i = 1; i <= k + 1; ++i)
        w.push_back(i);
    return from_window(k, w);
}

long AffinePermutation::operator()(long i) const
{
    long q = floor_div(i - 1, n());
    return win_[i - 1 - q * n()] + q * n();
}

AffinePermutation AffinePermutation::swapped(long a, long b) const
{
    long d = b - a;
    AffinePermutation v = *this;
    for (long p = 1; p <= n(); ++p) {
        if (mod(p - a, n()) == 0)
            v.win_[p - 1] = (*this)(p + d);
        else if (mod(p - b, n()) == 0)
            v.win_[p - 1] = (*this)(p - d);
    }
    return v;
}

AffinePermutation AffinePermutation::times_s(int i) const { return swapped(i, i + 1); }

std::string AffinePermutation::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < win_.size(); ++i)
        os << (i ? "," : "") << win_[i];
    return os.str();
}

AffinePermutation parse_affine(int k, const std::string& text)
{
    std::vector<long> w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad window entry: " + tok);
        w.push_back(v);
    }
    return AffinePermutation::from_window(k, w);
}

long affine_length(const AffinePermutation& u)
{
    long n = u.n(), len = 0;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j)
            len += std::labs(floor_div(u(j) - u(i), n));
    return len;
}

namespace {

long position_of(const AffinePermutation& u, long v)
{
    long n = u.n();
    for (long r = 1; r <= n; ++r)
        if (mod(v - u(r), n) == 0)
            return r + (v - u(r));
    return 0;
}

// Smallest position holding a positive value, largest holding a non-positive one.
std::pair<long, long> sign_range(const AffinePermutation& u)
{
    long n = u.n();
    long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
    for (long r = 1; r <= n; ++r) {
        long first_pos = r + (floor_div(-u(r), n) + 1) * n;
        long last_neg = r + floor_div(-u(r), n) * n;
        lo = std::min(lo, first_pos);
        hi = std::max(hi, last_neg);
    }
    return {lo, hi};
}

} // namespace

bool is_0_grassmannian(const AffinePermutation& u)
{
    long prev = std::numeric_limits<long>::min();
    for (long v = 1; v <= u.n(); ++v) {
        long p = position_of(u, v);
        if (p < prev)
            return false;
        prev = p;
    }
    return true;
}

Partition core_from_grassmannian(const AffinePermutation& u)
{
    if (!is_0_grassmannian(u))
        throw domain_error("core_from_grassmannian: permutation is not 0-grassmannian");
    auto [lo, hi] = sign_range(u);
    std::vector<int> parts;
    int positives = 0;
    for (long p = lo; p <= hi; ++p) {
        if (u(p) > 0)
            ++positives;
        else if (positives > 0)
            parts.push_back(positives);
    }
    return sorted_partition(parts);
}

bool is_core(const Partition& p, int n)
{
    Partition conj = conjugate(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            if (p[i] - j + conj[j] - static_cast<int>(i) - 1 == n)
                return false;
    return true;
}

std::optional<AffinePermutation> weak_cover(const AffinePermutation& u, int i)
{
    if (u(i) > u(i + 1))
        return std::nullopt;
    AffinePermutation v = u.times_s(i);
    if (!is_0_grassmannian(v))
        return std::nullopt;
    return v;
}

bool is_cyclically_increasing(const std::vector<int>& seq, int k)
{
    int n = k + 1;
    std::set<int> s;
    for (int x : seq) {
        if (x < 0 || x > k || !s.insert(x).second)
            return false;
    }
    int absent = -1;
    for (int r = 0; r < n; ++r)
        if (!s.count(r)) {
            absent = r;
            break;
        }
    if (absent < 0)
        return false;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (mod(seq[i] - absent, n) <= mod(seq[i - 1] - absent, n))
            return false;
    return true;
}

std::vector<std::vector<int>> cyclically_increasing_sequences(int m, int k)
{
    std::vector<std::vector<int>> out;
    int n = k + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m)
            continue;
        std::vector<int> seq;
        for (int r = 0; r < n; ++r)
            if (mask & (1u << r))
                seq.push_back(r);
        int absent = 0;
        while (mask & (1u << absent))
            ++absent;
        std::sort(seq.begin(), seq.end(), [&](int x, int y) { return mod(x - absent, n) < mod(y - absent, n); });
        out.push_back(seq);
    }
    return out;
}

AffSum weak_H(int m, const AffinePermutation& u)
{
    if (m < 1 || m > u.k())
        throw domain_error("weak_H: m must lie in 1..k");
    AffSum out;
    for (auto& seq : cyclically_increasing_sequences(m, u.k())) {
        std::optional<AffinePermutation> cur = u;
        for (int i : seq) {
            cur = weak_cover(*cur, i);
            if (!cur)
                break;
        }
        if (cur)
            out.add(*cur, 1);
    }
    return out;
}

AffSum weak_H(int m, const AffSum& v)
{
    AffSum out;
    for (auto& [u, c] : v.terms())
        out.add(weak_H(m, u), c);
    return out;
}

Expansion weak_K(const AffinePermutation& u, const AffinePermutation& w)
{
    long rank = affine_length(w) - affine_length(u);
    Expansion m(Basis::M);
    if (rank < 0)
        return M_to_F(m);
    for (auto& alpha : compositions_of(static_cast<int>(rank))) {
        if (std::any_of(alpha.begin(), alpha.end(), [&](int p) { return p > u.k(); }))
            continue;
        AffSum cur;
        cur.add(u, 1);
        for (int p : alpha)
            cur = weak_H(p, cur);
        m.add(alpha, cur.coeff(w));
    }
    return M_to_F(m);
}

Expansion kschur_in_h(int k, const Partition& lam)
{
    if (!lam.empty() && lam[0] > k)
        throw domain_error("kschur_in_h: partition is not k-bounded");
    int n = size_of(lam);
    auto rows = partitions_of(n, k);
    std::vector<AffSum> K;
    for (auto& mu : rows) {
        AffSum cur;
        cur.add(AffinePermutation::identity(k), 1);
        for (int p : mu)
            cur = weak_H(p, cur);
        K.push_back(cur);
    }
    std::map<AffinePermutation, Expansion> S; // paired columns, in h
    std::map<Partition, AffinePermutation> pair_of;
    std::vector<bool> done(rows.size(), false);
    for (std::size_t round = 0; round < rows.size(); ++round) {
        bool progress = false;
        for (std::size_t i = 0; i < rows.size() && !progress; ++i) {
            if (done[i])
                continue;
            const AffinePermutation* col = nullptr;
            int open = 0;
            for (auto& [v, c] : K[i].terms())
                if (!S.count(v)) {
                    ++open;
                    col = &v;
                }
            if (open != 1)
                continue;
            if (K[i].coeff(*col) != 1)
                throw domain_error("kschur_in_h: pivot entry is not 1");
            Expansion e(Basis::h);
            e.add(rows[i], 1);
            for (auto& [v, c] : K[i].terms())
                if (!(v == *col))
                    e.terms.add(S.at(v).terms, -c);
            pair_of.emplace(rows[i], *col);
            S.emplace(*col, e);
            done[i] = true;
            progress = true;
        }
        if (!progress)
            throw domain_error("kschur_in_h: matrix is not triangular");
    }
    return S.at(pair_of.at(lam));
}

std::optional<AffinePermutation> affine_bruhat_cover(const AffinePermutation& u, long a, long b)
{
    if (a >= b || b - a > u.k())
        throw domain_error("affine label needs a < b and b - a <= k");
    long ua = u(a), ub = u(b);
    if (ua > ub)
        return std::nullopt;
    for (long i = a + 1; i < b; ++i)
        if (ua < u(i) && u(i) < ub)
            return std::nullopt;
    return u.swapped(a, b);
}

std::optional<AffinePermutation> zero_bruhat_op(const AffinePermutation& u, long a, long b)
{
    if (a >= b || b - a > u.k())
        throw domain_error("affine label needs a < b and b - a <= k");
    if (!(u(a) <= 0 && 0 < u(b)))
        return std::nullopt;
    return affine_bruhat_cover(u, a, b);
}

std::optional<AffinePermutation> apply_word(const OperatorWord& w, const AffinePermutation& u)
{
    std::optional<AffinePermutation> cur = u;
    for (auto& l : w) {
        cur = zero_bruhat_op(*cur, l.a, l.b);
        if (!cur)
            break;
    }
    return cur;
}

std::vector<std::pair<AffineLabel, AffinePermutation>> zero_ops_from(const AffinePermutation& u)
{
    std::vector<std::pair<AffineLabel, AffinePermutation>> out;
    long n = u.n();
    for (long a0 = 1; a0 <= n; ++a0)
        for (long d = 1; d <= u.k(); ++d) {
            long b0 = a0 + d;
            long mlo = floor_div(-u(b0), n) + 1, mhi = floor_div(-u(a0), n);
            for (long m = mlo; m <= mhi; ++m)
                if (auto v = zero_bruhat_op(u, a0 + m * n, b0 + m * n))
                    out.push_back({{a0 + m * n, b0 + m * n}, *v});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AffineLabel> enumerate_label_reps(const AffinePermutation& u, long a, long b)
{
    std::vector<AffineLabel> out;
    long n = u.n();
    long mlo = floor_div(-u(b), n) + 1, mhi = floor_div(-u(a), n);
    for (long m = mlo; m <= mhi; ++m)
        if (zero_bruhat_op(u, a + m * n, b + m * n))
            out.push_back({a + m * n, b + m * n});
    return out;
}

std::vector<OperatorWord> enumerate_operator_words(const AffinePermutation& u, const AffinePermutation& w)
{
    std::vector<OperatorWord> out;
    long steps = affine_length(w) - affine_length(u);
    if (steps < 0)
        return out;
    std::map<AffinePermutation, bool> reach;
    std::function<bool(const AffinePermutation&, long)> can = [&](const AffinePermutation& v, long left) {
        if (left == 0)
            return v == w;
        auto it = reach.find(v);
        if (it != reach.end())
            return it->second;
        bool ok = false;
        for (auto& [l, nx] : zero_ops_from(v))
            if ((ok = can(nx, left - 1)))
                break;
        reach[v] = ok;
        return ok;
    };
    OperatorWord cur;
    std::function<void(const AffinePermutation&, long)> rec = [&](const AffinePermutation& v, long left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (auto& [l, nx] : zero_ops_from(v)) {
            if (!can(nx, left - 1))
                continue;
            cur.push_back(l);
            rec(nx, left - 1);
            cur.pop_back();
        }
    };
    if (can(u, steps))
        rec(u, steps);
    std::sort(out.begin(), out.end());
    return out;
}

Expansion words_to_F(const std::vector<OperatorWord>& words)
{
    Expansion out(Basis::F);
    for (auto& w : words) {
        std::set<int> d;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i].b > w[i + 1].b)
                d.insert(static_cast<int>(i) + 1);
        out.add(composition_from_descents(static_cast<int>(w.size()), d), 1);
    }
    return out;
}

Expansion affine_K(const AffinePermutation& u, const AffinePermutation& w)
{
    return words_to_F(enumerate_operator_words(u, w));
}

AffSum affine_H(int m, const AffinePermutation& u)
{
    AffSum out;
    std::function<void(const AffinePermutation&, long, int)> rec = [&](const AffinePermutation& v, long last,
                                                                       int left) {
        if (left == 0) {
            out.add(v, 1);
            return;
        }
        for (auto& [l, nx] : zero_ops_from(v))
            if (l.b > last)
                rec(nx, l.b, left - 1);
    };
    rec(u, std::numeric_limits<long>::min(), m);
    return out;
}

AffSum affine_H(int m, const AffSum& v)
{
    AffSum out;
    for (auto& [u, c] : v.terms())
        out.add(affine_H(m, u), c);
    return out;
}

std::vector<AffinePermutation> grassmannians_of_length(int k, int len)
{
    // every 0-grassmannian is reached from the identity by weak covers
    std::set<AffinePermutation> level{AffinePermutation::identity(k)};
    for (int l = 0; l < len; ++l) {
        std::set<AffinePermutation> next;
        for (auto& u : level)
            for (int i = 0; i <= k; ++i)
                if (auto v = weak_cover(u, i))
                    next.insert(*v);
        level.swap(next);
    }
    return {level.begin(), level.end()};
}

} // namespace affschur
