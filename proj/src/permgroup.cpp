#include "affschur/permgroup.hpp"

#include "affschur/symcore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affschur {

IntegerPermutation IntegerPermutation::from_map(const std::map<long, long>& moved)
{
    IntegerPermutation p;
    std::set<long> dom, img;
    for (auto [a, b] : moved) {
        if (a == b)
            continue;
        p.moved_[a] = b;
        dom.insert(a);
        if (!img.insert(b).second)
            throw std::invalid_argument("permutation is not injective");
    }
    if (dom != img)
        throw std::invalid_argument("permutation moves a point outside its support");
    return p;
}

IntegerPermutation IntegerPermutation::from_window(const std::vector<long>& images, long start)
{
    std::map<long, long> m;
    for (std::size_t i = 0; i < images.size(); ++i)
        m[start + static_cast<long>(i)] = images[i];
    return from_map(m);
}

IntegerPermutation IntegerPermutation::simple(long r) { return transposition(r, r + 1); }

IntegerPermutation IntegerPermutation::transposition(long a, long b)
{
    if (a == b)
        return {};
    return from_map({{a, b}, {b, a}});
}

long IntegerPermutation::operator()(long i) const
{
    auto it = moved_.find(i);
    return it == moved_.end() ? i : it->second;
}

IntegerPermutation IntegerPermutation::inverse() const
{
    IntegerPermutation q;
    for (auto [a, b] : moved_)
        q.moved_[b] = a;
    return q;
}

long IntegerPermutation::min_moved() const { return moved_.empty() ? 0 : moved_.begin()->first; }
long IntegerPermutation::max_moved() const { return moved_.empty() ? 0 : moved_.rbegin()->first; }

std::vector<long> IntegerPermutation::window(long lo, long hi) const
{
    std::vector<long> w;
    for (long i = lo; i <= hi; ++i)
        w.push_back((*this)(i));
    return w;
}

std::string IntegerPermutation::to_string(long lo, long hi) const
{
    std::ostringstream os;
    for (long i = lo; i <= hi; ++i)
        os << (i > lo ? "," : "") << (*this)(i);
    return os.str();
}

IntegerPermutation multiply(const IntegerPermutation& p, const IntegerPermutation& q)
{
    std::map<long, long> m;
    for (auto [a, b] : q.moved())
        m[a] = p(b);
    for (auto [a, b] : p.moved())
        if (!q.moved().count(a) && !m.count(a))
            m[a] = b;
    return IntegerPermutation::from_map(m);
}

IntegerPermutation word_product(const std::vector<long>& word)
{
    IntegerPermutation p;
    for (long r : word)
        p = multiply(p, IntegerPermutation::simple(r));
    return p;
}

long length(const IntegerPermutation& p)
{
    if (p.is_identity())
        return 0;
    auto w = p.window(p.min_moved(), p.max_moved());
    long inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                ++inv;
    return inv;
}

std::vector<long> reduced_word(const IntegerPermutation& p)
{
    // strip the leftmost right descent: p = p' s_i
    std::vector<long> rev;
    IntegerPermutation cur = p;
    while (!cur.is_identity()) {
        long i = cur.min_moved();
        while (cur(i) < cur(i + 1))
            ++i;
        rev.push_back(i);
        cur = multiply(cur, IntegerPermutation::simple(i));
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<long> lex_max_reduced_word(const IntegerPermutation& p)
{
    // strip the largest left descent: p = s_i p'
    std::vector<long> word;
    IntegerPermutation cur = p;
    while (!cur.is_identity()) {
        IntegerPermutation inv = cur.inverse();
        long i = cur.max_moved() - 1;
        while (inv(i) < inv(i + 1))
            --i;
        word.push_back(i);
        cur = multiply(IntegerPermutation::simple(i), cur);
    }
    return word;
}

bool find_321(const IntegerPermutation& p, long& i, long& j, long& k)
{
    if (p.is_identity())
        return false;
    long lo = p.min_moved(), hi = p.max_moved();
    for (long m = lo; m <= hi; ++m) {
        long left = lo - 1, right = hi + 1;
        for (long x = lo; x < m; ++x)
            if (p(x) > p(m)) {
                left = x;
                break;
            }
        if (left < lo)
            continue;
        for (long x = m + 1; x <= hi; ++x)
            if (p(x) < p(m)) {
                right = x;
                break;
            }
        if (right > hi)
            continue;
        i = left;
        j = m;
        k = right;
        return true;
    }
    return false;
}

bool is_321_avoiding(const IntegerPermutation& p)
{
    long i, j, k;
    return !find_321(p, i, j, k);
}

std::set<long> up_set(const IntegerPermutation& zeta)
{
    std::set<long> up;
    for (auto [a, b] : zeta.moved())
        if (a < b)
            up.insert(b);
    return up;
}

IntegerPermutation parse_window(const std::string& text, long start)
{
    std::vector<long> images;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad permutation entry: " + tok);
        images.push_back(v);
    }
    return IntegerPermutation::from_window(images, start);
}

} // namespace affschur
