#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace affschur {

// Bijection of the integers moving finitely many points.
class IntegerPermutation {
public:
    IntegerPermutation() = default;

    // images[i] is the image of start+i.
    static IntegerPermutation from_window(const std::vector<long>& images, long start = 1);
    static IntegerPermutation from_map(const std::map<long, long>& moved);
    static IntegerPermutation simple(long r); // s_r swaps r and r+1
    static IntegerPermutation transposition(long a, long b);

    long operator()(long i) const;
    IntegerPermutation inverse() const;
    bool is_identity() const { return moved_.empty(); }
    const std::map<long, long>& moved() const { return moved_; }
    long min_moved() const;
    long max_moved() const;

    std::vector<long> window(long lo, long hi) const;
    std::string to_string(long lo, long hi) const;

    bool operator==(const IntegerPermutation& o) const { return moved_ == o.moved_; }
    bool operator<(const IntegerPermutation& o) const { return moved_ < o.moved_; }

private:
    std::map<long, long> moved_;
};

// (pq)(i) = p(q(i))
IntegerPermutation multiply(const IntegerPermutation& p, const IntegerPermutation& q);
IntegerPermutation word_product(const std::vector<long>& word);

long length(const IntegerPermutation& p);
std::vector<long> reduced_word(const IntegerPermutation& p);
// Lexicographically largest reduced word.
std::vector<long> lex_max_reduced_word(const IntegerPermutation& p);

bool is_321_avoiding(const IntegerPermutation& p);
// Returns false and fills the positions of a 321 pattern when one exists.
bool find_321(const IntegerPermutation& p, long& i, long& j, long& k);

std::set<long> up_set(const IntegerPermutation& zeta);

IntegerPermutation parse_window(const std::string& text, long start = 1);

} // namespace affschur
