#pragma once

#include "affschur/permgroup.hpp"
#include "affschur/symcore.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace affschur {

struct MonkLabel {
    long a, b;
    auto operator<=>(const MonkLabel&) const = default;
};

// Labels in application order.
using Chain = std::vector<MonkLabel>;

struct Interval {
    IntegerPermutation u, w;
    int r;
};

using PermSum = LinComb<IntegerPermutation>;

std::optional<IntegerPermutation> monk_cover(const IntegerPermutation& u, long a, long b, int r);
std::optional<IntegerPermutation> apply_chain(const Chain& c, const IntegerPermutation& u, int r);

Interval zeta_to_interval(const IntegerPermutation& zeta);
std::optional<Chain> canonical_chain(const IntegerPermutation& u, const IntegerPermutation& w, int r);
std::vector<Chain> enumerate_chains(const IntegerPermutation& u, const IntegerPermutation& w, int r);

std::set<int> b_descents(const Chain& c);
Expansion schubert_K(const IntegerPermutation& u, const IntegerPermutation& w, int r);
Expansion chains_to_F(const std::vector<Chain>& chains);

bool is_k_increasing(const IntegerPermutation& zeta, int k);
PermSum schubert_H(int k, const IntegerPermutation& u, int r);
PermSum schubert_H(int k, const PermSum& v, int r);

// Thrown when a triple matches none of the listed cases.
class unmatched_case : public domain_error {
public:
    using domain_error::domain_error;
};

// i is 1-based and acts on positions i-1, i, i+1.
Chain phi_involution(int i, const Chain& c);

} // namespace affschur
