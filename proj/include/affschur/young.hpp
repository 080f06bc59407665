#pragma once

#include "affschur/permgroup.hpp"
#include "affschur/symcore.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace affschur {

struct SkewShape {
    Partition inner;
    Partition outer;
    bool operator==(const SkewShape& o) const { return inner == o.inner && outer == o.outer; }
};

using PartitionSum = LinComb<Partition>;

// Cells are (column, row), both from 1, row 1 at the bottom. Content is column - row.
std::vector<std::pair<int, Partition>> covers_up(const Partition& lam);
std::optional<Partition> apply_u(int r, const Partition& lam);
// Letters are applied in sequence order, first letter first.
std::optional<Partition> apply_word(const std::vector<int>& word, const Partition& lam);

IntegerPermutation border_word(const Partition& lam);

SkewShape skew_from_321(const IntegerPermutation& p);
// Same construction, adding one cell per letter of the given reduced word.
SkewShape skew_from_word(const std::vector<long>& word);
// Contents of outer/inner read row by row from the bottom, left to right.
std::vector<int> reading_word(const SkewShape& s);

PartitionSum young_H(int k, const Partition& lam);
PartitionSum young_H(int k, const PartitionSum& v);

bool is_consecutive_cycle_form(const IntegerPermutation& zeta, int k);

bool contains(const Partition& outer, const Partition& inner);
Expansion young_K(const Partition& lam, const Partition& nu);

} // namespace affschur
