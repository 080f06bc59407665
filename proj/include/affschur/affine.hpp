#pragma once

#include "affschur/symcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affschur {

// Element of the k-affine symmetric group; u(i + n) = u(i) + n with n = k + 1.
class AffinePermutation {
public:
    AffinePermutation() = default;
    // Validates residues and window sum.
    static AffinePermutation from_window(int k, std::vector<long> window);
    static AffinePermutation identity(int k);

    int k() const { return k_; }
    long n() const { return k_ + 1; }
    const std::vector<long>& window() const { return win_; }
    long operator()(long i) const;

    // Right multiplication by the affine transposition swapping a and b (mod n).
    AffinePermutation swapped(long a, long b) const;
    AffinePermutation times_s(int i) const;

    std::string to_string() const;
    auto operator<=>(const AffinePermutation&) const = default;

private:
    int k_ = 0;
    std::vector<long> win_;
};

struct AffineLabel {
    long a, b;
    auto operator<=>(const AffineLabel&) const = default;
};
using OperatorWord = std::vector<AffineLabel>;
using AffSum = LinComb<AffinePermutation>;

AffinePermutation parse_affine(int k, const std::string& text);

long affine_length(const AffinePermutation& u);
bool is_0_grassmannian(const AffinePermutation& u);
Partition core_from_grassmannian(const AffinePermutation& u);
bool is_core(const Partition& p, int n);

std::optional<AffinePermutation> weak_cover(const AffinePermutation& u, int i);
bool is_cyclically_increasing(const std::vector<int>& seq, int k);
std::vector<std::vector<int>> cyclically_increasing_sequences(int m, int k);
AffSum weak_H(int m, const AffinePermutation& u);
AffSum weak_H(int m, const AffSum& v);
Expansion weak_K(const AffinePermutation& u, const AffinePermutation& w);
Expansion kschur_in_h(int k, const Partition& lam);

std::optional<AffinePermutation> affine_bruhat_cover(const AffinePermutation& u, long a, long b);
std::optional<AffinePermutation> zero_bruhat_op(const AffinePermutation& u, long a, long b);
// Word applied left to right; nullopt as soon as an operator vanishes.
std::optional<AffinePermutation> apply_word(const OperatorWord& w, const AffinePermutation& u);
std::vector<std::pair<AffineLabel, AffinePermutation>> zero_ops_from(const AffinePermutation& u);
std::vector<AffineLabel> enumerate_label_reps(const AffinePermutation& u, long a, long b);
std::vector<OperatorWord> enumerate_operator_words(const AffinePermutation& u, const AffinePermutation& w);
Expansion words_to_F(const std::vector<OperatorWord>& words);
Expansion affine_K(const AffinePermutation& u, const AffinePermutation& w);
AffSum affine_H(int m, const AffinePermutation& u);
AffSum affine_H(int m, const AffSum& v);

// All 0-grassmannians of the given length.
std::vector<AffinePermutation> grassmannians_of_length(int k, int len);

} // namespace affschur
