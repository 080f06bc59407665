#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

using Int = boost::multiprecision::cpp_int;

using Partition = std::vector<int>;
using Composition = std::vector<int>;

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by M_to_m when two rearrangements carry different coefficients.
class not_symmetric : public domain_error {
public:
    not_symmetric(Composition a, Composition b);
    Composition first, second;
};

enum class Basis { M, F, m, h, s, R, hN };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);
bool basis_uses_compositions(Basis b);

// Sparse linear combination keyed by K; zero coefficients are never stored.
template <class K>
class LinComb {
public:
    using map_type = std::map<K, Int>;

    void add(const K& key, const Int& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    void add(const LinComb& o, const Int& scale = 1)
    {
        for (auto& [k, c] : o.terms_)
            add(k, c * scale);
    }
    Int coeff(const K& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Int(0) : it->second;
    }
    const map_type& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

private:
    map_type terms_;
};

struct Expansion {
    Basis basis = Basis::F;
    LinComb<std::vector<int>> terms;

    Expansion() = default;
    explicit Expansion(Basis b) : basis(b) {}

    void add(const std::vector<int>& idx, const Int& c) { terms.add(idx, c); }
    Int coeff(const std::vector<int>& idx) const { return terms.coeff(idx); }
    bool operator==(const Expansion& o) const { return basis == o.basis && terms == o.terms; }
};

Partition make_partition(std::vector<int> parts);
Composition make_composition(std::vector<int> parts);
int size_of(const std::vector<int>& v);
Partition sorted_partition(std::vector<int> parts);
Partition conjugate(const Partition& p);
bool dominates(const Partition& lam, const Partition& mu);

std::vector<Partition> partitions_of(int n, int max_part = -1);
std::vector<Composition> compositions_of(int n);

std::set<int> descent_set(const Composition& alpha);
Composition composition_from_descents(int n, const std::set<int>& descents);
bool refines(const Composition& beta, const Composition& alpha);

Expansion F_to_M(const Expansion& e);
Expansion M_to_F(const Expansion& e);
bool is_symmetric(const Expansion& e);
Expansion M_to_m(const Expansion& e);
Int kostka(const Partition& lam, const Partition& mu);
Expansion s_to_m(const Expansion& e);
Expansion m_to_s(const Expansion& e);
Expansion F_to_s(const Expansion& e);
Expansion schur_in_F(const Partition& lam);
Expansion ribbon_from_h(const Composition& alpha);

// Target basis conversion for the CLI; accepts F or M input.
Expansion convert(const Expansion& e, Basis target);

std::string to_json_string(const Expansion& e);
std::string to_pretty(const Expansion& e);

} // namespace affschur
