// Acceptance checks. Prints one PASS/FAIL line per criterion.
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so known findings stay visible but do
// not hide new regressions.

#include "affschur/affine.hpp"
#include "affschur/schubert.hpp"
#include "affschur/verify.hpp"
#include "affschur/young.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace affschur;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Expansion make(Basis b, std::initializer_list<std::pair<std::vector<int>, long>> terms)
{
    Expansion e(b);
    for (auto& [idx, c] : terms)
        e.add(idx, c);
    return e;
}

Expansion from_map(Basis b, const std::map<Partition, long>& m)
{
    Expansion e(b);
    for (auto& [p, c] : m)
        e.add(p, c);
    return e;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome schubert_example()
{
    auto t0 = Clock::now();
    auto u = IntegerPermutation::from_window({1, 4, 2, 6, 3, 5});
    auto w = IntegerPermutation::from_window({3, 5, 6, 1, 2, 4});
    std::vector<Chain> want = {
        {{2, 6}, {4, 5}, {1, 2}, {2, 3}}, {{4, 5}, {2, 6}, {1, 2}, {2, 3}}, {{2, 6}, {1, 2}, {4, 5}, {2, 3}},
        {{2, 6}, {1, 2}, {2, 3}, {4, 5}}, {{2, 3}, {3, 6}, {1, 3}, {4, 5}}, {{2, 3}, {3, 6}, {4, 5}, {1, 3}},
        {{2, 3}, {4, 5}, {3, 6}, {1, 3}}, {{4, 5}, {2, 3}, {3, 6}, {1, 3}},
    };
    std::sort(want.begin(), want.end());
    auto chains = enumerate_chains(u, w, 3);
    auto k = schubert_K(u, w, 3);
    double dt = seconds_since(t0);
    auto kf = make(Basis::F, {{{1, 3}, 1}, {{1, 2, 1}, 2}, {{2, 2}, 2}, {{1, 1, 2}, 1}, {{3, 1}, 1}, {{2, 1, 1}, 1}});
    auto ks = make(Basis::s, {{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
    Outcome o;
    o.ok = chains == want && k == kf && F_to_s(k) == ks && dt < 1.0;
    std::ostringstream os;
    os << chains.size() << " chains, K=" << to_pretty(F_to_s(k)) << ", " << dt << "s";
    o.detail = os.str();
    return o;
}

Outcome affine_example()
{
    auto t0 = Clock::now();
    auto u = AffinePermutation::from_window(5, {-6, 8, 3, -1, 4, 13});
    auto w = AffinePermutation::from_window(5, {8, -6, -2, 9, 13, -1});
    auto words = enumerate_operator_words(u, w);
    auto k = words_to_F(words);
    double dt = seconds_since(t0);
    auto kf = make(Basis::F, {{{1, 1, 1, 1}, 9},
                              {{1, 1, 2}, 30},
                              {{1, 2, 1}, 51},
                              {{1, 3}, 30},
                              {{2, 1, 1}, 30},
                              {{2, 2}, 51},
                              {{3, 1}, 30},
                              {{4}, 9}});
    auto ks = make(Basis::s, {{{4}, 9}, {{3, 1}, 30}, {{2, 2}, 21}, {{2, 1, 1}, 30}, {{1, 1, 1, 1}, 9}});
    Outcome o;
    o.ok = words.size() == 240 && k == kf && F_to_s(k) == ks && affine_K(u, w) == kf && dt < 10.0;
    std::ostringstream os;
    os << words.size() << " words, K=" << to_pretty(F_to_s(k)) << ", " << dt << "s";
    o.detail = os.str();
    return o;
}

Outcome weak_example()
{
    auto u = AffinePermutation::from_window(2, {0, 2, 4});
    auto w = AffinePermutation::from_window(2, {-3, 4, 5});
    auto kf = weak_K(u, w);
    Outcome o;
    o.ok = F_to_M(kf) == make(Basis::M, {{{1, 1, 1}, 1}, {{2, 1}, 1}, {{1, 2}, 1}})
        && kf == make(Basis::F, {{{1, 2}, 1}, {{2, 1}, 1}, {{1, 1, 1}, -1}})
        && F_to_s(kf) == make(Basis::s, {{{2, 1}, 1}, {{1, 1, 1}, -1}});
    o.detail = "K=" + to_pretty(F_to_M(kf)) + " = " + to_pretty(kf) + " = " + to_pretty(F_to_s(kf));
    return o;
}

Outcome core_example()
{
    auto core = core_from_grassmannian(AffinePermutation::from_window(4, {2, 3, 6, 0, 4}));
    Outcome o;
    o.ok = core == Partition{4, 1, 1} && is_core(core, 5);
    std::ostringstream os;
    os << "core=(";
    for (std::size_t i = 0; i < core.size(); ++i)
        os << (i ? "," : "") << core[i];
    os << ")";
    o.detail = os.str();
    return o;
}

Outcome skew_example()
{
    // shape of w = s3 s-3 s4 s2, then one more step with the letter 0
    auto w = word_product({3, -3, 4, 2});
    auto sw = skew_from_321(w);
    auto rw = reading_word(sw);
    std::vector<long> word(rw.begin(), rw.end());
    word.push_back(0);
    auto s = skew_from_word(word);
    auto read = reading_word(s);
    std::vector<long> lread(read.begin(), read.end());
    Outcome o;
    o.ok = word_product(word) == word_product({3, -3, 4, 2, 0}) && s.inner == Partition{6, 4, 4, 3, 1}
        && s.outer == Partition{6, 6, 5, 4, 2} && static_cast<long>(read.size()) == 5
        && word_product(lread) == word_product({3, -3, 4, 2, 0}) && apply_word(read, s.inner) == s.outer;
    std::ostringstream os;
    os << "word";
    for (long x : word)
        os << " " << x;
    os << ", reading";
    for (int x : read)
        os << " " << x;
    o.detail = os.str();
    return o;
}

Outcome lr_oracle()
{
    auto t0 = Clock::now();
    long checked = 0, bad = 0;
    std::string first;
    for (int n = 0; n <= 8; ++n)
        for (auto& nu : partitions_of(n))
            for (int m = std::max(0, n - 5); m <= n; ++m)
                for (auto& lam : partitions_of(m)) {
                    if (!contains(nu, lam))
                        continue;
                    ++checked;
                    auto got = F_to_s(young_K(lam, nu));
                    auto want = from_map(Basis::s, oracle::skew_schur(lam, nu));
                    if (!(got == want)) {
                        if (!bad++)
                            first = to_pretty(got) + " vs " + to_pretty(want);
                    }
                }
    double dt = seconds_since(t0);
    Outcome o;
    o.ok = bad == 0 && dt < 60.0;
    std::ostringstream os;
    os << checked << " intervals, " << bad << " mismatches, " << dt << "s" << (bad ? ", first " + first : "");
    o.detail = os.str();
    return o;
}

Outcome from_reports(const std::vector<SuiteReport>& reps, long min_samples)
{
    Outcome o;
    std::ostringstream os;
    long total = 0;
    std::vector<std::string> failed, short_of;
    for (auto& r : reps) {
        total += r.samples;
        if (r.failure_count)
            failed.push_back(r.relation + "(" + std::to_string(r.failure_count) + "/" + std::to_string(r.nontrivial)
                             + ")");
        if (r.samples < min_samples)
            short_of.push_back(r.relation);
    }
    o.ok = failed.empty() && short_of.empty();
    os << reps.size() << " checks, " << total << " instances";
    if (!failed.empty()) {
        os << ", failing:";
        for (auto& f : failed)
            os << " " << f;
    }
    if (!short_of.empty()) {
        os << ", under " << min_samples << ":";
        for (auto& f : short_of)
            os << " " << f;
    }
    o.detail = os.str();
    return o;
}

Outcome relation_suites(long samples, std::uint64_t seed)
{
    auto reps = verify_young_relations(samples, seed);
    auto s = verify_schubert_relations(samples, seed);
    auto a = verify_affine_relations_all(samples, seed);
    reps.insert(reps.end(), s.begin(), s.end());
    reps.insert(reps.end(), a.begin(), a.end());
    return from_reports(reps, samples);
}

Outcome kschur_degenerate()
{
    long checked = 0, bad = 0;
    for (int n = 0; n <= 5; ++n)
        for (auto& lam : partitions_of(n))
            for (int k = std::max(1, n); k <= 6; ++k) {
                ++checked;
                if (!(kschur_in_h(k, lam) == from_map(Basis::h, oracle::jacobi_trudi(lam))))
                    ++bad;
            }
    Outcome o;
    o.ok = bad == 0;
    o.detail = std::to_string(checked) + " cases, " + std::to_string(bad) + " mismatches";
    return o;
}

Outcome positivity()
{
    // every 0-Bruhat interval of rank 1..4 above a grassmannian of length <= 4
    long intervals = 0, asym = 0, neg = 0;
    std::string first;
    for (int k = 1; k <= 5; ++k)
        for (int len = 0; len <= 4; ++len)
            for (auto& u : grassmannians_of_length(k, len)) {
                std::set<AffinePermutation> level{u};
                for (int rank = 1; rank <= 4; ++rank) {
                    std::set<AffinePermutation> next;
                    for (auto& v : level)
                        for (auto& [lab, x] : zero_ops_from(v))
                            next.insert(x);
                    for (auto& w : next) {
                        ++intervals;
                        auto f = affine_K(u, w);
                        if (!is_symmetric(F_to_M(f))) {
                            if (!asym++)
                                first = "asymmetric " + u.to_string() + " " + w.to_string();
                            continue;
                        }
                        auto s = F_to_s(f);
                        for (auto& [mu, c] : s.terms.terms())
                            if (c < 0) {
                                if (!neg++ && !asym)
                                    first = "negative " + u.to_string() + " " + w.to_string() + " " + to_pretty(s);
                                break;
                            }
                    }
                    level = std::move(next);
                }
            }
    Outcome o;
    o.ok = asym == 0 && neg == 0;
    std::ostringstream os;
    os << intervals << " intervals, " << asym << " asymmetric, " << neg << " not schur positive";
    if (!first.empty())
        os << ", first " << first;
    o.detail = os.str();
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    std::vector<std::string> expect_fail;
    long samples = 10000;
    std::uint64_t seed = 7;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail");
    app.add_option("--samples", samples, "instances per relation family");
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1", schubert_example},
        {"2", affine_example},
        {"3", weak_example},
        {"4", core_example},
        {"5", skew_example},
        {"6", lr_oracle},
        {"7", [&] { return relation_suites(samples, seed); }},
        {"8", [&] { return from_reports(verify_commutativity(samples, seed), 1); }},
        {"9", [&] { return from_reports(verify_involutions(7, samples, seed), 1); }},
        {"10", kschur_degenerate},
        {"positivity", positivity},
    };

    std::set<std::string> failed;
    for (auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("threw: ") + e.what();
        }
        if (!o.ok)
            failed.insert(name);
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::set<std::string> expected(expect_fail.begin(), expect_fail.end());
    return failed == expected ? 0 : 1;
}
