#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

struct SuiteReport {
    explicit SuiteReport(std::string name = {}) : relation(std::move(name)) {}

    std::string relation;
    long samples = 0;    // draws satisfying the side conditions
    long nontrivial = 0; // draws where some side is nonzero
    long failure_count = 0;
    std::vector<std::string> failures; // first few counterexamples, as JSON text

    void fail(const std::string& witness);
};

std::string to_json_string(const std::vector<SuiteReport>& reports);
bool all_passed(const std::vector<SuiteReport>& reports);

std::vector<SuiteReport> verify_young_relations(long samples, std::uint64_t seed);
std::vector<SuiteReport> verify_schubert_relations(long samples, std::uint64_t seed);
std::vector<SuiteReport> verify_affine_relations(int k, long samples, std::uint64_t seed);
// Runs k = 2..5 and merges per family; each family gets at least `samples` draws.
std::vector<SuiteReport> verify_affine_relations_all(long samples, std::uint64_t seed);
std::vector<SuiteReport> verify_commutativity(long samples, std::uint64_t seed);
// Exhaustive over all three-step chains in S_n (every triple of every chain is one).
std::vector<SuiteReport> verify_involutions(int n, long samples, std::uint64_t seed);

std::vector<std::string> suite_names();
std::vector<SuiteReport> run_suite(const std::string& name, long samples, std::uint64_t seed);

} // namespace affschur
