#include "affschur/affine.hpp"
#include "affschur/schubert.hpp"
#include "affschur/verify.hpp"
#include "affschur/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace affschur;

namespace {

struct Options {
    std::string basis = "F";
    bool pretty = false;
    std::uint64_t seed = 1;
    long samples = 10000;
};

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || tok.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

void print(const Expansion& e, const Options& o)
{
    std::cout << (o.pretty ? to_pretty(e) : to_json_string(e)) << "\n";
}

Expansion in_basis(const Expansion& e, const Options& o)
{
    return convert(e, basis_from_name(o.basis));
}

nlohmann::json chains_json(const std::vector<Chain>& chains)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : chains) {
        nlohmann::json j = nlohmann::json::array();
        for (auto& l : c)
            j.push_back({l.a, l.b});
        arr.push_back(j);
    }
    return arr;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Operator monoids on posets and their interval functions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--basis", opt.basis, "Output basis: F, M, m or s")
        ->check(CLI::IsMember({"F", "M", "m", "s"}));
    auto json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--pretty", opt.pretty, "Human readable sums")->excludes(json_flag);
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--samples", opt.samples, "Samples per relation")->check(CLI::NonNegativeNumber);

    std::string from, to;
    auto young = app.add_subcommand("young", "K of a Young lattice interval");
    young->add_option("--from", from, "Inner partition, e.g. 2,1 (empty string for the empty partition)")->required();
    young->add_option("--to", to, "Outer partition")->required();

    std::string su, sw;
    int r = 1;
    bool emit = false;
    auto schub = app.add_subcommand("schubert", "K of an r-Bruhat interval");
    schub->add_option("--u", su, "Window of u over 1..n")->required();
    schub->add_option("--w", sw, "Window of w over 1..n")->required();
    schub->add_option("--r", r, "Cut position")->required()->check(CLI::PositiveNumber);
    schub->add_flag("--emit-chains", emit, "Also list every saturated chain");

    int k = 0;
    std::string au, aw, order = "zero-bruhat";
    bool core = false;
    auto aff = app.add_subcommand("affine", "K of an affine interval, or the core of a 0-grassmannian");
    aff->add_option("--k", k, "Rank parameter")->required()->check(CLI::PositiveNumber);
    aff->add_option("--u", au, "Window of u")->required();
    auto wopt = aff->add_option("--w", aw, "Window of w");
    aff->add_option("--order", order, "zero-bruhat or weak")->check(CLI::IsMember({"zero-bruhat", "weak"}));
    aff->add_flag("--core", core, "Print the (k+1)-core of u instead")->excludes(wopt);

    int kk = 0;
    std::string part;
    auto ks = app.add_subcommand("kschur", "h-expansion of a k-Schur function");
    ks->add_option("--k", kk, "Rank parameter")->required()->check(CLI::PositiveNumber);
    ks->add_option("--partition", part, "k-bounded partition")->required();

    std::string suite;
    auto ver = app.add_subcommand("verify", "Run a randomized or exhaustive relation suite");
    ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*young) {
            print(in_basis(young_K(make_partition(parse_ints(from)), make_partition(parse_ints(to))), opt), opt);
        } else if (*schub) {
            auto u = parse_window(su), w = parse_window(sw);
            Expansion e = in_basis(schubert_K(u, w, r), opt);
            if (!emit) {
                print(e, opt);
            } else if (opt.pretty) {
                print(e, opt);
                for (auto& c : enumerate_chains(u, w, r)) {
                    for (std::size_t i = 0; i < c.size(); ++i)
                        std::cout << (i ? " " : "") << "(" << c[i].a << "," << c[i].b << ")";
                    std::cout << "\n";
                }
            } else {
                long n = std::max({u.max_moved(), w.max_moved(), static_cast<long>(r) + 1});
                nlohmann::json j{{"u", u.window(1, n)},
                                 {"w", w.window(1, n)},
                                 {"r", r},
                                 {"chains", chains_json(enumerate_chains(u, w, r))},
                                 {"K", nlohmann::json::parse(to_json_string(e))}};
                std::cout << j.dump() << "\n";
            }
        } else if (*aff) {
            auto u = parse_affine(k, au);
            if (core) {
                Partition c = core_from_grassmannian(u);
                if (opt.pretty) {
                    for (std::size_t i = 0; i < c.size(); ++i)
                        std::cout << (i ? "," : "") << c[i];
                    std::cout << "\n";
                } else {
                    std::cout << nlohmann::json(c).dump() << "\n";
                }
                return 0;
            }
            if (aw.empty())
                throw std::invalid_argument("--w is required unless --core is given");
            auto w = parse_affine(k, aw);
            if (!is_0_grassmannian(u) || !is_0_grassmannian(w))
                throw domain_error("both windows must be 0-grassmannian");
            print(in_basis(order == "weak" ? weak_K(u, w) : affine_K(u, w), opt), opt);
        } else if (*ks) {
            print(kschur_in_h(kk, make_partition(parse_ints(part))), opt);
        } else if (*ver) {
            auto reports = run_suite(suite, opt.samples, opt.seed);
            if (opt.pretty) {
                for (auto& rep : reports)
                    std::cout << rep.relation << ": samples=" << rep.samples << " nontrivial=" << rep.nontrivial
                              << " failures=" << rep.failure_count << "\n";
            } else {
                std::cout << to_json_string(reports) << "\n";
            }
            return all_passed(reports) ? 0 : 1;
        }
    } catch (const not_symmetric& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
