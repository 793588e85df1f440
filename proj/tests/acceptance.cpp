// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "prymtyurin/regression.hpp"

namespace pt = prymtyurin;

namespace
{

struct Outcome
{
    bool pass = true;
    std::vector<std::string> failures;
};

Outcome from_cases(std::vector<pt::CaseResult> const& cases)
{
    Outcome o;
    for (auto const& c : cases) {
        for (auto const& check : c.checks) {
            if (!check.pass) {
                o.pass = false;
                o.failures.push_back(c.name + ": " + check.name + " (" + check.detail + ")");
            }
        }
    }
    return o;
}

Outcome run_binaries(std::vector<std::string> const& paths)
{
    Outcome o;
    for (auto const& p : paths) {
        std::string const cmd = "\"" + p + "\" --gtest_brief=1 > /dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) {
            o.pass = false;
            o.failures.push_back(p + " failed");
        }
    }
    return o;
}

struct Criterion
{
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    std::size_t const threads = 1;
    std::vector<Criterion> const criteria{
        {1, "convolution oracle agrees with the coset formula", 10,
         [] { return from_cases(pt::run_regression_case("oracle")); }},
        {2, "Hecke identities on the group catalog", 300,
         [&] { return from_cases(pt::run_regression_case("identities", 0, threads)); }},
        {3, "small cyclic-class exponent rows", 60,
         [] { return from_cases(pt::run_regression_case("prop5.1-small")); }},
        {4, "rotation subgroup of weylD(5)", 600,
         [&] { return from_cases(pt::run_regression_case("prop5.2", 0, threads)); }},
        {5, "dihedral wreath family for p = 3, 5", 300,
         [&] {
             auto cases = pt::run_regression_case("prop5.3", 3, threads);
             auto more = pt::run_regression_case("prop5.3", 5, threads);
             cases.insert(cases.end(), more.begin(), more.end());
             return from_cases(cases);
         }},
        {6, "hand-computed micro cases", 30, [] { return from_cases(pt::run_regression_case("micro-oracles")); }},
        {7, "realizability witness", 30, [] { return from_cases(pt::run_regression_case("realizability")); }},
        {8, "property suites", 600,
         [] {
             return run_binaries({PROPERTY_SCAN_CONJUGATION, PROPERTY_COEFFICIENT_INVARIANCE, PROPERTY_ORTHOGONALITY,
                                  PROPERTY_CYCLOTOMIC_RING});
         }},
    };

    bool all = true;
    for (auto const& c : criteria) {
        auto const t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (std::exception const& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double const secs = pt::detail::seconds_since(t0);
        bool const in_time = secs < c.limit_seconds;
        bool const pass = o.pass && in_time;
        all = all && pass;
        std::printf("criterion %d: %s  %s  [%.2fs, limit %.0fs]\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                    secs, c.limit_seconds);
        for (auto const& f : o.failures)
            std::printf("    %s\n", f.c_str());
        if (!in_time)
            std::printf("    time limit exceeded\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
