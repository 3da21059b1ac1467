// Acceptance gate: runs the verification suite once, enforces per-criterion
// wall-time budgets, and checks that two independent in-process CLI runs of
// the suite produce byte-identical JSON reports.  Prints one line per
// criterion; exits nonzero if anything fails.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <span>
#include <sstream>
#include <string>

#include "sliplab/cli.hpp"
#include "sliplab/suite.hpp"

namespace {

// Budget in seconds per criterion id; 0 means unbounded.
constexpr double kBudgets[15] = {0,  0.3, 1,  60, 1, 30, 10, 10,
                                 30, 10,  0,  60, 5, 5,  0};

std::string run_cli_suite(int& exit_code) {
    const char* argv[] = {"sliplab", "paper-suite", "--json"};
    std::ostringstream out, err;
    exit_code = sliplab::cli_main(std::span<const char* const>(argv, 3), out, err);
    return out.str();
}

}  // namespace

int main() {
    using sliplab::CriterionResult;
    using sliplab::SuiteResult;

    SuiteResult suite = sliplab::run_suite({});

    int passed = 0, total = 0;
    bool all_ok = true;

    auto report = [&](int id, const std::string& name, bool pass, double elapsed,
                      const std::string& note) {
        ++total;
        const double budget = (id >= 1 && id <= 14) ? kBudgets[id] : 0.0;
        const bool within = budget <= 0.0 || elapsed <= budget;
        const bool ok = pass && within;
        all_ok = all_ok && ok;
        if (ok) ++passed;
        std::cout << '[' << std::setw(2) << id << "] " << (ok ? "PASS" : "FAIL") << ' ' << name
                  << " (" << std::fixed << std::setprecision(2) << elapsed << "s";
        if (budget > 0.0)
            std::cout << ", budget " << std::setprecision(1) << budget << "s";
        std::cout << ")";
        if (!pass)
            std::cout << " -- " << note;
        else if (!within)
            std::cout << " -- over budget";
        std::cout << "\n";
    };

    const CriterionResult* suite_determinism = nullptr;
    for (const CriterionResult& c : suite.criteria) {
        if (c.id == 14) {
            suite_determinism = &c;
            continue;  // folded into the strong determinism check below
        }
        report(c.id, c.name, c.pass, c.elapsed_seconds, c.detail);
    }

    {
        const auto start = std::chrono::steady_clock::now();
        int code1 = -1, code2 = -1;
        const std::string first = run_cli_suite(code1);
        const std::string second = run_cli_suite(code2);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        const bool reproduced = !first.empty() && first == second && code1 == 0 && code2 == 0;
        const bool internal = suite_determinism != nullptr && suite_determinism->pass;
        std::string note;
        if (!internal)
            note = suite_determinism ? suite_determinism->detail : "suite row missing";
        else if (first.empty())
            note = "suite run produced no output";
        else if (first != second)
            note = "two suite runs differ";
        else
            note = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2);
        report(14, "structured-report-determinism", reproduced && internal, elapsed.count(),
               note);
    }

    std::cout << "ACCEPTANCE: " << passed << "/" << total << " criteria passed\n";
    return all_ok ? 0 : 1;
}
