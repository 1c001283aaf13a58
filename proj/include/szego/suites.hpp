#ifndef SZEGO_SUITES_HPP
#define SZEGO_SUITES_HPP

#include "szego/rho_expr.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace szego {

struct CaseResult {
    std::string key;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases;

    bool all_pass() const;
    size_t failures() const;
};

struct SuiteOptions {
    unsigned n_lo = 1;
    unsigned n_hi = 6;
    unsigned d_lo = 1;
    unsigned d_hi = 3;
    size_t order = 50;       // series order for the identity suite
    std::uint64_t seed = 20240601;
    size_t count = 200;      // random-operator case count
    unsigned jobs = 1;       // parallel case evaluation
    double tol = 1e-8;
};

// Random operator with the documented ranges: 1..4 terms, coefficients in
// [-5, 5] (denominators 1..3), shifts 0..3, powers -6..2.
RhoExpr random_rho_expr(std::mt19937_64& rng);

// Named verification suites runnable from the CLI; "all" runs every one.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts);

} // namespace szego

#endif
