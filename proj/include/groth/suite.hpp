#pragma once

// The acceptance grid. Each criterion runs a fixed parameter grid and
// collects pass/fail per case; the CLI `suite` command and the acceptance
// test binary are both thin wrappers around run_suite.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "groth/identities.hpp"

namespace groth {

struct CriterionResult {
    int id = 0;
    std::string title;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> details;  // one line per failing case (capped)
    double elapsed_s = 0;
    double budget_s = 0;  // 0: no runtime bound
    bool exact = true;

    bool within_budget() const { return budget_s <= 0 || elapsed_s < budget_s; }
    bool pass() const { return cases > 0 && failures == 0 && within_budget(); }
    json to_json() const;
};

struct SuiteOptions {
    VerifyOptions verify;
    // Seed for the randomized criteria (Good points, ring properties).
    std::uint64_t seed = 20240611;
    std::vector<int> only;  // criterion ids to run; empty means all
    std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 9;

std::vector<CriterionResult> run_suite(const SuiteOptions& opt = {});
CriterionResult run_criterion(int id, const SuiteOptions& opt = {});

// Random polynomial with up to max_terms terms of total degree <= max_degree,
// coefficients in [-9, 9].
Polynomial random_polynomial(Universe u, std::mt19937_64& rng, int max_terms, int max_degree);

// Sum of x^T over all fillings of the shape by [n] that are weakly
// increasing along rows and strictly down columns; brute force over the full
// product [n]^|shape|, independent of TableauStream.
Polynomial brute_force_ssyt_sum(const Partition& shape, int n);

// Grid helpers: all weakly decreasing sequences of length k with entries in
// [0, max_part], zeros allowed (lex order).
std::vector<Partition> sequences_of_length(int k, int max_part);

}  // namespace groth
