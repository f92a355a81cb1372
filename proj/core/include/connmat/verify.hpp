#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "connmat/bigint.hpp"
#include "connmat/determinant.hpp"
#include "connmat/lattice.hpp"

namespace connmat {

enum class DetMethod { Auto, Alpha, Both };

struct VerifyOptions {
    DetMethod method = DetMethod::Auto;  // Auto: direct leg iff n <= direct_max_n
    int direct_max_n = 6;
    int tri_max_n = 5;  // full B^t A check only at small n
    int threads = 0;
    const CoherentOrder* order = nullptr;  // nullptr: standard order
};

struct ClassSummary {
    std::vector<int> signature;
    std::size_t size = 0;
    int num_blocks = 0;
    BigInt alpha;
};

struct VerifyReport {
    int n = 0;
    BigInt bell;
    std::vector<ClassSummary> classes;

    BigInt det_alpha;
    std::optional<BigInt> det_direct;
    BigInt formula_abs;
    int sign = 0;  // sign of det_alpha; the closed formula leaves it open

    bool abs_matches_formula = false;
    bool det_nonzero = false;
    std::optional<bool> direct_agrees;   // set when the direct leg ran
    std::optional<bool> triangular_ok;   // set when the B^t A check ran

    double alpha_seconds = 0.0;
    double direct_seconds = 0.0;

    bool passed() const;
};

/// Runs every determinant-formula check that fits the options and collects
/// the evidence. Check failures are reported, not thrown.
VerifyReport verify_theorem(int n, const VerifyOptions& options = {});

}  // namespace connmat
