#include "connmat/verify.hpp"

#include <chrono>

#include "connmat/conn_matrix.hpp"
#include "connmat/errors.hpp"

namespace connmat {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool check_triangularization(const CoherentOrder& order, const std::vector<BigInt>& alphas,
                             int threads) {
    const ConnMatrix a = build_connectivity_matrix(order, threads);
    const EliminationMatrix b = build_elimination_matrix(order, threads);
    const DenseMatrix t = triangularize(a, b);
    if (!is_lower_triangular(t)) return false;
    const auto& ranges = order.class_ranges();
    for (std::size_t c = 0; c < ranges.size(); ++c)
        for (std::size_t i = ranges[c].begin; i < ranges[c].end; ++i)
            if (t[i][i] != alphas[c]) return false;
    return true;
}

}  // namespace

bool VerifyReport::passed() const {
    return det_nonzero && abs_matches_formula && direct_agrees.value_or(true) &&
           triangular_ok.value_or(true);
}

VerifyReport verify_theorem(int n, const VerifyOptions& options) {
    if (n < 1) throw DomainError("verify: n must be positive");
    if (n > kMaxAlphaGroundSet)
        throw SizeLimitError("verify capped at n=" + std::to_string(kMaxAlphaGroundSet));
    if (options.order != nullptr && options.order->n() != n)
        throw DomainError("verify: supplied order is for a different n");

    const CoherentOrder order =
        options.order != nullptr ? *options.order : CoherentOrder::standard(n);

    VerifyReport report;
    report.n = n;
    report.bell = bell_number(n);
    report.formula_abs = determinant_formula_abs(n);

    const auto alpha_start = std::chrono::steady_clock::now();
    const std::vector<BigInt> alphas = class_alphas(order, options.threads);
    const auto& ranges = order.class_ranges();
    report.det_alpha = 1;
    for (std::size_t c = 0; c < ranges.size(); ++c) {
        const auto& r = ranges[c];
        report.classes.push_back(ClassSummary{r.signature, r.end - r.begin,
                                              static_cast<int>(r.signature.size()), alphas[c]});
        report.det_alpha *= pow_ui(alphas[c], r.end - r.begin);
    }
    report.alpha_seconds = seconds_since(alpha_start);

    report.sign = sgn(report.det_alpha);
    report.det_nonzero = report.det_alpha != 0;
    report.abs_matches_formula = abs(report.det_alpha) == report.formula_abs;

    const bool run_direct = options.method == DetMethod::Both ||
                            (options.method == DetMethod::Auto && n <= options.direct_max_n);
    if (run_direct) {
        const auto direct_start = std::chrono::steady_clock::now();
        const ConnMatrix a = build_connectivity_matrix(order, options.threads);
        report.det_direct = determinant_direct(a);
        report.direct_seconds = seconds_since(direct_start);
        report.direct_agrees = *report.det_direct == report.det_alpha;
        report.abs_matches_formula =
            report.abs_matches_formula && abs(*report.det_direct) == report.formula_abs;
    }

    if (n <= options.tri_max_n)
        report.triangular_ok = check_triangularization(order, alphas, options.threads);

    return report;
}

}  // namespace connmat
