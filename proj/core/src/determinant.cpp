#include "connmat/determinant.hpp"

#include <mutex>
#include <utility>

#include "connmat/algebra.hpp"
#include "connmat/detail/parallel.hpp"
#include "connmat/errors.hpp"

namespace connmat {

BigInt bareiss_determinant(DenseMatrix m) {
    const std::size_t dim = m.size();
    for (const auto& row : m)
        if (row.size() != dim) throw DomainError("bareiss: matrix must be square");
    if (dim == 0) return BigInt(1);

    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < dim && m[r][k] == 0) ++r;
            if (r == dim) return BigInt(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[dim - 1][dim - 1] : -m[dim - 1][dim - 1];
}

BigInt determinant_direct(const ConnMatrix& a, std::size_t max_dim) {
    const std::size_t dim = a.order.size();
    if (dim > max_dim)
        throw SizeLimitError("direct determinant refused at dimension " + std::to_string(dim) +
                             " (cap " + std::to_string(max_dim) + ")");
    DenseMatrix m(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (a.entries.get(i, j)) m[i][j] = 1;
    return bareiss_determinant(std::move(m));
}

std::vector<BigInt> class_alphas(const CoherentOrder& order, int threads) {
    const auto& ranges = order.class_ranges();
    std::vector<BigInt> alphas(ranges.size());
    detail::parallel_for(ranges.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c)
            alphas[c] = connectivity_number(order.at(ranges[c].begin));
    });
    return alphas;
}

BigInt determinant_alpha(const CoherentOrder& order, int threads) {
    if (order.n() > kMaxAlphaGroundSet)
        throw SizeLimitError("determinant_alpha capped at n=" +
                             std::to_string(kMaxAlphaGroundSet));
    const std::vector<BigInt> alphas = class_alphas(order, threads);
    BigInt det(1);
    const auto& ranges = order.class_ranges();
    for (std::size_t c = 0; c < ranges.size(); ++c)
        det *= pow_ui(alphas[c], ranges[c].end - ranges[c].begin);
    return det;
}

BigInt determinant_alpha(int n, int threads) {
    if (n < 1) throw DomainError("determinant_alpha: n must be positive");
    if (n > kMaxAlphaGroundSet)
        throw SizeLimitError("determinant_alpha capped at n=" +
                             std::to_string(kMaxAlphaGroundSet));
    return determinant_alpha(CoherentOrder::standard(n), threads);
}

BigInt determinant_formula_abs(int n) {
    if (n < 1) throw DomainError("determinant formula: n must be positive");
    if (n > 20) throw SizeLimitError("determinant formula: class sizes overflow past n=20");
    // walk the integer partitions of n (descending parts); each is a class
    // signature with n! / (prod part! * prod multiplicity!) members
    BigInt total(1);
    std::vector<int> parts;
    const BigInt n_fact = factorial(static_cast<unsigned long>(n));
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            BigInt size = n_fact;
            int run = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                size /= factorial(static_cast<unsigned long>(parts[i]));
                if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
                    ++run;
                } else {
                    size /= factorial(static_cast<unsigned long>(run));
                    run = 1;
                }
            }
            const BigInt per_member = factorial(static_cast<unsigned long>(parts.size()) - 1);
            total *= pow_ui(per_member, size.get_ui());
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return total;
}

}  // namespace connmat
