#include "connmat/conn_matrix.hpp"

#include <stdexcept>

#include "connmat/algebra.hpp"
#include "connmat/detail/parallel.hpp"
#include "connmat/errors.hpp"

namespace connmat {

ConnMatrix build_connectivity_matrix(const CoherentOrder& order, int threads) {
    const std::size_t dim = order.size();
    BitMatrix bits(dim);
    detail::parallel_for(dim, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (product(order.at(i), order.at(j)).is_trivial()) bits.set(i, j, true);
    });
    return ConnMatrix{order, std::move(bits)};
}

EliminationMatrix build_elimination_matrix(const CoherentOrder& order, int threads) {
    const std::size_t dim = order.size();
    DenseMatrix entries(dim, std::vector<BigInt>(dim, BigInt(0)));
    detail::parallel_for(dim, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const AlgebraVector image = pi(order.at(j));
            for (const auto& [p, c] : image.terms()) {
                const std::size_t i = order.index_of(p);
                if (i < j)
                    throw std::logic_error(
                        "pi support escapes above the diagonal; the order is not coherent");
                entries[i][j] = c;
            }
            if (entries[j][j] != 1)
                throw std::logic_error("pi(A) must carry A itself with coefficient 1");
        }
    });
    return EliminationMatrix{order, std::move(entries)};
}

DenseMatrix triangularize(const ConnMatrix& a, const EliminationMatrix& b) {
    if (!(a.order == b.order)) throw DomainError("triangularize: matrices use different orders");
    const std::size_t dim = a.order.size();
    DenseMatrix out(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const BigInt& w = b.entries[k][i];  // row i of B^t is column i of B
            if (w == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (a.entries.get(k, j)) out[i][j] += w;
        }
    }
    return out;
}

bool is_lower_triangular(const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m[i].size(); ++j)
            if (m[i][j] != 0) return false;
    return true;
}

}  // namespace connmat
