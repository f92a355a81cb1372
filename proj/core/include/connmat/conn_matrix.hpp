#pragma once

#include <cstdint>
#include <vector>

#include "connmat/bigint.hpp"
#include "connmat/lattice.hpp"

namespace connmat {

/// Dense bit-packed square 0/1 matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t dim)
        : dim_(dim), stride_((dim + 63) / 64), words_(dim * stride_, 0) {}

    std::size_t dim() const { return dim_; }
    bool get(std::size_t i, std::size_t j) const {
        return (words_[i * stride_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        std::uint64_t& w = words_[i * stride_ + j / 64];
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        w = v ? (w | mask) : (w & ~mask);
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

using DenseMatrix = std::vector<std::vector<BigInt>>;

/// The connectivity matrix relative to a coherent order:
/// entries(i,j) = 1 iff order[i] * order[j] is the one-block partition.
struct ConnMatrix {
    CoherentOrder order;
    BitMatrix entries;
};

ConnMatrix build_connectivity_matrix(const CoherentOrder& order, int threads = 0);

/// The matrix of the pi operator on the Part_n basis:
/// entries[i][j] = coefficient of order[i] in pi(order[j]).
/// Unit lower triangular for any coherent order; the bottom row of a full
/// lattice order carries the connectivity numbers.
struct EliminationMatrix {
    CoherentOrder order;
    DenseMatrix entries;
};

EliminationMatrix build_elimination_matrix(const CoherentOrder& order, int threads = 0);

/// B^t A. Lower triangular, diagonal constant on each conjugation-class range
/// and equal to that class's connectivity number.
DenseMatrix triangularize(const ConnMatrix& a, const EliminationMatrix& b);

bool is_lower_triangular(const DenseMatrix& m);

}  // namespace connmat
