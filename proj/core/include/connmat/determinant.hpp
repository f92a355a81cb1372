#pragma once

#include <cstddef>
#include <vector>

#include "connmat/bigint.hpp"
#include "connmat/conn_matrix.hpp"
#include "connmat/lattice.hpp"

namespace connmat {

/// Dimension cap for the direct determinant. Bell(7) = 877 passes (slow),
/// Bell(8) = 4140 is refused unless the caller raises the cap.
inline constexpr std::size_t kDefaultBareissMaxDim = 1000;

/// Exact integer determinant by fraction-free Bareiss elimination.
/// Nonzero-pivot row swaps are tracked for the sign; every division is exact.
BigInt bareiss_determinant(DenseMatrix m);

BigInt determinant_direct(const ConnMatrix& a, std::size_t max_dim = kDefaultBareissMaxDim);

inline constexpr int kMaxAlphaGroundSet = 10;

/// Connectivity number of each conjugation class of the order, class ranges
/// in order. Computed from one representative per class.
std::vector<BigInt> class_alphas(const CoherentOrder& order, int threads = 0);

/// det(A) as the product of connectivity numbers over all of Part_n,
/// computed class-by-class and raised to the class cardinality.
BigInt determinant_alpha(const CoherentOrder& order, int threads = 0);
BigInt determinant_alpha(int n, int threads = 0);

/// |det(A)| by the closed formula: the product of (m-1)! over all partitions,
/// evaluated from the integer partitions of n and multinomial class sizes.
/// Independent of the Part_n enumeration.
BigInt determinant_formula_abs(int n);

}  // namespace connmat
