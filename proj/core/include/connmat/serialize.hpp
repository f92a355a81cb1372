#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "connmat/algebra.hpp"
#include "connmat/conn_matrix.hpp"
#include "connmat/lattice.hpp"
#include "connmat/multigraph.hpp"
#include "connmat/polynomial.hpp"
#include "connmat/verify.hpp"

namespace connmat {

using nlohmann::json;

/// List of [coefficient, partition] string pairs sorted by partition text.
json algebra_to_json(const AlgebraVector& v);

json classes_to_json(int n, const std::vector<ConjugationClass>& classes);

/// Rows of 0/1 separated by spaces.
std::string matrix_to_text(const BitMatrix& m);
std::string matrix_to_text(const DenseMatrix& m);

json matrix_to_json(const std::string& kind, const CoherentOrder& order, const BitMatrix& m);
json matrix_to_json(const std::string& kind, const CoherentOrder& order, const DenseMatrix& m);

/// Coefficients degree-ascending as decimal strings, plus the rendering.
json polynomial_to_json(const Polynomial& r);

json graph_to_json(const Multigraph& g);

json report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

}  // namespace connmat
