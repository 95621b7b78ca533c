#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace orbench {

using scalar_t = double;
using index_t = Eigen::Index;

using vector_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, 1>;
using matrix_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer payloads (weights, durations, flows) use 64-bit columns so exact
/// arithmetic never overflows at the supported instance sizes.
using ivector_t = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using imatrix_t = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace orbench
