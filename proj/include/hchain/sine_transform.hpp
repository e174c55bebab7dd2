#pragma once

#include <Eigen/Dense>

namespace hchain {

/// Orthonormal type-I discrete sine transform of length n:
///   out_j = sqrt(2/(n+1)) * sum_{i=1..n} in_i sin(pi i j / (n+1)),  j = 1..n.
/// The matrix is symmetric and orthogonal, so the transform is its own inverse.
/// Backed by FFTW (RODFT00); plans are cached per thread and per length.
Eigen::VectorXd dst1(const Eigen::VectorXd& in);

/// Direct O(n^2) sum of the same transform.
Eigen::VectorXd dst1_naive(const Eigen::VectorXd& in);

}  // namespace hchain
