#pragma once

#include <cstdint>
#include <vector>

#include "lnz/algebra.hpp"
#include "lnz/matrix.hpp"

// Deliberately naive reference computations, sharing no elimination code with
// the main routines.
namespace lnz::oracle {

/// dim ker M by plain Gauss-Jordan over Q.
std::size_t kernel_dim(const MatrixQ& m);

/// Block sizes from dim ker N^k, k = 0..n. Empty when N^n != 0.
std::vector<std::size_t> block_sizes_by_kernels(const MatrixQ& n);

/// Dims of L^k from spanning sets of all products, stopping at 0 or when the
/// dimension repeats.
std::vector<std::size_t> central_series_dims(const StructureTensor& a);

/// Nilpotent matrices of size 1..max_dim: every Jordan type (partition of the
/// size) conjugated by `per_type` random unimodular matrices, kept only when
/// all entries lie in {-1, 0, 1}.
struct JordanSample {
  std::vector<std::size_t> blocks;
  MatrixQ matrix;
};
std::vector<JordanSample> jordan_test_net(std::size_t max_dim, std::size_t per_type, std::uint64_t seed);

}  // namespace lnz::oracle
