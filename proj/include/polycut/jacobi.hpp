#pragma once

#include <vector>

namespace polycut {

// Dense symmetric matrices in row-major order, n x n.
struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (vectors[i*n+k]) pairs with values[k]
};

// Cyclic Jacobi rotations; intended for n <= 200.
EigenDecomposition jacobi_eigen(const std::vector<double>& a, int n);

// Nearest positive semidefinite matrix in Frobenius norm (negative eigenvalues
// zeroed out).
std::vector<double> psd_project(const std::vector<double>& a, int n);

}  // namespace polycut
