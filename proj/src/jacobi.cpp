#include "polycut/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polycut/errors.hpp"

namespace polycut {

EigenDecomposition jacobi_eigen(const std::vector<double>& a, int n) {
  if (n < 0 || a.size() != static_cast<size_t>(n) * n)
    throw InputError("jacobi_eigen: bad dimensions");
  std::vector<double> m = a;
  // Symmetrize defensively; callers accumulate gradients on both halves.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (m[i * n + j] + m[j * n + i]);
      m[i * n + j] = m[j * n + i] = s;
    }
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (std::abs(apq) < 1e-18) continue;
        const double app = m[p * n + p], aqq = m[q * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k * n + p], mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p * n + k], mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  EigenDecomposition out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = m[i * n + i];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return out.values[x] < out.values[y]; });
  std::vector<double> sorted_vals(n);
  std::vector<double> sorted_vecs(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    sorted_vals[k] = out.values[order[k]];
    for (int i = 0; i < n; ++i) sorted_vecs[i * n + k] = v[i * n + order[k]];
  }
  out.values = std::move(sorted_vals);
  out.vectors = std::move(sorted_vecs);
  return out;
}

std::vector<double> psd_project(const std::vector<double>& a, int n) {
  EigenDecomposition ed = jacobi_eigen(a, n);
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double lam = ed.values[k];
    if (lam <= 0) continue;
    for (int i = 0; i < n; ++i) {
      const double vik = ed.vectors[i * n + k] * lam;
      for (int j = 0; j < n; ++j) out[i * n + j] += vik * ed.vectors[j * n + k];
    }
  }
  return out;
}

}  // namespace polycut
