// Copyright 2026 The logicint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library routines it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace logicint::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix pauli(int alpha) {
  using namespace std::complex_literals;
  Matrix m(2, 2);
  switch (alpha) {
    case 1:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      m << 0.0, -1.0i, 1.0i, 0.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

/// Kronecker product written out index by index.
inline Matrix kron_naive(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// sum_{k=0}^{terms} a^k / k!
inline Matrix taylor_exp(const Matrix& a, int terms) {
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  for (int k = 1; k <= terms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// exp(a) by scaling and squaring of a truncated Taylor series.
inline Matrix scaled_exp(const Matrix& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  Matrix e = taylor_exp(a / std::pow(2.0, squarings), 30);
  for (int k = 0; k < squarings; ++k) e = e * e;
  return e;
}

/// Dense matrix of the register permutation that swaps sites i and j, built
/// from the spin-pattern definition: |s_0..s_{n-1}> -> |.. s_j .. s_i ..>.
inline Matrix swap_matrix(std::size_t n, std::size_t i, std::size_t j) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    std::vector<int> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = static_cast<int>((x >> (n - 1 - k)) & 1);
    std::swap(s[i], s[j]);
    Eigen::Index y = 0;
    for (std::size_t k = 0; k < n; ++k) y = (y << 1) | s[k];
    m(y, x) = 1.0;
  }
  return m;
}

/// Closure of a set of real 0/1 matrices under multiplication, by brute force.
inline std::size_t closure_size(const std::vector<Matrix>& gens) {
  auto key = [](const Matrix& m) {
    std::vector<int> k;
    for (Eigen::Index i = 0; i < m.size(); ++i) k.push_back(static_cast<int>(std::lround(m.data()[i].real())));
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<Matrix> elems{Matrix::Identity(gens[0].rows(), gens[0].cols())};
  seen.insert(key(elems[0]));
  for (std::size_t p = 0; p < elems.size(); ++p) {
    for (const auto& g : gens) {
      Matrix next = g * elems[p];
      if (seen.insert(key(next)).second) elems.push_back(next);
    }
  }
  return elems.size();
}

/// Every n x n permutation matrix, generated from index arrays.
inline std::vector<Matrix> permutation_matrices(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<int>(k);
  std::vector<Matrix> out;
  do {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) m(p[j], static_cast<Eigen::Index>(j)) = 1.0;
    out.push_back(m);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

inline Matrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = random_complex(rng);
  return 0.5 * (a + a.adjoint());
}

/// Random complex combination of five permutation matrices.
inline Matrix random_member(std::size_t n, std::mt19937_64& rng) {
  const auto perms = permutation_matrices(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (int k = 0; k < 5; ++k) m += random_complex(rng) * perms[pick(rng)];
  return m;
}

/// Random matrix whose row sums visibly differ.
inline Matrix random_non_member(std::size_t n, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  while (true) {
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = random_complex(rng);
    const Eigen::VectorXcd r = m.rowwise().sum();
    if ((r.array() - r(0)).abs().maxCoeff() > 1e-3) return m;
  }
}

}  // namespace logicint::oracle
