// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace stransport {

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

TensorComponents::TensorComponents(int p_, int q_, int dim_)
    : p(p_), q(q_), dim(dim_), values(static_cast<std::size_t>(ipow(dim_, p_ + q_)), 0.0) {
  if (p < 0 || q < 0 || dim < 1) throw std::invalid_argument("TensorComponents: bad ranks");
}

TensorComponents::TensorComponents(int p_, int q_, int dim_, std::vector<double> values_)
    : p(p_), q(q_), dim(dim_), values(std::move(values_)) {
  if (p < 0 || q < 0 || dim < 1) throw std::invalid_argument("TensorComponents: bad ranks");
  if (static_cast<int>(values.size()) != ipow(dim, p + q))
    throw std::invalid_argument("TensorComponents: values length != dim^(p+q)");
}

TensorComponents TensorComponents::scalar(double value) {
  TensorComponents t;
  t.values[0] = value;
  return t;
}

TensorComponents TensorComponents::vector(const Vec& components) {
  return TensorComponents(1, 0, static_cast<int>(components.size()), components);
}

TensorComponents TensorComponents::covector(const Vec& components) {
  return TensorComponents(0, 1, static_cast<int>(components.size()), components);
}

TensorComponents TensorComponents::delta(int dim) {
  TensorComponents t(1, 1, dim);
  for (int i = 0; i < dim; ++i) t.values[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return t;
}

int TensorComponents::linear_index(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != rank())
    throw std::invalid_argument("TensorComponents: multi-index rank mismatch");
  int idx = 0;
  for (int k = 0; k < rank(); ++k) {
    if (multi[k] < 0 || multi[k] >= dim)
      throw std::out_of_range("TensorComponents: index out of range");
    idx = idx * dim + multi[k];
  }
  return idx;
}

double max_abs_diff(const TensorComponents& a, const TensorComponents& b) {
  if (a.p != b.p || a.q != b.q || a.dim != b.dim)
    throw std::invalid_argument("max_abs_diff: tensor type mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

TensorComponents operator+(const TensorComponents& a, const TensorComponents& b) {
  if (a.p != b.p || a.q != b.q || a.dim != b.dim)
    throw std::invalid_argument("tensor+: type mismatch");
  TensorComponents r = a;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] += b.values[k];
  return r;
}

TensorComponents operator-(const TensorComponents& a, const TensorComponents& b) {
  if (a.p != b.p || a.q != b.q || a.dim != b.dim)
    throw std::invalid_argument("tensor-: type mismatch");
  TensorComponents r = a;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] -= b.values[k];
  return r;
}

TensorComponents operator*(double c, const TensorComponents& t) {
  TensorComponents r = t;
  for (double& x : r.values) x *= c;
  return r;
}

TensorComponents tensor_product(const TensorComponents& a, const TensorComponents& b) {
  // scalars are dimension-agnostic: a scalar factor just scales the other one
  if (a.rank() == 0) return a.values[0] * b;
  if (b.rank() == 0) return b.values[0] * a;
  if (a.dim != b.dim) throw std::invalid_argument("tensor_product: dimension mismatch");
  const int n = a.dim;
  const int na_up = ipow(n, a.p), nb_up = ipow(n, b.p);
  const int na_lo = ipow(n, a.q), nb_lo = ipow(n, b.q);
  TensorComponents r(a.p + b.p, a.q + b.q, n);
  // result slot order: [A-up | B-up | A-low | B-low]
  std::size_t out = 0;
  for (int au = 0; au < na_up; ++au)
    for (int bu = 0; bu < nb_up; ++bu)
      for (int al = 0; al < na_lo; ++al) {
        const double av = a.values[static_cast<std::size_t>(au) * na_lo + al];
        for (int bl = 0; bl < nb_lo; ++bl)
          r.values[out++] = av * b.values[static_cast<std::size_t>(bu) * nb_lo + bl];
      }
  return r;
}

TensorComponents contract(const TensorComponents& t, int upper_slot, int lower_slot) {
  if (t.p < 1 || t.q < 1) throw std::invalid_argument("contract: needs p >= 1 and q >= 1");
  if (upper_slot < 0 || upper_slot >= t.p) throw std::out_of_range("contract: upper slot out of range");
  if (lower_slot < 0 || lower_slot >= t.q) throw std::out_of_range("contract: lower slot out of range");
  const int n = t.dim;
  const int r = t.rank();
  const int a = upper_slot;          // absolute slot of the upper index
  const int b = t.p + lower_slot;    // absolute slot of the lower index
  TensorComponents out(t.p - 1, t.q - 1, n);

  std::vector<int> full(static_cast<std::size_t>(r), 0);
  const int out_rank = r - 2;
  std::vector<int> digits(static_cast<std::size_t>(out_rank), 0);
  const int out_size = ipow(n, out_rank);
  for (int lin = 0; lin < out_size; ++lin) {
    int rem = lin;
    for (int d = out_rank - 1; d >= 0; --d) {
      digits[d] = rem % n;
      rem /= n;
    }
    // splice the paired index k into slots a and b
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      int src = 0;
      for (int s = 0; s < r; ++s) {
        int digit;
        if (s == a || s == b) {
          digit = k;
        } else {
          int d = s - (s > a ? 1 : 0) - (s > b ? 1 : 0);
          digit = digits[d];
        }
        src = src * n + digit;
      }
      sum += t.values[src];
    }
    out.values[lin] = sum;
  }
  return out;
}

namespace {

TensorComponents apply_slot_impl(const TensorComponents& t, const Matrix& m, int slot,
                                 bool transposed) {
  if (m.rows() != t.dim || m.cols() != t.dim)
    throw std::invalid_argument("apply_matrix_to_slot: matrix/tensor dimension mismatch");
  if (slot < 0 || slot >= t.rank()) throw std::out_of_range("apply_matrix_to_slot: bad slot");
  const int n = t.dim;
  const int stride = ipow(n, t.rank() - 1 - slot);
  const int outer = ipow(n, slot);
  TensorComponents r(t.p, t.q, n);
  for (int o = 0; o < outer; ++o) {
    const int base = o * n * stride;
    for (int knew = 0; knew < n; ++knew)
      for (int inner = 0; inner < stride; ++inner) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          const double c = transposed ? m(i, knew) : m(knew, i);
          acc += c * t.values[base + i * stride + inner];
        }
        r.values[base + knew * stride + inner] = acc;
      }
  }
  return r;
}

}  // namespace

TensorComponents apply_matrix_to_slot(const TensorComponents& t, const Matrix& m, int slot) {
  return apply_slot_impl(t, m, slot, false);
}

TensorComponents apply_matrix_transposed_to_slot(const TensorComponents& t, const Matrix& m,
                                                 int slot) {
  return apply_slot_impl(t, m, slot, true);
}

BasisChange BasisChange::from_forward(const Matrix& forward) {
  BasisChange ch;
  ch.forward = forward;
  ch.inverse = forward.inverse();
  return ch;
}

BasisChange BasisChange::from_forward(const Matrix& forward, const Matrix& derivative) {
  BasisChange ch = from_forward(forward);
  ch.derivative = derivative;
  return ch;
}

double BasisChange::pairing_defect() const {
  return max_abs_diff(forward * inverse, Matrix::identity(forward.rows()));
}

TensorComponents change_tensor_basis(const TensorComponents& t, const BasisChange& ch,
                                     double pair_tol) {
  if (t.rank() == 0) return t;  // scalars carry no slots to transform
  if (ch.forward.rows() != t.dim || ch.forward.cols() != t.dim)
    throw std::invalid_argument("change_tensor_basis: dimension mismatch");
  if (ch.pairing_defect() > pair_tol)
    throw std::invalid_argument("change_tensor_basis: forward*inverse deviates from identity");
  TensorComponents r = t;
  for (int a = 0; a < t.p; ++a) r = apply_matrix_to_slot(r, ch.inverse, a);
  for (int b = 0; b < t.q; ++b) r = apply_matrix_transposed_to_slot(r, ch.forward, t.p + b);
  return r;
}

}  // namespace stransport
