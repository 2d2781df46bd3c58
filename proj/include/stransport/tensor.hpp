// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "stransport/matrix.hpp"

namespace stransport {

//! Computes base^exp for small non-negative integers.
int ipow(int base, int exp);

//! Dense component array of a type-(p,q) tensor in one n-dimensional fibre.
//!
//! Storage is row-major over the slots, all contravariant slots first, then
//! all covariant slots. (p,q) = (0,0) is a scalar, a single value.
struct TensorComponents {
  int p = 0;    //!< contravariant rank
  int q = 0;    //!< covariant rank
  int dim = 1;  //!< fibre dimension n
  std::vector<double> values;  //!< dim^(p+q) entries

  TensorComponents() : values(1, 0.0) {}
  TensorComponents(int p_, int q_, int dim_);
  TensorComponents(int p_, int q_, int dim_, std::vector<double> values_);

  static TensorComponents scalar(double value);
  static TensorComponents vector(const Vec& components);
  static TensorComponents covector(const Vec& components);
  //! The identity (1,1) tensor delta^i_j.
  static TensorComponents delta(int dim);

  int rank() const { return p + q; }
  int size() const { return static_cast<int>(values.size()); }

  //! Linear index of a full multi-index (contravariant digits first).
  int linear_index(const std::vector<int>& multi) const;
  double at(const std::vector<int>& multi) const { return values[linear_index(multi)]; }
  double& at(const std::vector<int>& multi) { return values[linear_index(multi)]; }
};

double max_abs_diff(const TensorComponents& a, const TensorComponents& b);

TensorComponents operator+(const TensorComponents& a, const TensorComponents& b);
TensorComponents operator-(const TensorComponents& a, const TensorComponents& b);
TensorComponents operator*(double c, const TensorComponents& t);

//! Outer product; A's slots precede B's slots within each variance class.
TensorComponents tensor_product(const TensorComponents& a, const TensorComponents& b);

//! Contracts contravariant slot `upper_slot` with covariant slot `lower_slot`
//! (both 0-based within their variance class). Result has ranks (p-1, q-1).
TensorComponents contract(const TensorComponents& t, int upper_slot, int lower_slot);

//! new[.. k ..] = sum_i M(k, i) old[.. i ..] over absolute slot `slot`.
TensorComponents apply_matrix_to_slot(const TensorComponents& t, const Matrix& m, int slot);

//! new[.. l ..] = sum_j M(j, l) old[.. j ..] over absolute slot `slot`
//! (the transposed placement used for covariant indices).
TensorComponents apply_matrix_transposed_to_slot(const TensorComponents& t, const Matrix& m,
                                                 int slot);

//! Change of fibre basis E_{i'} = forward^i_{i'} E_i. `forward` holds the new
//! basis in terms of the old one (row = old index, column = new index);
//! `derivative` is dA/ds, needed only to transform transport laws.
struct BasisChange {
  Matrix forward;
  Matrix inverse;
  std::optional<Matrix> derivative;

  //! Builds the pair from the forward matrix; throws on a singular input.
  static BasisChange from_forward(const Matrix& forward);
  static BasisChange from_forward(const Matrix& forward, const Matrix& derivative);

  //! max |forward*inverse - I|; the pair invariant.
  double pairing_defect() const;
};

//! Standard tensoriality: contravariant slots pick up the inverse matrix,
//! covariant slots the forward matrix.
TensorComponents change_tensor_basis(const TensorComponents& t, const BasisChange& ch,
                                     double pair_tol = 1e-8);

}  // namespace stransport
