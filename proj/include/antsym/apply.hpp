// Copyright 2026 The antsym developers
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

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "antsym/circuit.hpp"

namespace antsym {

// ---------------------------------------------------------------------------
// Built-in gate matrices (targets only; controls handled by the kernels).
// Conventions: Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
// Rz(t) = diag(e^{-it/2}, e^{+it/2}).
// ---------------------------------------------------------------------------

inline Eigen::Matrix2cd ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

inline Eigen::Matrix2cd rz_matrix(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(cdouble(0, -theta / 2));
  m(1, 1) = std::exp(cdouble(0, theta / 2));
  return m;
}

/// The 2^k x 2^k matrix of a gate's base operation over its target wires
/// (target 0 is the least significant bit of the row/column index).
inline Eigen::MatrixXcd base_matrix(const Gate& g) {
  using M2 = Eigen::Matrix2cd;
  const cdouble i1(0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  M2 m;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
    case GateKind::MCX:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0, -i1, i1, 0;
      return m;
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::CCZ:
    case GateKind::MCZ:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::H:
      m << r, r, r, -r;
      return m;
    case GateKind::S:
      m << 1, 0, 0, i1;
      return m;
    case GateKind::Sdg:
      m << 1, 0, 0, -i1;
      return m;
    case GateKind::T:
      m << 1, 0, 0, std::exp(i1 * (pi / 4));
      return m;
    case GateKind::Tdg:
      m << 1, 0, 0, std::exp(-i1 * (pi / 4));
      return m;
    case GateKind::Ry:
    case GateKind::CRy:
      return ry_matrix(g.theta);
    case GateKind::Rz:
      return rz_matrix(g.theta);
    case GateKind::Swap:
    case GateKind::CSwap: {
      Eigen::MatrixXcd sw = Eigen::MatrixXcd::Zero(4, 4);
      sw(0, 0) = sw(3, 3) = 1;
      sw(1, 2) = sw(2, 1) = 1;
      return sw;
    }
    case GateKind::Dense:
      return *g.dense;
    default:
      detail::fail("gate has no unitary base matrix");
  }
}

namespace detail {

struct ControlMask {
  uint64_t mask = 0;  // wires that must be checked
  uint64_t want = 0;  // required bit values on those wires

  bool satisfied(uint64_t idx) const { return (idx & mask) == want; }
};

inline ControlMask control_mask(const Gate& g) {
  ControlMask cm;
  for (const Control& c : g.controls) {
    cm.mask |= uint64_t(1) << c.wire;
    if (c.closed) cm.want |= uint64_t(1) << c.wire;
  }
  return cm;
}

/// In-place application of a (controlled) gate to a 2^n amplitude array.
/// Generic over the number of target wires; 1q and swap-like gates get
/// tighter paths.
inline void apply_unitary_gate(cdouble* amps, int n_qubits, const Gate& g) {
  const uint64_t dim = uint64_t(1) << n_qubits;
  const ControlMask cm = control_mask(g);

  // Pure swaps are permutations; avoid the dense 4x4 path.
  if (g.kind == GateKind::Swap || g.kind == GateKind::CSwap) {
    const uint64_t b0 = uint64_t(1) << g.targets[0];
    const uint64_t b1 = uint64_t(1) << g.targets[1];
    for (uint64_t i = 0; i < dim; ++i) {
      const bool t0 = i & b0, t1 = i & b1;
      if (t0 == t1) continue;
      if (!t0) continue;  // visit each pair once, from the b0-set side
      const uint64_t j = (i ^ b0) | b1;
      if (!cm.satisfied(i)) continue;
      std::swap(amps[i], amps[j]);
    }
    return;
  }

  if (g.targets.size() == 1) {
    const Eigen::Matrix2cd u = base_matrix(g);
    const uint64_t bit = uint64_t(1) << g.targets[0];
    const cdouble u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      if (!cm.satisfied(i)) continue;
      const cdouble a0 = amps[i], a1 = amps[i | bit];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i | bit] = u10 * a0 + u11 * a1;
    }
    return;
  }

  // Dense k-target path.
  const Eigen::MatrixXcd u = base_matrix(g);
  const int k = int(g.targets.size());
  const int sub = 1 << k;
  std::vector<uint64_t> bits(k);
  uint64_t tmask = 0;
  for (int j = 0; j < k; ++j) {
    bits[j] = uint64_t(1) << g.targets[j];
    tmask |= bits[j];
  }
  std::vector<cdouble> in(sub), out(sub);
  for (uint64_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    if (!cm.satisfied(base)) continue;
    for (int a = 0; a < sub; ++a) {
      uint64_t idx = base;
      for (int j = 0; j < k; ++j)
        if (a & (1 << j)) idx |= bits[j];
      in[a] = amps[idx];
    }
    for (int r = 0; r < sub; ++r) {
      cdouble acc = 0;
      for (int cidx = 0; cidx < sub; ++cidx) acc += u(r, cidx) * in[cidx];
      out[r] = acc;
    }
    for (int a = 0; a < sub; ++a) {
      uint64_t idx = base;
      for (int j = 0; j < k; ++j)
        if (a & (1 << j)) idx |= bits[j];
      amps[idx] = out[a];
    }
  }
}

}  // namespace detail

/// Dense unitary of a measurement-free circuit, built by pushing basis
/// columns through the gate list. Circuit order is left-to-right
/// application, so unitary_of(compose(a,b)) = unitary_of(b) * unitary_of(a).
inline Eigen::MatrixXcd unitary_of(const Circuit& c, int qubit_cap = 12) {
  detail::require(c.is_unitary_only(),
                  "unitary_of: circuit contains non-unitary elements");
  const int n = c.n_qubits();
  detail::require(n <= qubit_cap, "unitary_of: qubit cap exceeded");
  const long dim = 1L << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates()) {
    for (long col = 0; col < dim; ++col) {
      detail::apply_unitary_gate(u.col(col).data(), n, g);
    }
  }
  return u;
}

}  // namespace antsym
