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

#include <cmath>
#include <vector>

#include "antsym/circuit.hpp"

namespace antsym {

// The antisymmetrization ancillas are prepared in a "selector" state: an
// equal-weight superposition of the all-zeros string and every single-bit
// excitation, with a relative minus sign on the excited terms,
//
//   (1/sqrt(n+1)) * (|0...0> - sum_j |e_j>).
//
// The excited-bit position selects which existing particle swaps with the
// newly added one; all-zeros means no swap. Construction follows the
// linear-time W-state recipe: a chain of controlled rotations that move
// excitation weight down the register, one qubit pair at a time.

/// Angle for which Ry sends |0> to sqrt(p)|0> + sqrt(1-p)|1>.
inline double rotation_angle_from_probability(double p) {
  detail::require(p > 0.0 && p < 1.0, "probability must lie in (0,1)");
  return 2.0 * std::acos(std::sqrt(p));
}

/// The real rotation [[sqrt(p), -sqrt(1-p)], [sqrt(1-p), sqrt(p)]] as a Gate
/// on the given wire. Exactly Ry(2*acos(sqrt(p))).
inline Gate rotation_from_probability(double p, int wire = 0) {
  return gate::ry(rotation_angle_from_probability(p), wire);
}

namespace detail {

/// Chain block on the wire pair (a, b): a controlled weight-splitting
/// rotation on b, then an inverted CNOT pulling the excitation off a.
inline void append_chain_block(Circuit& c, double p, int a, int b) {
  c.add(gate::cry(rotation_angle_from_probability(p), a, b));
  c.add(gate::cnot(b, a));
}

inline void append_selector(Circuit& c, const std::vector<int>& wires) {
  const int n = int(wires.size());
  require(n >= 1, "selector needs at least one qubit");
  if (n == 1) {
    // One qubit: Hadamard then Z reaches (|0> - |1>)/sqrt(2) without a
    // rotation left for synthesis.
    c.add(gate::h(wires[0]));
    c.add(gate::z(wires[0]));
    return;
  }
  c.add(rotation_from_probability(1.0 / (n + 1), wires[0]));
  for (int i = 0; i < n - 1; ++i)
    append_chain_block(c, 1.0 / (n - i), wires[size_t(i)], wires[size_t(i) + 1]);
  for (int w : wires) c.add(gate::z(w));
}

/// Unsigned selector for n+1 a power of two, doubling recursively with one
/// work ancilla: split with H on the ancilla, move the excitation block on
/// the 1-side (flagging the all-zeros case into the top new qubit first),
/// then unentangle the ancilla by parity of the new block.
inline void append_selector_unsigned_pow2(Circuit& c,
                                          const std::vector<int>& wires,
                                          int work_wire) {
  const int n = int(wires.size());
  require(n >= 1 && ((n + 1) & n) == 0,
          "unsigned selector recursion needs n+1 a power of two");
  c.add(gate::h(wires[0]));
  int k = 1;
  while (k < n) {
    c.add(gate::h(work_wire));
    std::vector<Control> zero_flag{{work_wire, true}};
    for (int j = 0; j < k; ++j) zero_flag.push_back({wires[size_t(j)], false});
    c.add(gate::mcx(zero_flag, wires[size_t(2 * k)]));
    for (int j = 0; j < k; ++j)
      c.add(gate::cswap(work_wire, wires[size_t(j)], wires[size_t(k + j)]));
    for (int j = 0; j <= k; ++j)
      c.add(gate::cnot(wires[size_t(k + j)], work_wire));
    k = 2 * k + 1;
  }
}

}  // namespace detail

/// Chain block as a standalone two-qubit circuit (ancilla wires 0 and 1).
inline Circuit w_chain_block(double p) {
  Circuit c(0, 0, 2);
  detail::append_chain_block(c, p, 0, 1);
  return c;
}

/// Prepares the signed selector state on n ancilla wires from |0...0>.
/// Uses exactly one uncontrolled rotation and n-1 controlled rotations
/// (the n=1 case is pure Clifford).
inline Circuit prepare_selector(int n) {
  detail::require(n >= 1, "selector size must be >= 1");
  Circuit c(0, 0, n);
  std::vector<int> wires(size_t(n));
  for (int i = 0; i < n; ++i) wires[size_t(i)] = i;
  detail::append_selector(c, wires);
  return c;
}

/// Prepares the unsigned selector state (no relative minus signs) on n
/// ancilla wires, for n+1 a power of two up to 16, using one work ancilla
/// that is returned to |0>. Rotation-free: H, CNOT, CSWAP and one
/// multi-controlled X per doubling. Larger sizes use the rotation chain of
/// prepare_selector instead.
inline Circuit prepare_selector_unsigned_pow2(int n) {
  detail::require(n >= 1 && ((n + 1) & n) == 0,
                  "n+1 must be a power of two");
  detail::require(n <= 15, "pow2 selector recursion implemented up to n=15");
  Circuit c(0, 0, n, /*n_work=*/n > 1 ? 1 : 0);
  std::vector<int> wires(size_t(n));
  for (int i = 0; i < n; ++i) wires[size_t(i)] = i;
  detail::append_selector_unsigned_pow2(c, wires, n);
  return c;
}

}  // namespace antsym
