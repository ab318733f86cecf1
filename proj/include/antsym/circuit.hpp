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
#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "antsym/core.hpp"

namespace antsym {

// ---------------------------------------------------------------------------
// Registers and wires
//
// A circuit owns three qubit registers laid out on a flat wire index:
//   particle i (0-based) occupies wires [i*eta, (i+1)*eta),
//   antisymmetrization ancillas follow the particles,
//   work ancillas come last.
// Wire 0 is the least significant bit of a basis-state index.
// ---------------------------------------------------------------------------

enum class RegKind { Particle, AntisymAncilla, WorkAncilla };

struct QubitRef {
  RegKind kind = RegKind::Particle;
  int index = 0;   // particle number or ancilla number (0-based)
  int offset = 0;  // qubit within a particle register, in [0, eta)

  static QubitRef particle(int i, int off) { return {RegKind::Particle, i, off}; }
  static QubitRef ancilla(int i) { return {RegKind::AntisymAncilla, i, 0}; }
  static QubitRef work(int i) { return {RegKind::WorkAncilla, i, 0}; }
};

struct Layout {
  int n_particles = 0;
  int qubits_per_particle = 0;
  int n_ancilla = 0;
  int n_work = 0;
  int n_cbits = 0;

  int total_qubits() const {
    return n_particles * qubits_per_particle + n_ancilla + n_work;
  }

  int flat(const QubitRef& q) const {
    switch (q.kind) {
      case RegKind::Particle:
        detail::require(q.index >= 0 && q.index < n_particles &&
                            q.offset >= 0 && q.offset < qubits_per_particle,
                        "particle wire out of range");
        return q.index * qubits_per_particle + q.offset;
      case RegKind::AntisymAncilla:
        detail::require(q.index >= 0 && q.index < n_ancilla,
                        "ancilla wire out of range");
        return n_particles * qubits_per_particle + q.index;
      case RegKind::WorkAncilla:
        detail::require(q.index >= 0 && q.index < n_work,
                        "work wire out of range");
        return n_particles * qubits_per_particle + n_ancilla + q.index;
    }
    detail::fail("bad register kind");
  }

  bool operator==(const Layout&) const = default;
};

// ---------------------------------------------------------------------------
// Gates
// ---------------------------------------------------------------------------

enum class GateKind {
  X, Y, Z, H, S, Sdg, T, Tdg,
  CNOT, CZ, Swap,
  Ry, Rz, CRy,
  Toffoli, CCZ, MCX, MCZ, CSwap,
  Measure, Reset,
  Dense,
};

/// A control wire with polarity. `closed` fires on |1>, open fires on |0>.
/// Open controls are first-class here; lowering inserts the X sandwiches.
struct Control {
  int wire = 0;
  bool closed = true;
  bool operator==(const Control&) const = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;       // flat wires the base operation acts on
  std::vector<Control> controls;  // additional control wires
  double theta = 0.0;             // Ry/Rz/CRy angle, radians
  int cbit = -1;                  // Measure destination bit
  // Conjunction of (classical bit, required value); empty = unconditioned.
  std::vector<std::pair<int, int>> condition;
  std::shared_ptr<const Eigen::MatrixXcd> dense;  // Dense payload
  std::string label;                              // Dense label

  bool is_measure() const { return kind == GateKind::Measure; }
  bool is_reset() const { return kind == GateKind::Reset; }
  bool is_unitary_op() const { return !is_measure() && !is_reset(); }
  bool has_angle() const {
    return kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::CRy;
  }
  int span() const { return int(targets.size() + controls.size()); }

  bool same_shape(const Gate& o) const {
    return kind == o.kind && targets == o.targets && controls == o.controls &&
           theta == o.theta && cbit == o.cbit && condition == o.condition &&
           label == o.label;
  }
};

namespace gate {

inline Gate simple(GateKind k, int wire) {
  Gate g;
  g.kind = k;
  g.targets = {wire};
  return g;
}

inline Gate x(int w) { return simple(GateKind::X, w); }
inline Gate y(int w) { return simple(GateKind::Y, w); }
inline Gate z(int w) { return simple(GateKind::Z, w); }
inline Gate h(int w) { return simple(GateKind::H, w); }
inline Gate s(int w) { return simple(GateKind::S, w); }
inline Gate sdg(int w) { return simple(GateKind::Sdg, w); }
inline Gate t(int w) { return simple(GateKind::T, w); }
inline Gate tdg(int w) { return simple(GateKind::Tdg, w); }

inline Gate ry(double theta, int w) {
  Gate g = simple(GateKind::Ry, w);
  g.theta = theta;
  return g;
}

inline Gate rz(double theta, int w) {
  Gate g = simple(GateKind::Rz, w);
  g.theta = theta;
  return g;
}

inline Gate cnot(int c, int t) {
  Gate g = simple(GateKind::CNOT, t);
  g.controls = {{c, true}};
  return g;
}

inline Gate cz(int c, int t) {
  Gate g = simple(GateKind::CZ, t);
  g.controls = {{c, true}};
  return g;
}

inline Gate swap(int a, int b) {
  Gate g;
  g.kind = GateKind::Swap;
  g.targets = {a, b};
  return g;
}

inline Gate cry(double theta, int c, int t) {
  Gate g = simple(GateKind::CRy, t);
  g.theta = theta;
  g.controls = {{c, true}};
  return g;
}

inline Gate toffoli(int c1, int c2, int t) {
  Gate g = simple(GateKind::Toffoli, t);
  g.controls = {{c1, true}, {c2, true}};
  return g;
}

inline Gate ccz(int c1, int c2, int t) {
  Gate g = simple(GateKind::CCZ, t);
  g.controls = {{c1, true}, {c2, true}};
  return g;
}

inline Gate mcx(std::vector<Control> controls, int t) {
  Gate g = simple(GateKind::MCX, t);
  g.controls = std::move(controls);
  return g;
}

inline Gate mcz(std::vector<Control> controls, int t) {
  Gate g = simple(GateKind::MCZ, t);
  g.controls = std::move(controls);
  return g;
}

inline Gate cswap(int c, int a, int b) {
  Gate g;
  g.kind = GateKind::CSwap;
  g.targets = {a, b};
  g.controls = {{c, true}};
  return g;
}

inline Gate measure(int w, int bit) {
  Gate g = simple(GateKind::Measure, w);
  g.cbit = bit;
  return g;
}

inline Gate reset(int w) { return simple(GateKind::Reset, w); }

inline Gate dense(Eigen::MatrixXcd u, std::vector<int> targets,
                  std::string label = "U") {
  Gate g;
  g.kind = GateKind::Dense;
  g.targets = std::move(targets);
  g.dense = std::make_shared<const Eigen::MatrixXcd>(std::move(u));
  g.label = std::move(label);
  return g;
}

}  // namespace gate

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::CRy: return "CRY";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::CCZ: return "CCZ";
    case GateKind::MCX: return "MCX";
    case GateKind::MCZ: return "MCZ";
    case GateKind::CSwap: return "CSWAP";
    case GateKind::Measure: return "MEASURE";
    case GateKind::Reset: return "RESET";
    case GateKind::Dense: return "DENSE";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Gate counts
// ---------------------------------------------------------------------------

/// Tally over a gate list. `clifford` covers the 1- and 2-qubit Clifford
/// kinds (X/Y/Z/H/S/Sdg/CNOT/CZ/Swap), `t_like` is T plus Tdg, `rotations`
/// counts unsynthesized Ry/Rz/CRy, `two_qubit` counts every gate spanning
/// two or more wires, and `other` holds the not-yet-lowered multi-qubit
/// kinds (Toffoli/CCZ/MCX/MCZ/CSwap/Dense). All fields are additive under
/// composition.
struct GateCounts {
  long clifford = 0;
  long t_like = 0;
  long rotations = 0;
  long measurements = 0;
  long two_qubit = 0;
  long other = 0;

  GateCounts& operator+=(const GateCounts& o) {
    clifford += o.clifford;
    t_like += o.t_like;
    rotations += o.rotations;
    measurements += o.measurements;
    two_qubit += o.two_qubit;
    other += o.other;
    return *this;
  }
  bool operator==(const GateCounts&) const = default;
};

// ---------------------------------------------------------------------------
// Circuit
// ---------------------------------------------------------------------------

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(Layout layout) : layout_(layout) {}
  Circuit(int n_particles, int eta, int n_ancilla = 0, int n_work = 0,
          int n_cbits = 0)
      : layout_{n_particles, eta, n_ancilla, n_work, n_cbits} {}

  const Layout& layout() const { return layout_; }
  int n_qubits() const { return layout_.total_qubits(); }
  int n_cbits() const { return layout_.n_cbits; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  size_t size() const { return gates_.size(); }

  int wire(const QubitRef& q) const { return layout_.flat(q); }

  void add(Gate g) {
    validate(g);
    gates_.push_back(std::move(g));
  }

  /// Appends another circuit's gates; layouts must match exactly.
  void append(const Circuit& other) {
    detail::require(layout_ == other.layout_,
                    "compose: register layouts differ");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  }

  /// Same circuit on a layout with more work ancillas and/or classical bits.
  /// Existing wires keep their indices (work is the last register).
  Circuit extended(int extra_work, int extra_cbits = 0) const {
    Layout l = layout_;
    l.n_work += extra_work;
    l.n_cbits += extra_cbits;
    Circuit out(l);
    out.gates_ = gates_;
    return out;
  }

  bool is_unitary_only() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) {
      return g.is_unitary_op() && g.condition.empty();
    });
  }

 private:
  void validate(const Gate& g) const {
    const int n = n_qubits();
    detail::require(!g.targets.empty(), "gate has no targets");
    std::vector<int> seen;
    for (int t : g.targets) {
      detail::require(t >= 0 && t < n, "target wire out of range");
      seen.push_back(t);
    }
    for (const Control& c : g.controls) {
      detail::require(c.wire >= 0 && c.wire < n, "control wire out of range");
      seen.push_back(c.wire);
    }
    std::sort(seen.begin(), seen.end());
    detail::require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                    "targets and controls must be disjoint");
    if (g.is_measure() || g.is_reset()) {
      detail::require(g.controls.empty(), "measure/reset cannot be controlled");
      detail::require(g.targets.size() == 1, "measure/reset takes one wire");
    }
    if (g.is_measure()) {
      detail::require(g.cbit >= 0 && g.cbit < layout_.n_cbits,
                      "measure bit out of range");
    }
    for (auto& [bit, val] : g.condition) {
      detail::require(bit >= 0 && bit < layout_.n_cbits,
                      "condition bit out of range");
      detail::require(val == 0 || val == 1, "condition value must be 0 or 1");
    }
    if (g.kind == GateKind::Dense) {
      detail::require(g.dense != nullptr, "dense gate without matrix");
      const auto& m = *g.dense;
      const long dim = 1L << g.targets.size();
      detail::require(m.rows() == dim && m.cols() == dim,
                      "dense matrix dimension mismatch");
      const double dev =
          (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).norm();
      detail::require(dev <= 1e-12 * double(dim),
                      "dense matrix is not unitary");
    }
    switch (g.kind) {
      case GateKind::Swap:
      case GateKind::CSwap:
        detail::require(g.targets.size() == 2, "swap takes two targets");
        break;
      case GateKind::Dense:
        break;
      default:
        detail::require(g.targets.size() == 1, "gate takes one target");
    }
  }

  Layout layout_;
  std::vector<Gate> gates_;
};

/// Kind-level classification used by the tallies and the noise model.
inline bool is_1q_clifford_kind(GateKind k) {
  switch (k) {
    case GateKind::X: case GateKind::Y: case GateKind::Z:
    case GateKind::H: case GateKind::S: case GateKind::Sdg:
      return true;
    default:
      return false;
  }
}

inline GateCounts gate_counts(const Circuit& c, bool include_conditioned = true) {
  GateCounts out;
  for (const Gate& g : c.gates()) {
    if (!include_conditioned && !g.condition.empty()) continue;
    if (g.span() >= 2) out.two_qubit++;
    if (g.is_measure()) {
      out.measurements++;
      continue;
    }
    if (g.is_reset()) continue;
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg:
        out.t_like++;
        break;
      case GateKind::Ry:
      case GateKind::Rz:
      case GateKind::CRy:
        out.rotations++;
        break;
      case GateKind::Toffoli:
      case GateKind::CCZ:
      case GateKind::MCX:
      case GateKind::MCZ:
      case GateKind::CSwap:
      case GateKind::Dense:
        out.other++;
        break;
      default:
        // 1q Cliffords, possibly with extra controls attached. A controlled
        // Clifford kind is only Clifford if it is CNOT/CZ shaped.
        if (g.controls.empty() || g.kind == GateKind::CNOT ||
            g.kind == GateKind::CZ || g.kind == GateKind::Swap) {
          out.clifford++;
        } else if ((g.kind == GateKind::X || g.kind == GateKind::Z) &&
                   g.controls.size() == 1) {
          out.clifford++;  // single-controlled X/Z is CNOT/CZ shaped
        } else {
          out.other++;
        }
    }
  }
  return out;
}

inline Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

inline Gate adjoint_gate(Gate g) {
  detail::require(g.is_unitary_op(), "adjoint of measure/reset");
  switch (g.kind) {
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::T: g.kind = GateKind::Tdg; break;
    case GateKind::Tdg: g.kind = GateKind::T; break;
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::CRy:
      g.theta = -g.theta;
      break;
    case GateKind::Dense: {
      Eigen::MatrixXcd adj = g.dense->adjoint();
      g.dense = std::make_shared<const Eigen::MatrixXcd>(std::move(adj));
      g.label += "+";
      break;
    }
    default:
      break;  // X/Y/Z/H and the controlled X/Z/Swap families are self-adjoint
  }
  return g;
}

/// Reverses the gate order and replaces each gate by its adjoint.
/// Only defined for unitary-only circuits.
inline Circuit inverse(const Circuit& c) {
  detail::require(c.is_unitary_only(),
                  "inverse: circuit contains measure/reset/conditioned gates");
  Circuit out(c.layout());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(adjoint_gate(*it));
  }
  return out;
}

}  // namespace antsym
