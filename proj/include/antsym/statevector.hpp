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

#include <cstdint>
#include <random>
#include <vector>

#include "antsym/apply.hpp"
#include "antsym/circuit.hpp"

namespace antsym {

struct StateVector {
  int n_qubits = 0;
  std::vector<cdouble> amps;

  StateVector() = default;
  explicit StateVector(int n) : n_qubits(n), amps(size_t(1) << n, 0.0) {
    amps[0] = 1.0;
  }

  size_t dim() const { return amps.size(); }

  double norm() const {
    double s = 0;
    for (const cdouble& a : amps) s += std::norm(a);
    return std::sqrt(s);
  }

  void normalize() {
    const double n = norm();
    detail::require(n > 0, "cannot normalize the zero vector");
    for (cdouble& a : amps) a /= n;
  }

  /// Probability of wire `q` reading 1.
  double prob_one(int q) const {
    const uint64_t bit = uint64_t(1) << q;
    double p = 0;
    for (uint64_t i = 0; i < amps.size(); ++i)
      if (i & bit) p += std::norm(amps[i]);
    return p;
  }

  /// Projects wire `q` onto `value` without renormalizing; returns the
  /// discarded probability weight's complement (the kept weight).
  double project(int q, int value) {
    const uint64_t bit = uint64_t(1) << q;
    double kept = 0;
    for (uint64_t i = 0; i < amps.size(); ++i) {
      const int b = (i & bit) ? 1 : 0;
      if (b != value) {
        amps[i] = 0;
      } else {
        kept += std::norm(amps[i]);
      }
    }
    return kept;
  }
};

inline cdouble inner(const StateVector& a, const StateVector& b) {
  detail::require(a.dim() == b.dim(), "dimension mismatch");
  cdouble s = 0;
  for (size_t i = 0; i < a.amps.size(); ++i)
    s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

/// One measurement branch of a run: the classical register at the end,
/// the outcome bits in measurement order, the branch probability, and the
/// post-branch (normalized) state.
struct BranchRecord {
  std::vector<int> cbits;
  std::vector<int> outcome;
  double probability = 0.0;
  StateVector state;
};

enum class RunMode { Enumerate, Sample };

struct RunOptions {
  RunMode mode = RunMode::Enumerate;
  uint64_t seed = 0;
  int qubit_cap = 24;
  double prune_threshold = 1e-14;  // drop branches below this probability
};

namespace detail {

inline bool condition_holds(const Gate& g, const std::vector<int>& cbits) {
  for (auto& [bit, val] : g.condition)
    if (cbits[size_t(bit)] != val) return false;
  return true;
}

struct PendingBranch {
  StateVector state;
  std::vector<int> cbits;
  std::vector<int> outcome;
  double probability = 1.0;
  size_t next_gate = 0;
};

}  // namespace detail

/// Runs a circuit from |0...0>. Enumerate mode returns every measurement
/// branch with its exact probability; sample mode follows one random path.
/// Classical conditions are evaluated against the branch's bits. Reset
/// projects-and-flips, splitting the branch when the wire is in
/// superposition (no outcome bit is recorded for resets).
inline std::vector<BranchRecord> run_statevector(const Circuit& c,
                                                 const RunOptions& opts = {}) {
  detail::require(c.n_qubits() <= opts.qubit_cap,
                  "run_statevector: qubit cap exceeded");
  const auto& gates = c.gates();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<detail::PendingBranch> stack;
  {
    detail::PendingBranch init;
    init.state = StateVector(c.n_qubits());
    init.cbits.assign(size_t(c.n_cbits()), 0);
    stack.push_back(std::move(init));
  }

  std::vector<BranchRecord> done;
  while (!stack.empty()) {
    detail::PendingBranch br = std::move(stack.back());
    stack.pop_back();

    bool dead = false;
    while (br.next_gate < gates.size()) {
      const Gate& g = gates[br.next_gate++];
      if (!detail::condition_holds(g, br.cbits)) continue;

      if (g.is_unitary_op()) {
        detail::apply_unitary_gate(br.state.amps.data(), br.state.n_qubits, g);
        continue;
      }

      const int q = g.targets[0];
      const double p1 = br.state.prob_one(q);
      const double p0 = 1.0 - p1;

      int picked;
      bool split = false;
      if (opts.mode == RunMode::Sample) {
        picked = (unif(rng) < p1) ? 1 : 0;
      } else {
        if (p1 <= opts.prune_threshold) {
          picked = 0;
        } else if (p0 <= opts.prune_threshold) {
          picked = 1;
        } else {
          picked = 0;
          split = true;
        }
      }

      if (split) {
        // Fork the 1-outcome; the current branch continues with 0.
        detail::PendingBranch other;
        other.state = br.state;
        other.cbits = br.cbits;
        other.outcome = br.outcome;
        other.probability = br.probability * p1;
        other.next_gate = br.next_gate;
        other.state.project(q, 1);
        other.state.normalize();
        if (g.is_measure()) {
          other.cbits[size_t(g.cbit)] = 1;
          other.outcome.push_back(1);
        } else {
          detail::apply_unitary_gate(other.state.amps.data(),
                                     other.state.n_qubits, gate::x(q));
        }
        stack.push_back(std::move(other));
      }

      const double kept = br.state.project(q, picked);
      if (kept <= 0) {
        dead = true;
        break;
      }
      br.state.normalize();
      br.probability *= (picked == 1) ? p1 : p0;
      if (g.is_measure()) {
        br.cbits[size_t(g.cbit)] = picked;
        br.outcome.push_back(picked);
      } else if (picked == 1) {
        detail::apply_unitary_gate(br.state.amps.data(), br.state.n_qubits,
                                   gate::x(q));
      }
    }

    if (!dead) {
      BranchRecord rec;
      rec.cbits = std::move(br.cbits);
      rec.outcome = std::move(br.outcome);
      rec.probability = br.probability;
      rec.state = std::move(br.state);
      done.push_back(std::move(rec));
    }
  }
  return done;
}

/// Final state of a measurement-free circuit.
inline StateVector simulate(const Circuit& c, int qubit_cap = 24) {
  detail::require(c.is_unitary_only(), "simulate: circuit has measurements");
  auto branches = run_statevector(c, RunOptions{.qubit_cap = qubit_cap});
  return std::move(branches.front().state);
}

}  // namespace antsym
