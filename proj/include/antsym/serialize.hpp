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

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "antsym/circuit.hpp"

namespace antsym {

// Text format, one gate per line with flat wire indices:
//
//   circuit N=<n> eta=<e> ancilla=<a> work=<w> cbits=<c>
//   <KIND>[(theta)] targets=<w0,w1,...> [controls=<w:+|-,...>]
//       [cbit=<b>] [cond=<bit>=<0|1>[,<bit>=<0|1>...]]
//
// '+' marks a closed control (fires on |1>), '-' an open one. '#' starts a
// comment. Angles are printed with 17 significant digits so a round trip
// is bit-exact. DENSE gates carry their matrix inline as
// matrix=<re:im,re:im,...> in row-major order.

namespace detail {

inline std::string format_angle(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

}  // namespace detail

inline std::string to_text(const Circuit& c) {
  std::ostringstream out;
  const Layout& l = c.layout();
  out << "circuit N=" << l.n_particles << " eta=" << l.qubits_per_particle
      << " ancilla=" << l.n_ancilla << " work=" << l.n_work
      << " cbits=" << l.n_cbits << "\n";
  for (const Gate& g : c.gates()) {
    out << kind_name(g.kind);
    if (g.has_angle()) out << "(" << detail::format_angle(g.theta) << ")";
    out << " targets=";
    for (size_t i = 0; i < g.targets.size(); ++i) {
      if (i) out << ",";
      out << g.targets[i];
    }
    if (!g.controls.empty()) {
      out << " controls=";
      for (size_t i = 0; i < g.controls.size(); ++i) {
        if (i) out << ",";
        out << g.controls[i].wire << (g.controls[i].closed ? ":+" : ":-");
      }
    }
    if (g.kind == GateKind::Dense) {
      out << " matrix=";
      const auto& m = *g.dense;
      bool first = true;
      for (long r = 0; r < m.rows(); ++r) {
        for (long col = 0; col < m.cols(); ++col) {
          if (!first) out << ",";
          first = false;
          out << detail::format_angle(m(r, col).real()) << ":"
              << detail::format_angle(m(r, col).imag());
        }
      }
    }
    if (g.is_measure()) out << " cbit=" << g.cbit;
    if (!g.condition.empty()) {
      out << " cond=";
      for (size_t i = 0; i < g.condition.size(); ++i) {
        if (i) out << ",";
        out << g.condition[i].first << "=" << g.condition[i].second;
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace detail {

inline const std::map<std::string, GateKind>& kind_table() {
  static const std::map<std::string, GateKind> table = {
      {"X", GateKind::X},           {"Y", GateKind::Y},
      {"Z", GateKind::Z},           {"H", GateKind::H},
      {"S", GateKind::S},           {"SDG", GateKind::Sdg},
      {"T", GateKind::T},           {"TDG", GateKind::Tdg},
      {"CNOT", GateKind::CNOT},     {"CZ", GateKind::CZ},
      {"SWAP", GateKind::Swap},     {"RY", GateKind::Ry},
      {"RZ", GateKind::Rz},         {"CRY", GateKind::CRy},
      {"TOFFOLI", GateKind::Toffoli}, {"CCZ", GateKind::CCZ},
      {"MCX", GateKind::MCX},       {"MCZ", GateKind::MCZ},
      {"CSWAP", GateKind::CSwap},   {"MEASURE", GateKind::Measure},
      {"RESET", GateKind::Reset},   {"DENSE", GateKind::Dense},
  };
  return table;
}

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  fail("parse error at line " + std::to_string(line) + ": " + what);
}

inline long parse_int(std::string_view tok, int line) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    parse_fail(line, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

inline double parse_double(std::string_view tok, int line) {
  try {
    size_t used = 0;
    const std::string s(tok);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    parse_fail(line, "expected number, got '" + std::string(tok) + "'");
  }
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

inline Circuit from_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  Circuit circuit;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> toks;
    {
      size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        size_t end = pos;
        while (end < line.size() && line[end] != ' ') ++end;
        if (end > pos) toks.push_back(line.substr(pos, end - pos));
        pos = end;
      }
    }
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks[0] != "circuit" || toks.size() != 6)
        detail::parse_fail(lineno, "expected circuit header");
      Layout l;
      for (size_t i = 1; i < 6; ++i) {
        const auto kv = detail::split(toks[i], '=');
        if (kv.size() != 2) detail::parse_fail(lineno, "bad header field");
        const long v = detail::parse_int(kv[1], lineno);
        if (kv[0] == "N") l.n_particles = int(v);
        else if (kv[0] == "eta") l.qubits_per_particle = int(v);
        else if (kv[0] == "ancilla") l.n_ancilla = int(v);
        else if (kv[0] == "work") l.n_work = int(v);
        else if (kv[0] == "cbits") l.n_cbits = int(v);
        else detail::parse_fail(lineno, "unknown header field '" +
                                            std::string(kv[0]) + "'");
      }
      circuit = Circuit(l);
      have_header = true;
      continue;
    }

    // KIND or KIND(theta)
    std::string_view head = toks[0];
    Gate g;
    if (const size_t paren = head.find('('); paren != std::string_view::npos) {
      if (head.back() != ')') detail::parse_fail(lineno, "unbalanced '('");
      g.theta = detail::parse_double(
          head.substr(paren + 1, head.size() - paren - 2), lineno);
      head = head.substr(0, paren);
    }
    const auto& table = detail::kind_table();
    const auto it = table.find(std::string(head));
    if (it == table.end())
      detail::parse_fail(lineno, "unknown gate name '" + std::string(head) + "'");
    g.kind = it->second;

    std::string matrix_payload;
    for (size_t i = 1; i < toks.size(); ++i) {
      const auto kv = detail::split(toks[i], '=');
      if (kv.size() < 2) detail::parse_fail(lineno, "expected key=value");
      const std::string_view key = kv[0];
      // cond=3=1,4=0 re-joins on '=' past the first
      std::string value(toks[i].substr(key.size() + 1));
      if (key == "targets") {
        for (const auto& t : detail::split(value, ','))
          g.targets.push_back(int(detail::parse_int(t, lineno)));
      } else if (key == "controls") {
        for (const auto& cstr : detail::split(value, ',')) {
          const auto parts = detail::split(cstr, ':');
          if (parts.size() != 2 || (parts[1] != "+" && parts[1] != "-"))
            detail::parse_fail(lineno, "bad control '" + std::string(cstr) + "'");
          g.controls.push_back(
              {int(detail::parse_int(parts[0], lineno)), parts[1] == "+"});
        }
      } else if (key == "cbit") {
        g.cbit = int(detail::parse_int(value, lineno));
      } else if (key == "cond") {
        for (const auto& cstr : detail::split(value, ',')) {
          const auto parts = detail::split(cstr, '=');
          if (parts.size() != 2)
            detail::parse_fail(lineno, "bad condition '" + std::string(cstr) + "'");
          g.condition.emplace_back(int(detail::parse_int(parts[0], lineno)),
                                   int(detail::parse_int(parts[1], lineno)));
        }
      } else if (key == "matrix") {
        matrix_payload = value;
      } else {
        detail::parse_fail(lineno, "unknown field '" + std::string(key) + "'");
      }
    }

    if (g.kind == GateKind::Dense) {
      const auto entries = detail::split(matrix_payload, ',');
      const long dim = 1L << g.targets.size();
      if (long(entries.size()) != dim * dim)
        detail::parse_fail(lineno, "dense matrix entry count mismatch");
      Eigen::MatrixXcd m(dim, dim);
      long idx = 0;
      for (long r = 0; r < dim; ++r) {
        for (long col = 0; col < dim; ++col, ++idx) {
          const auto parts = detail::split(entries[size_t(idx)], ':');
          if (parts.size() != 2) detail::parse_fail(lineno, "bad matrix entry");
          m(r, col) = cdouble(detail::parse_double(parts[0], lineno),
                              detail::parse_double(parts[1], lineno));
        }
      }
      g.dense = std::make_shared<const Eigen::MatrixXcd>(std::move(m));
      g.label = "U";
    }

    try {
      circuit.add(std::move(g));
    } catch (const Error& e) {
      detail::parse_fail(lineno, e.what());
    }
  }

  detail::require(have_header, "parse error: missing circuit header");
  return circuit;
}

}  // namespace antsym
