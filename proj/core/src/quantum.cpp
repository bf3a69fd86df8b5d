// Copyright 2026 The eqb Authors
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

#include "eqb/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace eqb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

/// multiple - 4k with the result in (-2, 2].
Rational reduce_pi_multiple(const Rational& multiple) {
  const Rational shifted = (multiple - 2) / 4;
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational out = multiple - Rational(4 * k);
  out.canonicalize();
  return out;
}

GateKind rotation_kind(Axis axis) {
  switch (axis) {
    case Axis::X:
      return GateKind::RX;
    case Axis::Y:
      return GateKind::RY;
    case Axis::Z:
      return GateKind::RZ;
  }
  throw std::invalid_argument("unknown axis");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Statevector prepare_row(const QCircuit& circuit, std::span<const std::uint8_t> assignment) {
  if (assignment.size() != circuit.input_qubits.size()) {
    throw std::invalid_argument("assignment binds " + std::to_string(assignment.size()) +
                                " variables, circuit has " +
                                std::to_string(circuit.input_qubits.size()) + " inputs");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] > 1) {
      throw std::invalid_argument("assignment value for x" + std::to_string(i + 1) +
                                  " is not a bit");
    }
    if (assignment[i] != 0) {
      index |= std::uint64_t{1} << circuit.input_qubits[i];
    }
  }
  return Statevector::basis(circuit.num_qubits, index);
}

}  // namespace

Matrix2 rotation_matrix(Axis axis, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  switch (axis) {
    case Axis::X:
      return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
    case Axis::Y:
      return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
    case Axis::Z:
      return {std::exp(-kI * (theta / 2)), Complex{0, 0}, Complex{0, 0},
              std::exp(kI * (theta / 2))};
  }
  throw std::invalid_argument("unknown axis");
}

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Gate Gate::rotation(Axis axis, unsigned target, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle is not finite");
  }
  // Keep the angle in (-2pi, 2pi]; R(t + 4pi) = R(t).
  double a = std::fmod(angle, 4 * kPi);
  if (a > 2 * kPi) {
    a -= 4 * kPi;
  } else if (a <= -2 * kPi) {
    a += 4 * kPi;
  }
  Gate g;
  g.kind = rotation_kind(axis);
  g.target = target;
  g.angle = a;
  return g;
}

Gate Gate::rotation(Axis axis, unsigned target, const Rational& multiple) {
  const Rational reduced = reduce_pi_multiple(multiple);
  Gate g;
  g.kind = rotation_kind(axis);
  g.target = target;
  g.angle = reduced.get_d() * kPi;
  g.pi_multiple = reduced;
  return g;
}

Gate Gate::single(GateKind kind, unsigned target) {
  if (kind == GateKind::CZ || kind == GateKind::CNOT) {
    throw std::invalid_argument(to_string(kind) + " needs a control qubit");
  }
  Gate g;
  g.kind = kind;
  g.target = target;
  return g;
}

Gate Gate::controlled(GateKind kind, unsigned control, unsigned target) {
  if (kind != GateKind::CZ && kind != GateKind::CNOT) {
    throw std::invalid_argument(to_string(kind) + " is not a two-qubit gate");
  }
  if (control == target) {
    throw std::invalid_argument("control and target are both q[" + std::to_string(target) + "]");
  }
  Gate g;
  g.kind = kind;
  g.target = target;
  g.control = control;
  return g;
}

bool Gate::is_rotation() const {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

Matrix2 Gate::matrix() const {
  switch (kind) {
    case GateKind::RX:
      return rotation_matrix(Axis::X, angle);
    case GateKind::RY:
      return rotation_matrix(Axis::Y, angle);
    case GateKind::RZ:
      return rotation_matrix(Axis::Z, angle);
    case GateKind::Z:
    case GateKind::CZ:
      return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
    case GateKind::X:
    case GateKind::CNOT:
      return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    case GateKind::H: {
      const double r = 1 / std::numbers::sqrt2;
      return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

bool QCircuit::target_is_input() const {
  return std::find(input_qubits.begin(), input_qubits.end(), target_qubit) != input_qubits.end();
}

void QCircuit::validate() const {
  if (target_qubit >= num_qubits) {
    throw std::invalid_argument("target qubit out of range");
  }
  for (const auto q : input_qubits) {
    if (q >= num_qubits) {
      throw std::invalid_argument("input qubit q[" + std::to_string(q) + "] out of range");
    }
  }
  for (const auto& g : gates) {
    if (g.target >= num_qubits || (g.control && *g.control >= num_qubits)) {
      throw std::invalid_argument("gate '" + to_qasm(g) + "' addresses a missing qubit");
    }
    if (g.control && *g.control == g.target) {
      throw std::invalid_argument("gate '" + to_qasm(g) + "' has control == target");
    }
  }
}

Statevector::Statevector(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > 30) {
    throw std::invalid_argument("statevector limited to 30 qubits");
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{0, 0});
  amps_[0] = 1;
}

Statevector Statevector::basis(unsigned num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.amps_.size()) {
    throw std::out_of_range("basis index out of range");
  }
  s.amps_[0] = 0;
  s.amps_[index] = 1;
  return s;
}

double Statevector::norm() const {
  double sum = 0;
  for (const auto& a : amps_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

double Statevector::probability_one(unsigned qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit q[" + std::to_string(qubit) + "] out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) != 0) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

void Statevector::apply(const Gate& gate) {
  if (gate.target >= num_qubits_ || (gate.control && *gate.control >= num_qubits_)) {
    throw std::out_of_range("gate '" + to_qasm(gate) + "' addresses a missing qubit");
  }
  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  const std::uint64_t size = amps_.size();

  if (gate.kind == GateKind::CZ) {
    const std::uint64_t both = tbit | (std::uint64_t{1} << *gate.control);
    for (std::uint64_t i = 0; i < size; ++i) {
      if ((i & both) == both) {
        amps_[i] = -amps_[i];
      }
    }
    return;
  }
  if (gate.kind == GateKind::CNOT) {
    const std::uint64_t cbit = std::uint64_t{1} << *gate.control;
    for (std::uint64_t i = 0; i < size; ++i) {
      if ((i & cbit) != 0 && (i & tbit) == 0) {
        std::swap(amps_[i], amps_[i | tbit]);
      }
    }
    return;
  }

  const Matrix2 m = gate.matrix();
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((i & tbit) != 0) {
      continue;
    }
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | tbit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | tbit] = m[2] * a0 + m[3] * a1;
  }
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

QCircuit map_to_circuit(const CascadeWord& word, Axis basis, unsigned levels) {
  if (basis == Axis::Z) {
    throw std::invalid_argument("cascade rotations must use the X or Y axis");
  }
  if (word.mode == Mode::Eqb && levels != 1) {
    throw std::invalid_argument("EQB mapping takes levels = 1, got " + std::to_string(levels));
  }
  if (word.mode == Mode::Mgd && levels < 2) {
    throw std::invalid_argument("MGD mapping needs levels >= 2, got " + std::to_string(levels));
  }

  QCircuit circuit;
  const unsigned n = word.n_vars;
  if (word.target_var) {
    if (*word.target_var < 1 || *word.target_var > n) {
      throw std::invalid_argument("word target x" + std::to_string(*word.target_var) +
                                  " is not an input variable");
    }
    circuit.num_qubits = n;
    for (unsigned i = 0; i < n; ++i) {
      circuit.input_qubits.push_back(i);
    }
    circuit.target_qubit = *word.target_var - 1;
  } else {
    circuit.num_qubits = n + 1;
    for (unsigned i = 0; i < n; ++i) {
      circuit.input_qubits.push_back(i + 1);
    }
    circuit.target_qubit = 0;
  }

  const unsigned t = circuit.target_qubit;
  for (const auto& letter : word.letters) {
    if (const auto* rot = std::get_if<Rot>(&letter)) {
      if (rot->exponent == 0) {
        throw std::invalid_argument("word is not simplified: it contains a^0");
      }
      Rational multiple = rot->exponent;
      if (word.mode == Mode::Mgd) {
        multiple /= levels;
      }
      circuit.gates.push_back(Gate::rotation(basis, t, multiple));
    } else {
      const VarSet controls = std::get<Refl>(letter).controls;
      if (controls.empty()) {
        throw std::invalid_argument("word is not simplified: it contains an empty reflection");
      }
      for (const unsigned v : controls.vars()) {
        if (v > n) {
          throw std::invalid_argument("reflection on x" + std::to_string(v) +
                                      " exceeds the word's " + std::to_string(n) + " inputs");
        }
        if (word.target_var && v == *word.target_var) {
          throw std::invalid_argument("reflection controlled by the target variable x" +
                                      std::to_string(v));
        }
        circuit.gates.push_back(Gate::controlled(GateKind::CZ, circuit.input_qubits[v - 1], t));
      }
    }
  }
  circuit.validate();
  return circuit;
}

bool QuantumReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const QuantumRow& r) { return r.pass; });
}

double QuantumReport::min_probability() const {
  double p = 1.0;
  for (const auto& r : rows) {
    p = std::min(p, r.probability);
  }
  return p;
}

std::vector<std::uint64_t> QuantumReport::failing_rows() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows) {
    if (!r.pass) {
      out.push_back(r.row);
    }
  }
  return out;
}

QuantumReport verify_quantum(const QCircuit& circuit, const TruthVector& truth) {
  if (!truth.is_binary()) {
    throw std::invalid_argument("quantum verification needs a binary truth vector");
  }
  if (circuit.input_qubits.size() != truth.n) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.input_qubits.size()) +
                                " inputs, truth vector has " + std::to_string(truth.n));
  }
  circuit.validate();
  QuantumReport report;
  report.rows.reserve(truth.size());
  for (std::uint64_t row = 0; row < truth.size(); ++row) {
    Statevector state = prepare_row(circuit, row_assignment(row, truth.n));
    for (const auto& g : circuit.gates) {
      state.apply(g);
    }
    const double p1 = state.probability_one(circuit.target_qubit);
    const double p = truth[row] == 1 ? p1 : 1.0 - p1;
    report.rows.push_back({row, p, p >= 1.0 - kProbabilityTolerance});
  }
  return report;
}

BlochPoint bloch_point(const Statevector& state, unsigned qubit) {
  if (qubit >= state.num_qubits()) {
    throw std::out_of_range("qubit q[" + std::to_string(qubit) + "] out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const auto amps = state.amplitudes();
  double p0 = 0;
  double p1 = 0;
  Complex rho01{0, 0};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & bit) != 0) {
      p1 += std::norm(amps[i]);
      continue;
    }
    p0 += std::norm(amps[i]);
    rho01 += amps[i] * std::conj(amps[i | bit]);
  }
  const double x = 2 * rho01.real();
  const double y = -2 * rho01.imag();
  const double z = p0 - p1;
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r < 1 - 1e-9) {
    throw std::runtime_error("qubit q[" + std::to_string(qubit) +
                             "] is entangled; its Bloch vector has length " + format_double(r));
  }
  BlochPoint point;
  if (std::hypot(x, y) < 1e-12) {
    point.theta = z > 0 ? 0.0 : kPi;
    point.phi = 0.0;
    return point;
  }
  point.theta = std::acos(std::clamp(z / r, -1.0, 1.0));
  point.phi = std::atan2(y, x);
  if (point.phi < 0) {
    point.phi += 2 * kPi;
  }
  if (point.phi >= 2 * kPi) {
    point.phi = 0.0;
  }
  return point;
}

std::vector<BlochStep> bloch_trace(const QCircuit& circuit,
                                   std::span<const std::uint8_t> assignment) {
  circuit.validate();
  Statevector state = prepare_row(circuit, assignment);
  std::vector<BlochStep> trace;
  trace.push_back({0, "init", bloch_point(state, circuit.target_qubit)});
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    state.apply(g);
    if (!g.touches(circuit.target_qubit)) {
      continue;
    }
    std::string label = to_qasm(g);
    label.pop_back();  // trailing ';'
    trace.push_back({i + 1, std::move(label), bloch_point(state, circuit.target_qubit)});
  }
  return trace;
}

bool InteractionGraph::is_star_centered_on(unsigned qubit) const {
  return std::all_of(edges.begin(), edges.end(), [qubit](const auto& e) {
    return e.first == qubit || e.second == qubit;
  });
}

InteractionGraph interaction_graph(const QCircuit& circuit) {
  InteractionGraph graph;
  std::map<unsigned, std::set<unsigned>> adjacent;
  for (const auto& g : circuit.gates) {
    if (!g.control) {
      continue;
    }
    graph.edges.emplace(*g.control, g.target);
    adjacent[*g.control].insert(g.target);
    adjacent[g.target].insert(*g.control);
  }

  for (const auto& [u, nu] : adjacent) {
    for (const unsigned v : nu) {
      if (v <= u) {
        continue;
      }
      const auto& nv = adjacent[v];
      for (const unsigned w : nu) {
        if (w > v && nv.contains(w)) {
          graph.triangle_free = false;
        }
      }
    }
  }

  if (!graph.edges.empty()) {
    const auto [c, t] = *graph.edges.begin();
    for (const unsigned candidate : {t, c}) {
      if (graph.is_star_centered_on(candidate)) {
        graph.star_center = candidate;
        break;
      }
    }
  }
  return graph;
}

std::string format_angle(const Gate& gate) {
  if (!gate.pi_multiple) {
    return format_double(gate.angle);
  }
  const Rational& m = *gate.pi_multiple;
  if (m == 0) {
    return "0";
  }
  mpz_class num = m.get_num();
  const mpz_class& den = m.get_den();
  std::string s;
  if (num < 0) {
    s += '-';
    num = -num;
  }
  if (num != 1) {
    s += num.get_str() + "*";
  }
  s += "pi";
  if (den != 1) {
    s += "/" + den.get_str();
  }
  return s;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
      return "rx";
    case GateKind::RY:
      return "ry";
    case GateKind::RZ:
      return "rz";
    case GateKind::Z:
      return "z";
    case GateKind::X:
      return "x";
    case GateKind::H:
      return "h";
    case GateKind::CZ:
      return "cz";
    case GateKind::CNOT:
      return "cx";
  }
  return "?";
}

std::string to_qasm(const Gate& gate) {
  std::string s = to_string(gate.kind);
  if (gate.is_rotation()) {
    s += "(" + format_angle(gate) + ")";
  }
  s += ' ';
  if (gate.control) {
    s += "q[" + std::to_string(*gate.control) + "],";
  }
  s += "q[" + std::to_string(gate.target) + "];";
  return s;
}

std::string to_qasm(const QCircuit& circuit) {
  std::string s = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  s += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
  for (const auto& g : circuit.gates) {
    s += to_qasm(g);
    s += '\n';
  }
  return s;
}

std::string to_bloch_csv(std::span<const BlochStep> trace) {
  std::string s = "step,gate,theta,phi\n";
  for (const auto& step : trace) {
    s += std::to_string(step.step);
    s += ",\"" + step.gate + "\",";
    s += format_double(step.point.theta) + "," + format_double(step.point.phi) + "\n";
  }
  return s;
}

}  // namespace eqb
