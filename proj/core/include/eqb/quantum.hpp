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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqb/rational.hpp"
#include "eqb/spectral.hpp"
#include "eqb/word.hpp"

namespace eqb {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

enum class Axis { X, Y, Z };

enum class GateKind { RX, RY, RZ, Z, X, H, CZ, CNOT };

/// R_x(t) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]],
/// R_y(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
/// R_z(t) = diag(e^{-it/2}, e^{it/2}).
Matrix2 rotation_matrix(Axis axis, double theta);

Matrix2 matmul(const Matrix2& a, const Matrix2& b);
Matrix2 adjoint(const Matrix2& m);

struct Gate {
  GateKind kind = GateKind::X;
  unsigned target = 0;
  std::optional<unsigned> control;
  /// Radians, in (-2pi, 2pi]; rotation kinds only.
  double angle = 0.0;
  /// Exact angle / pi when known.
  std::optional<Rational> pi_multiple;

  static Gate rotation(Axis axis, unsigned target, double angle);
  /// Angle multiple * pi, with the multiple reduced into (-2, 2].
  static Gate rotation(Axis axis, unsigned target, const Rational& multiple);
  static Gate single(GateKind kind, unsigned target);
  static Gate controlled(GateKind kind, unsigned control, unsigned target);

  bool is_rotation() const;
  bool is_two_qubit() const { return control.has_value(); }
  bool touches(unsigned qubit) const { return target == qubit || control == qubit; }
  /// 2x2 matrix of a single-qubit kind, or of the target action of CZ/CNOT.
  Matrix2 matrix() const;
};

struct QCircuit {
  unsigned num_qubits = 0;
  std::vector<Gate> gates;
  unsigned target_qubit = 0;
  /// input_qubits[i] is the qubit holding x_{i+1}.
  std::vector<unsigned> input_qubits;

  /// True when the target is one of the input qubits (no ancilla).
  bool target_is_input() const;
  /// Throws std::invalid_argument on out-of-range indices or control == target.
  void validate() const;
};

/// Dense statevector; qubit q is bit q of the basis index.
class Statevector {
 public:
  explicit Statevector(unsigned num_qubits);
  static Statevector basis(unsigned num_qubits, std::uint64_t index);

  unsigned num_qubits() const { return num_qubits_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }
  double norm() const;
  /// Probability that measuring `qubit` yields 1.
  double probability_one(unsigned qubit) const;

  void apply(const Gate& gate);

 private:
  unsigned num_qubits_;
  std::vector<Complex> amps_;
};

/// Functional form of Statevector::apply.
Statevector apply_gate(Statevector state, const Gate& gate);

/// Standard layout puts the ancilla target on qubit 0 and x_i on qubit i. A word
/// targeted on x_n uses qubits 0..n-1 for x1..x_n instead. Rot(w) becomes
/// R_basis(w*pi) in EQB mode or R_basis(w*pi/levels) in MGD mode; each Refl
/// becomes one CZ per control, input qubit to target.
QCircuit map_to_circuit(const CascadeWord& word, Axis basis, unsigned levels = 1);

struct QuantumRow {
  std::uint64_t row = 0;
  double probability = 0.0;
  bool pass = false;
};

struct QuantumReport {
  std::vector<QuantumRow> rows;

  bool passed() const;
  double min_probability() const;
  std::vector<std::uint64_t> failing_rows() const;
};

inline constexpr double kProbabilityTolerance = 1e-9;

/// Prepares each input row as a basis state (target |0>, or |x_n> when the target
/// is an input), runs the circuit and checks P(target = F(x)) >= 1 - 1e-9.
QuantumReport verify_quantum(const QCircuit& circuit, const TruthVector& truth);

struct BlochPoint {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2pi)
};

struct BlochStep {
  std::size_t step = 0;
  std::string gate;  // "init" for the starting point
  BlochPoint point;
};

/// Bloch coordinates of a single-qubit reduced state; throws when `qubit` is
/// entangled with the rest of the register.
BlochPoint bloch_point(const Statevector& state, unsigned qubit);

/// Target-qubit trajectory: the initial point, then one point after every gate
/// that touches the target.
std::vector<BlochStep> bloch_trace(const QCircuit& circuit,
                                   std::span<const std::uint8_t> assignment);

struct InteractionGraph {
  std::set<std::pair<unsigned, unsigned>> edges;  // (control, target)
  bool triangle_free = true;
  /// Common endpoint of every edge, when one exists.
  std::optional<unsigned> star_center;

  bool is_star_centered_on(unsigned qubit) const;
};

InteractionGraph interaction_graph(const QCircuit& circuit);

/// "pi/2", "-pi", "3*pi/4", or 15 significant digits when no exact multiple is known.
std::string format_angle(const Gate& gate);
/// One QASM statement, e.g. "rx(pi/2) q[0];" or "cz q[1],q[0];".
std::string to_qasm(const Gate& gate);
/// OPENQASM 2.0 header, one qreg, then one gate per line.
std::string to_qasm(const QCircuit& circuit);
/// "step,gate,theta,phi" header then one row per trace point.
std::string to_bloch_csv(std::span<const BlochStep> trace);

std::string to_string(GateKind kind);

}  // namespace eqb
