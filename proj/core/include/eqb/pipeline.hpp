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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqb/cascade.hpp"
#include "eqb/quantum.hpp"
#include "eqb/spectral.hpp"
#include "eqb/word.hpp"

namespace eqb {

inline constexpr int kReportSchemaVersion = 1;

enum class EmitTarget { Word, Qasm, Json, BlochCsv };

std::string to_string(EmitTarget target);
std::optional<EmitTarget> parse_emit_target(std::string_view name);

/// A fully resolved synthesis job.
struct JobSpec {
  unsigned n = 0;
  Mode mode = Mode::Eqb;
  std::int64_t dihedral_n = 3;
  /// MGD only; defaults to dihedral_n.
  std::optional<std::int64_t> modulus;
  /// Angle divisor of the mapping: 1 in EQB, defaults to dihedral_n in MGD.
  unsigned levels = 1;
  Axis basis = Axis::X;
  TruthVector truth;
  bool symmetry = true;
  std::vector<EmitTarget> emit;
  /// Assignment for the bloch-csv trace, x1 first; defaults to all zeros.
  std::string trace_input;
  /// Lifts the 10-variable guard.
  bool allow_large = false;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

enum class JobErrorCode {
  Syntax,
  UnknownField,
  MissingField,
  BadType,
  BadValue,
  TruthLength,
  TooManyVariables,
  EvenModulus,
  NonBinaryValue,
};

class JobError : public std::runtime_error {
 public:
  JobError(JobErrorCode code, std::string field, std::size_t line, const std::string& message);

  JobErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }
  /// 1-based line of the offending field in the job text.
  std::size_t line() const { return line_; }

 private:
  JobErrorCode code_;
  std::string field_;
  std::size_t line_;
};

/// Parses and validates a JSON job document, e.g.
///   {"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 3, "truth": "0110"}
/// Truth is a digit string (row 0 first) or an integer array.
JobSpec parse_job(std::string_view text);

/// Canonical JSON echo of a job; parse_job(job_to_json(j)) == j.
std::string job_to_json(const JobSpec& job);

/// Raised by run_pipeline when a stage throws.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct SynthesisReport {
  JobSpec job;
  WalshSpectrum spectrum;
  CascadeWord canonical;
  CascadeWord simplified;
  bool symmetry_detected = false;
  bool symmetry_applied = false;
  /// The word that is mapped: simplified, or the symmetry-reduced word.
  CascadeWord final_word;
  QCircuit circuit;
  /// Gate count the simplified word would map to, when symmetry replaced it.
  std::optional<std::size_t> unreduced_gate_count;
  ClassicalReport classical;
  /// EQB only.
  std::optional<QuantumReport> quantum;
  InteractionGraph connectivity;
  std::vector<StageTiming> timings;

  bool connectivity_ok() const;
  bool passed() const;
  std::map<std::string, std::size_t> gate_counts() const;
};

/// spectrum -> canonical -> simplify -> symmetry -> map -> verify_classical ->
/// verify_quantum (EQB) -> interaction_graph.
SynthesisReport run_pipeline(const JobSpec& job);

/// Deterministic JSON report (timings excluded).
std::string report_to_json(const SynthesisReport& report);

/// The job's trace_input as bits.
std::vector<std::uint8_t> trace_assignment(const JobSpec& job);

/// Writes <stem>.word, <stem>.qasm, <stem>.json and <stem>.bloch.csv as requested.
/// Returns the written paths; throws std::runtime_error naming the path on I/O failure.
std::vector<std::filesystem::path> emit(const SynthesisReport& report,
                                        std::span<const EmitTarget> targets,
                                        const std::filesystem::path& out_dir,
                                        const std::string& stem = "circuit");

}  // namespace eqb
