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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eqb/pipeline.hpp"
#include "test_support.hpp"

using namespace eqb;
using eqb::testing::random_truth;

namespace {

JobErrorCode error_code(const std::string& text) {
  try {
    (void)parse_job(text);
  } catch (const JobError& e) {
    return e.code();
  }
  FAIL("job parsed: " << text);
  return JobErrorCode::Syntax;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("eqb_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_job examples and defaults") {
  const auto xor_job = parse_job(R"({"n": 2, "mode": "eqb", "truth": "0110"})");
  CHECK(xor_job.n == 2);
  CHECK(xor_job.mode == Mode::Eqb);
  CHECK(xor_job.truth == TruthVector::from_digits("0110"));
  CHECK(xor_job.basis == Axis::X);
  CHECK(xor_job.symmetry);
  CHECK_FALSE(xor_job.modulus.has_value());
  CHECK(xor_job.levels == 1);
  CHECK(xor_job.trace_input == "00");

  const auto zero = parse_job(R"({"n": 1, "mode": "eqb", "truth": "00"})");
  CHECK(zero.truth.values == std::vector<std::int64_t>{0, 0});

  const auto mgd = parse_job(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 3, "truth": "0110"})");
  CHECK(mgd.mode == Mode::Mgd);
  CHECK(mgd.dihedral_n == 3);
  CHECK(mgd.modulus == 3);
  CHECK(mgd.levels == 3);

  const auto listed = parse_job(R"({"n": 2, "truth": [0, 1, 1, 0], "basis": "Y", "symmetry": false})");
  CHECK(listed.truth == xor_job.truth);
  CHECK(listed.basis == Axis::Y);
  CHECK_FALSE(listed.symmetry);

  const auto mgd_default = parse_job(R"({"n": 1, "mode": "mgd", "dihedral_n": 5, "truth": [0, 4]})");
  CHECK(mgd_default.modulus == 5);
}

TEST_CASE("parse_job diagnostics are distinct") {
  CHECK(error_code(R"({"n": 2, "truth": "011"})") == JobErrorCode::TruthLength);
  CHECK(error_code(R"({"n": 11, "truth": "0"})") == JobErrorCode::TooManyVariables);
  CHECK(error_code(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 6, "truth": "0110"})") ==
        JobErrorCode::EvenModulus);
  CHECK(error_code(R"({"n": 2, "truth": "0120"})") == JobErrorCode::NonBinaryValue);
  CHECK(error_code(R"({"n": 2, "truth": "0110",)") == JobErrorCode::Syntax);
  CHECK(error_code(R"({"n": 2, "truht": "0110"})") == JobErrorCode::UnknownField);
  CHECK(error_code(R"({"truth": "0110"})") == JobErrorCode::MissingField);
  CHECK(error_code(R"({"n": "2", "truth": "0110"})") == JobErrorCode::BadType);
  CHECK(error_code(R"({"n": 0, "truth": "0"})") == JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "mode": "mgd", "dihedral_n": 4, "truth": "0110"})") == JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 5, "truth": "0110"})") ==
        JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "truth": "0130"})") == JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "modulus": 3, "truth": "0110"})") == JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "truth": "0110", "emit": ["pdf"]})") == JobErrorCode::BadValue);
  CHECK(error_code(R"({"n": 2, "truth": "0110", "trace_input": "1"})") == JobErrorCode::BadValue);
}

TEST_CASE("parse_job errors name the field and line") {
  try {
    (void)parse_job("{\n  \"n\": 2,\n  \"truth\": \"011\"\n}");
    FAIL("expected failure");
  } catch (const JobError& e) {
    CHECK(e.field() == "truth");
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3, field 'truth'") == 0);
  }
}

TEST_CASE("the ten-variable guard is overridable") {
  const std::string truth(std::size_t{1} << 11, '0');
  CHECK(error_code(R"({"n": 11, "truth": ")" + truth + "\"}") == JobErrorCode::TooManyVariables);
  const auto job = parse_job(R"({"n": 11, "allow_large": true, "truth": ")" + truth + "\"}");
  CHECK(job.n == 11);
}

TEST_CASE("job echo round-trips") {
  for (const char* text : {
           R"({"n": 2, "truth": "0110"})",
           R"({"n": 2, "mode": "mgd", "dihedral_n": 5, "modulus": 15, "levels": 4, "truth": [0, 3, 1, 2]})",
           R"({"n": 3, "basis": "y", "symmetry": false, "emit": ["qasm", "word"], "trace_input": "101", "truth": "01101001"})",
       }) {
    const auto job = parse_job(text);
    CHECK(parse_job(job_to_json(job)) == job);
  }
  for (unsigned n = 1; n <= 6; ++n) {
    JobSpec job;
    job.n = n;
    job.truth = random_truth(n);
    job.trace_input = std::string(n, '1');
    CHECK(parse_job(job_to_json(job)) == job);
  }
}

TEST_CASE("run_pipeline on the XOR example, EQB without symmetry") {
  auto job = parse_job(R"({"n": 2, "mode": "eqb", "symmetry": false, "truth": "0110"})");
  const auto report = run_pipeline(job);
  CHECK(to_string(report.spectrum) == "[1/2, 0, 0, -1/2]");
  CHECK(to_string(report.simplified) == "a^1/2 g[x1,x2] a^-1/2 g[x1,x2]");
  CHECK(report.canonical.letters.size() == 10);
  CHECK(report.symmetry_detected);
  CHECK_FALSE(report.symmetry_applied);
  CHECK(report.circuit.gates.size() == 6);
  CHECK(report.gate_counts() == std::map<std::string, std::size_t>{{"cz", 4}, {"rx", 2}});
  CHECK(report.classical.passed());
  REQUIRE(report.quantum.has_value());
  CHECK(report.quantum->passed());
  CHECK(report.passed());
}

TEST_CASE("run_pipeline on the XOR example with symmetry reduction") {
  const auto report = run_pipeline(parse_job(R"({"n": 2, "truth": "0110"})"));
  CHECK(report.symmetry_applied);
  CHECK(to_string(report.final_word) == "a^1/2 g[x1] a^-1/2 g[x1]");
  CHECK(report.circuit.num_qubits == 2);
  CHECK(report.circuit.gates.size() == 4);
  CHECK(report.unreduced_gate_count == 6u);
  CHECK(report.passed());
}

TEST_CASE("run_pipeline on the XOR example, MGD over D3") {
  const auto report = run_pipeline(
      parse_job(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 3, "truth": "0110"})"));
  CHECK(to_string(report.spectrum) == "[-1, 0, 0, 1]");
  CHECK(to_string(report.final_word) == "a^-1 g[x1,x2] a^1 g[x1,x2]");
  CHECK(report.classical.passed());
  CHECK_FALSE(report.quantum.has_value());
  CHECK(report.passed());
}

TEST_CASE("run_pipeline on a constant-zero job") {
  const auto report = run_pipeline(parse_job(R"({"n": 1, "truth": "00"})"));
  CHECK(report.final_word.letters.empty());
  CHECK(report.circuit.gates.empty());
  CHECK(report.passed());
}

TEST_CASE("run_pipeline attaches the stage to errors") {
  JobSpec job;
  job.n = 2;
  job.mode = Mode::Mgd;
  job.dihedral_n = 3;
  job.modulus = 4;
  job.levels = 3;
  job.truth = TruthVector::from_digits("0110");
  try {
    (void)run_pipeline(job);
    FAIL("expected failure");
  } catch (const StageError& e) {
    CHECK(e.stage() == "spectrum");
  }
}

TEST_CASE("emit writes the requested files") {
  const auto dir = scratch_dir("emit");
  const auto mgd = run_pipeline(
      parse_job(R"({"n": 2, "mode": "mgd", "dihedral_n": 3, "modulus": 3, "truth": "0110"})"));
  const std::vector<EmitTarget> word_only{EmitTarget::Word};
  const auto written = emit(mgd, word_only, dir, "xor");
  REQUIRE(written.size() == 1);
  CHECK(written[0] == dir / "xor.word");
  CHECK(slurp(written[0]) == "a^-1 g[x1,x2] a^1 g[x1,x2]\n");

  const auto empty = run_pipeline(parse_job(R"({"n": 1, "truth": "00"})"));
  const std::vector<EmitTarget> qasm{EmitTarget::Qasm};
  CHECK(slurp(emit(empty, qasm, dir, "zero")[0]) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");

  const auto traced = run_pipeline(parse_job(R"({"n": 2, "truth": "0110", "trace_input": "10"})"));
  const std::vector<EmitTarget> csv{EmitTarget::BlochCsv};
  const std::string body = slurp(emit(traced, csv, dir, "xor")[0]);
  const auto last_line = body.substr(body.rfind('\n', body.size() - 2) + 1);
  CHECK(last_line.find(",3.14159265358979,0\n") != std::string::npos);

  const std::vector<EmitTarget> json{EmitTarget::Json};
  CHECK(slurp(emit(traced, json, dir, "xor")[0]).find("\"schema_version\": 1") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("emit surfaces the failing path") {
  const auto dir = scratch_dir("blocked");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  const auto report = run_pipeline(parse_job(R"({"n": 1, "truth": "01"})"));
  const std::vector<EmitTarget> word{EmitTarget::Word};
  try {
    (void)emit(report, word, dir / "file" / "sub");
    FAIL("expected failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("file") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("outputs are deterministic") {
  for (unsigned n = 2; n <= 6; ++n) {
    JobSpec job;
    job.n = n;
    job.truth = random_truth(n);
    job.trace_input = std::string(n, '1');
    const auto a = run_pipeline(job);
    const auto b = run_pipeline(job);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(to_qasm(a.circuit) == to_qasm(b.circuit));
    CHECK(to_string(a.final_word) == to_string(b.final_word));
  }
}
