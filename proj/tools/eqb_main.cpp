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

// eqb: batch front-end for Boolean-function synthesis into rotation cascades.
//
//   eqb synth    JOB [flags]   full pipeline, optional file emission
//   eqb spectrum JOB [flags]   Walsh spectrum only
//   eqb verify   JOB [flags]   pipeline plus per-row verification listing
//   eqb trace    JOB --input B target-qubit Bloch trajectory as CSV
//
// Exit codes: 0 verification passed, 2 verification failed, 1 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eqb/pipeline.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;

struct Options {
  std::string job_path;
  std::string truth;
  std::optional<unsigned> n;
  std::string mode;
  std::string basis;
  std::optional<std::int64_t> dihedral_n;
  std::optional<std::int64_t> modulus;
  std::optional<std::int64_t> levels;
  bool no_symmetry = false;
  bool allow_large = false;
  std::vector<std::string> emit;
  std::string out_dir = ".";
  std::string input;
};

void add_job_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("job", opt.job_path, "JSON job file ('-' reads stdin)");
  cmd.add_option("--truth", opt.truth, "truth vector as digits, row 0 first (x1 most significant)");
  cmd.add_option("--n", opt.n, "number of input variables (inferred from --truth)");
  cmd.add_option("--mode", opt.mode, "eqb or mgd")->check(CLI::IsMember({"eqb", "mgd"}, CLI::ignore_case));
  cmd.add_option("--basis", opt.basis, "rotation axis, x or y")->check(CLI::IsMember({"x", "y"}, CLI::ignore_case));
  cmd.add_option("--dihedral-n", opt.dihedral_n, "dihedral group parameter (MGD)");
  cmd.add_option("--modulus", opt.modulus, "spectrum modulus (MGD)");
  cmd.add_option("--levels", opt.levels, "angle divisor p (MGD)");
  cmd.add_flag("--no-symmetry", opt.no_symmetry, "skip the least-significant-variable reduction");
  cmd.add_flag("--allow-large", opt.allow_large, "lift the 10-variable guard");
  cmd.add_option("--emit", opt.emit, "comma-separated: word,qasm,json,bloch-csv")->delimiter(',');
  cmd.add_option("--out-dir", opt.out_dir, "directory for emitted files");
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Job text with command-line overrides folded in, so one validator sees everything.
std::string assemble_job(const Options& opt) {
  nlohmann::json doc = nlohmann::json::object();
  if (!opt.job_path.empty()) {
    const std::string text = read_text(opt.job_path);
    if (opt.truth.empty() && !opt.n && opt.mode.empty() && opt.basis.empty() && !opt.dihedral_n &&
        !opt.modulus && !opt.levels && !opt.no_symmetry && !opt.allow_large && opt.emit.empty()) {
      return text;  // untouched, so diagnostics keep the file's line numbers
    }
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      return text;  // let parse_job report the syntax error
    }
  }
  if (!opt.truth.empty()) {
    doc["truth"] = opt.truth;
    if (!opt.n && !doc.contains("n")) {
      doc["n"] = std::bit_width(opt.truth.size()) - 1;
    }
  }
  if (opt.n) doc["n"] = *opt.n;
  if (!opt.mode.empty()) doc["mode"] = opt.mode;
  if (!opt.basis.empty()) doc["basis"] = opt.basis;
  if (opt.dihedral_n) doc["dihedral_n"] = *opt.dihedral_n;
  if (opt.modulus) doc["modulus"] = *opt.modulus;
  if (opt.levels) doc["levels"] = *opt.levels;
  if (opt.no_symmetry) doc["symmetry"] = false;
  if (opt.allow_large) doc["allow_large"] = true;
  if (!opt.emit.empty()) doc["emit"] = opt.emit;
  return doc.dump(2);
}

std::string stem_of(const Options& opt) {
  if (opt.job_path.empty() || opt.job_path == "-") {
    return "circuit";
  }
  return std::filesystem::path(opt.job_path).stem().string();
}

void print_summary(const eqb::SynthesisReport& r) {
  using eqb::to_string;
  std::cout << "mode          " << (r.job.mode == eqb::Mode::Eqb ? "eqb" : "mgd") << "\n";
  std::cout << "spectrum      " << to_string(r.spectrum) << "\n";
  std::cout << "canonical     " << r.canonical.letters.size() << " letters\n";
  std::cout << "simplified    " << r.simplified.letters.size() << " letters: " << to_string(r.simplified) << "\n";
  if (r.job.mode == eqb::Mode::Eqb) {
    std::cout << "symmetry      " << (r.symmetry_detected ? "detected" : "none");
    if (r.symmetry_applied) {
      std::cout << ", target x" << *r.final_word.target_var << " (no ancilla, "
                << *r.unreduced_gate_count << " -> " << r.circuit.gates.size() << " gates)";
    }
    std::cout << "\n";
  }
  std::cout << "final word    " << to_string(r.final_word) << "\n";
  std::cout << "circuit       " << r.circuit.num_qubits << " qubits, " << r.circuit.gates.size() << " gates";
  for (const auto& [kind, count] : r.gate_counts()) {
    std::cout << ", " << kind << " " << count;
  }
  std::cout << "\n";
  const auto rows = r.classical.rows.size();
  std::cout << "classical     " << rows - r.classical.failing_rows().size() << "/" << rows << " rows pass\n";
  if (r.quantum) {
    std::cout << "quantum       " << rows - r.quantum->failing_rows().size() << "/" << rows
              << " rows pass, min probability " << r.quantum->min_probability() << "\n";
  }
  std::cout << "connectivity  " << r.connectivity.edges.size() << " edges, "
            << (r.connectivity.is_star_centered_on(r.circuit.target_qubit) ? "star on target" : "NOT a star")
            << ", " << (r.connectivity.triangle_free ? "triangle-free" : "HAS TRIANGLES") << "\n";
  std::cout << "result        " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& t : r.timings) {
    std::fprintf(stderr, "time %-18s %.6f s\n", t.stage.c_str(), t.seconds);
  }
}

void print_rows(const eqb::SynthesisReport& r) {
  std::cout << "row,inputs,f,classical_expected,classical_actual,classical,quantum_probability,quantum\n";
  for (std::size_t i = 0; i < r.classical.rows.size(); ++i) {
    const auto& c = r.classical.rows[i];
    std::string bits;
    for (const auto b : eqb::row_assignment(c.row, r.job.n)) {
      bits += static_cast<char>('0' + b);
    }
    std::cout << c.row << "," << bits << "," << r.job.truth[c.row] << ",\"" << c.expected << "\",\"" << c.actual
              << "\"," << (c.pass ? "pass" : "FAIL");
    if (r.quantum) {
      const auto& q = r.quantum->rows[i];
      std::cout << "," << q.probability << "," << (q.pass ? "pass" : "FAIL");
    } else {
      std::cout << ",,";
    }
    std::cout << "\n";
  }
}

std::vector<eqb::EmitTarget> emit_targets(const eqb::JobSpec& job) { return job.emit; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize Boolean functions into verified rotation-gate cascades"};
  app.require_subcommand(1);
  Options opt;

  auto* synth = app.add_subcommand("synth", "run the full pipeline and optionally emit files");
  auto* spectrum = app.add_subcommand("spectrum", "print the Walsh spectrum");
  auto* verify = app.add_subcommand("verify", "run the pipeline and list every verified row");
  auto* trace = app.add_subcommand("trace", "print the target qubit's Bloch trajectory as CSV");
  for (auto* cmd : {synth, spectrum, verify, trace}) {
    add_job_options(*cmd, opt);
  }
  trace->add_option("--input", opt.input, "input assignment bits, x1 first")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  eqb::JobSpec job;
  try {
    job = eqb::parse_job(assemble_job(opt));
  } catch (const eqb::JobError& e) {
    std::cerr << "eqb: invalid job: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "eqb: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      const auto w = job.mode == eqb::Mode::Eqb ? eqb::spectrum_exact(job.truth)
                                                 : eqb::spectrum_mod(job.truth, *job.modulus);
      std::cout << eqb::to_string(w) << "\n";
      return kExitPass;
    }

    const auto report = eqb::run_pipeline(job);

    if (trace->parsed()) {
      if (opt.input.size() != job.n ||
          opt.input.find_first_not_of("01") != std::string::npos) {
        std::cerr << "eqb: --input needs " << job.n << " bits\n";
        return kExitUsage;
      }
      std::vector<std::uint8_t> bits;
      for (const char c : opt.input) {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      std::cout << eqb::to_bloch_csv(eqb::bloch_trace(report.circuit, bits));
      return kExitPass;
    }

    if (verify->parsed()) {
      print_rows(report);
      std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    } else {
      print_summary(report);
    }
    const auto targets = emit_targets(job);
    if (!targets.empty()) {
      for (const auto& path : eqb::emit(report, targets, opt.out_dir, stem_of(opt))) {
        std::cerr << "wrote " << path.string() << "\n";
      }
    }
    return report.passed() ? kExitPass : kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "eqb: " << e.what() << "\n";
    return kExitUsage;
  }
}
