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

#include "eqb/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <set>
#include <utility>

namespace eqb {

using nlohmann::json;

namespace {

const std::set<std::string> kJobFields = {
    "n",     "mode",     "dihedral_n", "modulus",     "levels",     "basis",
    "truth", "symmetry", "emit",       "trace_input", "allow_large"};

bool is_prime(std::int64_t v) {
  if (v < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      return false;
    }
  }
  return true;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class JobReader {
 public:
  JobReader(std::string_view text, const json& doc) : text_(text), doc_(doc) {}

  [[noreturn]] void fail(JobErrorCode code, const std::string& field, const std::string& msg) const {
    const std::size_t at = text_.find("\"" + field + "\"");
    const std::size_t line = at == std::string_view::npos ? 1 : line_of_offset(text_, at);
    throw JobError(code, field, line, msg);
  }

  bool has(const std::string& field) const { return doc_.contains(field); }

  std::int64_t integer(const std::string& field) const {
    const json& v = doc_.at(field);
    if (!v.is_number_integer()) {
      fail(JobErrorCode::BadType, field, "expected an integer");
    }
    return v.get<std::int64_t>();
  }

  bool boolean(const std::string& field) const {
    const json& v = doc_.at(field);
    if (!v.is_boolean()) {
      fail(JobErrorCode::BadType, field, "expected true or false");
    }
    return v.get<bool>();
  }

  std::string string(const std::string& field) const {
    const json& v = doc_.at(field);
    if (!v.is_string()) {
      fail(JobErrorCode::BadType, field, "expected a string");
    }
    return v.get<std::string>();
  }

  const json& raw(const std::string& field) const { return doc_.at(field); }

 private:
  std::string_view text_;
  const json& doc_;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

template <typename F>
auto timed(SynthesisReport& report, const std::string& stage, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      report.timings.push_back(
          {stage, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    } else {
      auto out = body();
      report.timings.push_back(
          {stage, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
      return out;
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

json word_json(const CascadeWord& word) {
  json out;
  out["text"] = to_string(word);
  out["letters"] = word.letters.size();
  out["rotations"] = word.rotation_count();
  out["target"] = word.target_var ? json("x" + std::to_string(*word.target_var)) : json("ancilla");
  return out;
}

}  // namespace

std::string to_string(EmitTarget target) {
  switch (target) {
    case EmitTarget::Word:
      return "word";
    case EmitTarget::Qasm:
      return "qasm";
    case EmitTarget::Json:
      return "json";
    case EmitTarget::BlochCsv:
      return "bloch-csv";
  }
  return "?";
}

std::optional<EmitTarget> parse_emit_target(std::string_view name) {
  for (const auto t : {EmitTarget::Word, EmitTarget::Qasm, EmitTarget::Json, EmitTarget::BlochCsv}) {
    if (to_string(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

JobError::JobError(JobErrorCode code, std::string field, std::size_t line,
                   const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (field.empty() ? std::string() : ", field '" + field + "'") + ": " +
                         message),
      code_(code),
      field_(std::move(field)),
      line_(line) {}

StageError::StageError(std::string stage, const std::string& message)
    : std::runtime_error("stage '" + stage + "': " + message), stage_(std::move(stage)) {}

JobSpec parse_job(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JobError(JobErrorCode::Syntax, "", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1),
                   std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw JobError(JobErrorCode::Syntax, "", 1, "job must be a JSON object");
  }
  const JobReader in(text, doc);
  for (const auto& [key, value] : doc.items()) {
    if (!kJobFields.contains(key)) {
      in.fail(JobErrorCode::UnknownField, key, "unknown field");
    }
  }

  JobSpec job;
  if (in.has("allow_large")) {
    job.allow_large = in.boolean("allow_large");
  }

  if (!in.has("n")) {
    in.fail(JobErrorCode::MissingField, "n", "the number of input variables is required");
  }
  const std::int64_t n = in.integer("n");
  if (n < 1) {
    in.fail(JobErrorCode::BadValue, "n", "need at least one input variable, got " + std::to_string(n));
  }
  if (n > static_cast<std::int64_t>(kHardMaxVariables) ||
      (!job.allow_large && n > static_cast<std::int64_t>(kDefaultMaxVariables))) {
    in.fail(JobErrorCode::TooManyVariables, "n",
            std::to_string(n) + " variables exceeds the limit of " +
                std::to_string(job.allow_large ? kHardMaxVariables : kDefaultMaxVariables) +
                (job.allow_large ? "" : " (set allow_large to lift it)"));
  }
  job.n = static_cast<unsigned>(n);

  if (in.has("mode")) {
    const std::string mode = lower(in.string("mode"));
    if (mode == "eqb") {
      job.mode = Mode::Eqb;
    } else if (mode == "mgd") {
      job.mode = Mode::Mgd;
    } else {
      in.fail(JobErrorCode::BadValue, "mode", "expected \"eqb\" or \"mgd\", got \"" + mode + "\"");
    }
  }

  if (in.has("basis")) {
    const std::string basis = lower(in.string("basis"));
    if (basis == "x") {
      job.basis = Axis::X;
    } else if (basis == "y") {
      job.basis = Axis::Y;
    } else {
      in.fail(JobErrorCode::BadValue, "basis", "expected \"x\" or \"y\", got \"" + basis + "\"");
    }
  }

  if (in.has("symmetry")) {
    job.symmetry = in.boolean("symmetry");
  }

  if (in.has("emit")) {
    const json& list = in.raw("emit");
    if (!list.is_array()) {
      in.fail(JobErrorCode::BadType, "emit", "expected an array of target names");
    }
    for (const auto& item : list) {
      const auto target = item.is_string() ? parse_emit_target(item.get<std::string>()) : std::nullopt;
      if (!target) {
        in.fail(JobErrorCode::BadValue, "emit",
                "unknown target " + item.dump() + " (word, qasm, json, bloch-csv)");
      }
      if (std::find(job.emit.begin(), job.emit.end(), *target) == job.emit.end()) {
        job.emit.push_back(*target);
      }
    }
  }

  if (in.has("dihedral_n")) {
    job.dihedral_n = in.integer("dihedral_n");
  }
  if (job.mode == Mode::Mgd) {
    if (job.dihedral_n < 3 || !is_prime(job.dihedral_n)) {
      in.fail(JobErrorCode::BadValue, "dihedral_n",
              "MGD needs an odd prime dihedral_n, got " + std::to_string(job.dihedral_n));
    }
    job.modulus = in.has("modulus") ? in.integer("modulus") : job.dihedral_n;
    if (*job.modulus % 2 == 0) {
      in.fail(JobErrorCode::EvenModulus, "modulus",
              "modulus " + std::to_string(*job.modulus) + " is even, so 2^n has no inverse");
    }
    if (*job.modulus < 3 || *job.modulus % job.dihedral_n != 0) {
      in.fail(JobErrorCode::BadValue, "modulus",
              "modulus must be a positive multiple of dihedral_n=" + std::to_string(job.dihedral_n));
    }
    const std::int64_t levels = in.has("levels") ? in.integer("levels") : job.dihedral_n;
    if (levels < 2 || levels > job.dihedral_n) {
      in.fail(JobErrorCode::BadValue, "levels",
              "levels must lie in 2.." + std::to_string(job.dihedral_n) + ", got " +
                  std::to_string(levels));
    }
    job.levels = static_cast<unsigned>(levels);
  } else {
    if (job.dihedral_n < 2) {
      in.fail(JobErrorCode::BadValue, "dihedral_n", "dihedral_n must be >= 2");
    }
    if (in.has("modulus")) {
      in.fail(JobErrorCode::BadValue, "modulus", "EQB arithmetic is exact; modulus applies to MGD only");
    }
    if (in.has("levels") && in.integer("levels") != 1) {
      in.fail(JobErrorCode::BadValue, "levels", "levels applies to MGD only");
    }
    job.levels = 1;
  }

  if (!in.has("truth")) {
    in.fail(JobErrorCode::MissingField, "truth", "the truth vector is required");
  }
  std::vector<std::int64_t> values;
  const json& truth = in.raw("truth");
  if (truth.is_string()) {
    for (const char c : truth.get<std::string>()) {
      if (c < '0' || c > '9') {
        in.fail(JobErrorCode::BadValue, "truth", std::string("non-digit character '") + c + "'");
      }
      values.push_back(c - '0');
    }
  } else if (truth.is_array()) {
    for (const auto& v : truth) {
      if (!v.is_number_integer()) {
        in.fail(JobErrorCode::BadType, "truth", "array entries must be integers");
      }
      values.push_back(v.get<std::int64_t>());
    }
  } else {
    in.fail(JobErrorCode::BadType, "truth", "expected a digit string or an integer array");
  }
  const std::size_t rows = std::size_t{1} << job.n;
  if (values.size() != rows) {
    in.fail(JobErrorCode::TruthLength, "truth",
            "n=" + std::to_string(job.n) + " needs " + std::to_string(rows) + " values, got " +
                std::to_string(values.size()));
  }
  for (std::size_t row = 0; row < rows; ++row) {
    const std::int64_t v = values[row];
    if (job.mode == Mode::Eqb && v != 0 && v != 1) {
      in.fail(JobErrorCode::NonBinaryValue, "truth",
              "EQB needs 0/1 values; row " + std::to_string(row) + " holds " + std::to_string(v));
    }
    if (job.mode == Mode::Mgd && (v < 0 || v >= static_cast<std::int64_t>(job.levels))) {
      in.fail(JobErrorCode::BadValue, "truth",
              "row " + std::to_string(row) + " holds " + std::to_string(v) + ", outside 0.." +
                  std::to_string(job.levels - 1));
    }
  }
  job.truth = TruthVector(job.n, std::move(values));

  job.trace_input = in.has("trace_input") ? in.string("trace_input") : std::string(job.n, '0');
  if (job.trace_input.size() != job.n ||
      !std::all_of(job.trace_input.begin(), job.trace_input.end(),
                   [](char c) { return c == '0' || c == '1'; })) {
    in.fail(JobErrorCode::BadValue, "trace_input",
            "expected " + std::to_string(job.n) + " bits, got \"" + job.trace_input + "\"");
  }
  return job;
}

std::string job_to_json(const JobSpec& job) {
  json doc;
  doc["n"] = job.n;
  doc["mode"] = job.mode == Mode::Eqb ? "eqb" : "mgd";
  doc["dihedral_n"] = job.dihedral_n;
  if (job.modulus) {
    doc["modulus"] = *job.modulus;
  }
  doc["levels"] = job.levels;
  doc["basis"] = job.basis == Axis::X ? "x" : "y";
  const bool digits = std::all_of(job.truth.values.begin(), job.truth.values.end(),
                                  [](std::int64_t v) { return v >= 0 && v <= 9; });
  if (digits) {
    std::string s;
    for (const auto v : job.truth.values) {
      s += static_cast<char>('0' + v);
    }
    doc["truth"] = s;
  } else {
    doc["truth"] = job.truth.values;
  }
  doc["symmetry"] = job.symmetry;
  json emit = json::array();
  for (const auto t : job.emit) {
    emit.push_back(to_string(t));
  }
  doc["emit"] = emit;
  doc["trace_input"] = job.trace_input;
  doc["allow_large"] = job.allow_large;
  return doc.dump(2);
}

bool SynthesisReport::connectivity_ok() const {
  return connectivity.triangle_free && connectivity.is_star_centered_on(circuit.target_qubit);
}

bool SynthesisReport::passed() const {
  return classical.passed() && (!quantum || quantum->passed()) && connectivity_ok();
}

std::map<std::string, std::size_t> SynthesisReport::gate_counts() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : circuit.gates) {
    ++counts[to_string(g.kind)];
  }
  return counts;
}

SynthesisReport run_pipeline(const JobSpec& job) {
  SynthesisReport report;
  report.job = job;
  const DihedralParams params = timed(report, "params", [&] { return DihedralParams(job.dihedral_n); });

  report.spectrum = timed(report, "spectrum", [&] {
    return job.mode == Mode::Eqb ? spectrum_exact(job.truth) : spectrum_mod(job.truth, *job.modulus);
  });
  report.canonical = timed(report, "canonical", [&] { return canonical_cascade(report.spectrum, params); });
  report.simplified = timed(report, "simplify", [&] { return simplify(report.canonical); });
  report.final_word = report.simplified;

  if (job.mode == Mode::Eqb) {
    timed(report, "symmetry", [&] {
      report.symmetry_detected = detect_symmetry(job.truth);
      if (job.symmetry && report.symmetry_detected) {
        report.final_word = reduce_by_symmetry(job.truth, params);
        report.symmetry_applied = true;
      }
    });
  }

  report.circuit = timed(report, "map", [&] {
    if (report.symmetry_applied) {
      report.unreduced_gate_count = map_to_circuit(report.simplified, job.basis, job.levels).gates.size();
    }
    return map_to_circuit(report.final_word, job.basis, job.levels);
  });
  report.classical = timed(report, "verify_classical",
                           [&] { return verify_classical(report.final_word, job.truth); });
  if (job.mode == Mode::Eqb) {
    report.quantum = timed(report, "verify_quantum", [&] { return verify_quantum(report.circuit, job.truth); });
  }
  report.connectivity = timed(report, "interaction_graph", [&] { return interaction_graph(report.circuit); });
  return report;
}

std::string report_to_json(const SynthesisReport& report) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["job"] = json::parse(job_to_json(report.job));

  json spectrum = json::array();
  for (const auto& c : report.spectrum.coeffs) {
    spectrum.push_back(to_string(c));
  }
  doc["spectrum"] = {{"coefficients", spectrum},
                     {"modulus", report.spectrum.modulus ? json(*report.spectrum.modulus) : json(nullptr)}};

  doc["words"] = {{"canonical", word_json(report.canonical)},
                  {"simplified", word_json(report.simplified)},
                  {"final", word_json(report.final_word)}};
  doc["symmetry"] = {{"detected", report.symmetry_detected}, {"applied", report.symmetry_applied}};

  json gates = json::array();
  for (const auto& g : report.circuit.gates) {
    gates.push_back(to_qasm(g));
  }
  json layout = json::object();
  for (std::size_t i = 0; i < report.circuit.input_qubits.size(); ++i) {
    layout["x" + std::to_string(i + 1)] = report.circuit.input_qubits[i];
  }
  doc["circuit"] = {{"num_qubits", report.circuit.num_qubits},
                    {"target_qubit", report.circuit.target_qubit},
                    {"layout", layout},
                    {"gate_count", report.circuit.gates.size()},
                    {"gate_counts", report.gate_counts()},
                    {"unreduced_gate_count",
                     report.unreduced_gate_count ? json(*report.unreduced_gate_count) : json(nullptr)},
                    {"gates", gates}};

  json classical_failures = json::array();
  for (const auto& row : report.classical.rows) {
    if (!row.pass) {
      classical_failures.push_back({{"row", row.row}, {"expected", row.expected}, {"actual", row.actual}});
    }
  }
  doc["verification"]["classical"] = {{"rows", report.classical.rows.size()},
                                      {"pass", report.classical.passed()},
                                      {"failures", classical_failures}};
  if (report.quantum) {
    json quantum_failures = json::array();
    for (const auto& row : report.quantum->rows) {
      if (!row.pass) {
        quantum_failures.push_back({{"row", row.row}, {"probability", row.probability}});
      }
    }
    doc["verification"]["quantum"] = {{"rows", report.quantum->rows.size()},
                                      {"pass", report.quantum->passed()},
                                      {"min_probability", report.quantum->min_probability()},
                                      {"failures", quantum_failures}};
  } else {
    doc["verification"]["quantum"] = nullptr;
  }

  json edges = json::array();
  for (const auto& [c, t] : report.connectivity.edges) {
    edges.push_back({c, t});
  }
  doc["connectivity"] = {{"edges", edges},
                         {"triangle_free", report.connectivity.triangle_free},
                         {"star_on_target", report.connectivity.is_star_centered_on(report.circuit.target_qubit)}};
  doc["pass"] = report.passed();
  return doc.dump(2) + "\n";
}

std::vector<std::uint8_t> trace_assignment(const JobSpec& job) {
  std::vector<std::uint8_t> bits;
  for (const char c : job.trace_input) {
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::vector<std::filesystem::path> emit(const SynthesisReport& report,
                                        std::span<const EmitTarget> targets,
                                        const std::filesystem::path& out_dir,
                                        const std::string& stem) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  for (const auto target : targets) {
    std::filesystem::path path = out_dir;
    std::string body;
    switch (target) {
      case EmitTarget::Word:
        path /= stem + ".word";
        body = to_string(report.final_word) + "\n";
        break;
      case EmitTarget::Qasm:
        path /= stem + ".qasm";
        body = to_qasm(report.circuit);
        break;
      case EmitTarget::Json:
        path /= stem + ".json";
        body = report_to_json(report);
        break;
      case EmitTarget::BlochCsv: {
        path /= stem + ".bloch.csv";
        const auto bits = trace_assignment(report.job);
        body = to_bloch_csv(bloch_trace(report.circuit, bits));
        break;
      }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    out.close();
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace eqb
