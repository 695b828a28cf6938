// Copyright 2026 The monosub Authors
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


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "monosub/coloring.hpp"
#include "monosub/matrix.hpp"
#include "monosub/matrix_io.hpp"
#include "monosub/oracle.hpp"
#include "monosub/perfect_leafset.hpp"
#include "monosub/pipeline.hpp"
#include "monosub/rng.hpp"
#include "monosub/rooted_tree.hpp"
#include "monosub/sequence.hpp"
#include "monosub/witness.hpp"

namespace monosub::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised by a command to finish with a specific status and message.
struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string mode = "best-effort";
  std::string kind = "row";
  std::string input;
  std::string out;
  std::string out_dir = ".";
  std::string lemma;
  std::string depths;
  std::optional<std::size_t> n, d, t, s, m, big_n, ell;
  std::size_t max_attempts = 100'000;
  bool materialize = false;
  bool structural = false;
  bool oracle = false;
};

Json one_based(const IndexList& values) {
  Json out = Json::array();
  for (std::size_t v : values) out.push_back(v + 1);
  return out;
}

Json witness_json(const SubmatrixWitness& w) {
  Json out;
  out["kind"] = w.kind();
  out["rows"] = one_based(w.rows);
  out["cols"] = one_based(w.cols);
  out["row_direction"] = std::string(to_string(w.row_direction));
  if (w.column_direction) {
    out["column_direction"] = std::string(to_string(*w.column_direction));
  }
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += v[i].is_array() ? " " : ",";
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, value] : v.items()) {
      if (!s.empty()) s += ", ";
      s += key + "=" + scalar_text(value);
    }
    return s;
  }
  return v.dump();
}

// Text mirrors the JSON document field by field.
void render_text(std::ostream& out, const Json& doc, const std::string& indent) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  - " << scalar_text(item) << '\n';
      }
    } else {
      out << indent << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit(std::ostream& out, const Config& config, const Json& doc) {
  if (config.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    render_text(out, doc, "");
  }
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Exit{kInput, "cannot write '" + path.string() + "'"};
  body(file);
  if (!file) throw Exit{kInput, "failed writing '" + path.string() + "'"};
}

std::size_t require(const std::optional<std::size_t>& value, const char* flag) {
  if (!value) throw Exit{kInput, std::string("missing required flag ") + flag};
  return *value;
}

std::size_t positive(std::size_t value, const char* flag) {
  if (value == 0) throw Exit{kInput, std::string(flag) + " must be positive"};
  return value;
}

Mode parse_mode(const std::string& text) {
  return text == "guaranteed" ? Mode::kGuaranteed : Mode::kBestEffort;
}

Json generator_json(std::uint64_t seed) {
  Json g;
  g["algorithm"] = std::string(Rng::kAlgorithm);
  g["seed"] = seed;
  return g;
}

std::string generator_comment(std::uint64_t seed) {
  return "generator " + std::string(Rng::kAlgorithm) + " seed " +
         std::to_string(seed);
}

// ---------------------------------------------------------------- find

int cmd_find(const Config& config, std::ostream& out) {
  const std::size_t n = positive(require(config.n, "--n"), "--n");
  const Matrix m = read_matrix_file(config.input);
  ExtractionOptions options;
  options.mode = parse_mode(config.mode);
  options.ell = config.ell;
  const ExtractionResult result = config.kind == "full"
                                      ? find_monotone(m, n, options)
                                      : find_row_monotone(m, n, options);
  if (result.refused) throw Exit{kInput, result.message};

  Json doc;
  doc["command"] = "find";
  doc["n"] = n;
  doc["k"] = result.achieved;
  Json w = witness_json(*result.witness);
  for (auto& [key, value] : w.items()) doc[key] = value;
  doc["mode"] = config.mode;
  doc["guaranteed"] = result.guaranteed_regime;
  doc["success"] = result.success();
  doc["bottleneck"] = result.bottleneck.empty() ? "none" : result.bottleneck;
  Json stages = Json::array();
  for (const auto& stage : result.stages) {
    Json s;
    s["stage"] = stage.name;
    s["value"] = stage.value;
    s["detail"] = stage.detail;
    stages.push_back(s);
  }
  doc["stages"] = stages;
  doc["message"] = result.message;

  if (!config.out.empty()) {
    write_file(config.out, [&](std::ostream& f) { f << doc.dump(2) << '\n'; });
  }
  emit(out, config, doc);
  return result.success() ? kOk : kShortfall;
}

// ---------------------------------------------------------------- witness

Json report_json(const WitnessCheckReport& report) {
  Json doc;
  doc["verdict"] = report.pass ? "PASS" : "FAIL";
  doc["mode"] = report.exhaustive ? "exhaustive" : "sampled";
  doc["tested"] = report.tested;
  doc["total"] = report.total;
  doc["coverage"] = report.coverage;
  if (report.worst) {
    doc["worst_rows"] = one_based(report.worst->rows);
    doc["b_plus"] = one_based(report.worst->b_plus);
    doc["b_minus"] = one_based(report.worst->b_minus);
  }
  return doc;
}

int cmd_witness(const Config& config, std::ostream& out) {
  SampleRequest request;
  request.d = positive(require(config.d, "--d"), "--d");
  request.t = positive(require(config.t, "--t"), "--t");
  request.n = positive(require(config.n, "--n"), "--n");
  request.s = positive(config.s.value_or(std::max<std::size_t>(1, ceil_log2(request.n))),
                       "--s");
  request.seed = config.seed;
  request.max_attempts = positive(config.max_attempts, "--max-attempts");
  if (request.t >= BitVector::kMaxLength) {
    throw Exit{kInput, "--t must be below " + std::to_string(BitVector::kMaxLength)};
  }
  if (config.materialize && request.t > WitnessMatrix::kMaxMaterialize) {
    throw Exit{kInput, "--materialize needs t <= " +
                           std::to_string(WitnessMatrix::kMaxMaterialize)};
  }

  SampledSignMatrix sampled = [&] {
    try {
      return sample_sign_matrix(request);
    } catch (const ExhaustedAttempts& e) {
      throw Exit{kSampling, e.what()};
    }
  }();
  const WitnessMatrix w = build_witness(sampled.matrix);
  VerifyOptions verify;
  verify.budget = config.budget.value_or(verify.budget);
  verify.seed = config.seed;
  const WitnessCheckReport report = verify_witness(w, request.n, verify);

  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  std::ostringstream header;
  header << generator_comment(config.seed) << '\n'
         << "sampled d=" << request.d << " t=" << request.t
         << " n=" << request.n << " s=" << request.s
         << " attempts=" << sampled.attempts;
  Json files = Json::array();
  write_file(dir / "signs.txt",
             [&](std::ostream& f) { write_sign_matrix(f, w.signs(), header.str()); });
  files.push_back((dir / "signs.txt").generic_string());
  write_file(dir / "witness.txt",
             [&](std::ostream& f) { write_witness(f, w, header.str()); });
  files.push_back((dir / "witness.txt").generic_string());
  if (config.materialize) {
    write_file(dir / "matrix.txt", [&](std::ostream& f) {
      write_matrix(f, materialize(w), header.str());
    });
    files.push_back((dir / "matrix.txt").generic_string());
  }

  Json doc;
  doc["command"] = "witness";
  doc["generator"] = generator_json(config.seed);
  doc["d"] = request.d;
  doc["t"] = request.t;
  doc["n"] = request.n;
  doc["s"] = request.s;
  doc["columns"] = w.cols();
  doc["attempts"] = sampled.attempts;
  doc["files"] = files;
  doc["verification"] = report_json(report);
  if (report.counterexample) doc["counterexample"] = witness_json(*report.counterexample);
  emit(out, config, doc);
  return report.pass ? kOk : kCounterexample;
}

// ---------------------------------------------------------------- verify

enum class FileKind { kWitness, kSigns, kMatrix };

FileKind sniff(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{kInput, "cannot open '" + path + "'"};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header_seen) {
      if (line.compare(first, 7, "witness") == 0) return FileKind::kWitness;
      header_seen = true;
      continue;
    }
    return line.find_first_not_of("+- \t\r") == std::string::npos
               ? FileKind::kSigns
               : FileKind::kMatrix;
  }
  return FileKind::kMatrix;
}

SearchBudget search_budget(const Config& config) {
  SearchBudget budget;
  if (config.budget) {
    budget.max_row_subsets = *config.budget;
    budget.max_col_subsets = *config.budget;
  }
  return budget;
}

std::optional<SubmatrixWitness> run_oracle(const Config& config, const Matrix& m,
                                           std::size_t n) {
  try {
    return config.kind == "full"
               ? brute_force_monotone(m, n, search_budget(config))
               : brute_force_row_monotone(m, n, search_budget(config));
  } catch (const BudgetExceeded& e) {
    throw Exit{kInput, e.what()};
  }
}

int cmd_verify(const Config& config, std::ostream& out) {
  const std::size_t n = positive(require(config.n, "--n"), "--n");
  const FileKind kind = sniff(config.input);
  Json doc;
  doc["command"] = "verify";
  doc["n"] = n;
  std::optional<SubmatrixWitness> counterexample;

  if (kind == FileKind::kMatrix) {
    const Matrix m = read_matrix_file(config.input);
    doc["source"] = "matrix";
    doc["d"] = m.rows();
    doc["N"] = m.cols();
    counterexample = run_oracle(config, m, n);
    Json oracle;
    oracle["kind"] = config.kind;
    oracle["result"] = counterexample ? "found" : "absent";
    doc["oracle"] = oracle;
  } else {
    std::ifstream in(config.input);
    const WitnessMatrix w = kind == FileKind::kWitness
                                ? read_witness(in)
                                : WitnessMatrix(read_sign_matrix(in));
    doc["source"] = "witness";
    doc["d"] = w.rows();
    doc["t"] = w.t();
    const bool structural = config.structural || !config.oracle;
    if (structural) {
      VerifyOptions verify;
      verify.budget = config.budget.value_or(verify.budget);
      verify.seed = config.seed;
      const WitnessCheckReport report = verify_witness(w, n, verify);
      doc["structural"] = report_json(report);
      if (report.counterexample) counterexample = report.counterexample;
    }
    if (config.oracle) {
      if (w.t() > WitnessMatrix::kMaxMaterialize) {
        throw Exit{kInput, "--oracle needs t <= " +
                               std::to_string(WitnessMatrix::kMaxMaterialize)};
      }
      const auto found = run_oracle(config, materialize(w), n);
      Json oracle;
      oracle["kind"] = config.kind;
      oracle["result"] = found ? "found" : "absent";
      doc["oracle"] = oracle;
      if (!counterexample && found) counterexample = found;
    }
  }
  doc["verdict"] = counterexample ? "FAIL" : "PASS";
  if (counterexample) doc["counterexample"] = witness_json(*counterexample);
  emit(out, config, doc);
  return counterexample ? kCounterexample : kOk;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const Config& config, std::ostream& out) {
  const std::size_t n = positive(require(config.n, "--n"), "--n");
  const Matrix m = read_matrix_file(config.input);
  const auto found = run_oracle(config, m, n);
  Json doc;
  doc["command"] = "oracle";
  doc["n"] = n;
  doc["kind"] = config.kind;
  doc["result"] = found ? "found" : "absent";
  if (found) doc["witness"] = witness_json(*found);
  emit(out, config, doc);
  return found ? kOk : kShortfall;
}

// ---------------------------------------------------------------- lemma

IndexedSequence random_sequence(Rng& rng, std::size_t dim, std::size_t count) {
  std::vector<std::int64_t> coords(dim * count);
  std::vector<std::int64_t> perm(count);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t k = 0; k < count; ++k) perm[k] = static_cast<std::int64_t>(k + 1);
    rng.shuffle(std::span<std::int64_t>(perm));
    for (std::size_t k = 0; k < count; ++k) coords[k * dim + a] = perm[k];
  }
  IndexList tags(count);
  for (std::size_t k = 0; k < count; ++k) tags[k] = k;
  return IndexedSequence(dim, std::move(coords), std::move(tags));
}

Json vectors_json(const IndexedSequence& seq) {
  Json out = Json::array();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto v = seq.vector(k);
    out.push_back(Json(std::vector<std::int64_t>(v.begin(), v.end())));
  }
  return out;
}

Json tags_json(const IndexedSequence& seq) { return one_based(seq.tags()); }

SignVector random_signs(Rng& rng, std::size_t dim) {
  std::vector<Sign> signs(dim);
  for (Sign& s : signs) s = rng.bit() ? Sign::kPlus : Sign::kMinus;
  return SignVector(std::move(signs));
}

std::string canonical_lemma(const std::string& id) {
  if (id == "split" || id == "3.1") return "split";
  if (id == "tree-like" || id == "3.2") return "tree-like";
  if (id == "perfect" || id == "3.3") return "perfect";
  if (id == "levels" || id == "2.3") return "levels";
  if (id == "mono" || id == "2.4") return "mono";
  throw Exit{kInput, "unknown lemma '" + id +
                         "' (expected split, tree-like, perfect, levels, mono)"};
}

IndexList parse_depths(const std::string& text) {
  IndexList out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw Exit{kInput, "malformed depth '" + item + "' in --Z"};
    }
    out.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct LemmaRun {
  bool regime = true;
  bool ok = false;
};

LemmaRun lemma_split(const Config& config, Rng& rng, Json& doc) {
  const std::size_t d = positive(config.d.value_or(2), "--d");
  const std::size_t count = config.big_n.value_or(64);
  if (count < 2) throw Exit{kInput, "--N must be at least 2"};
  const IndexedSequence seq = random_sequence(rng, d, count);
  doc["parameters"] = Json{{"d", d}, {"N", count}};
  doc["instance"] = vectors_json(seq);
  const BipartiteSplit split = bipartite_split(seq);
  const std::size_t bound = bipartite_split_guarantee(count, d);
  bool ok = split.first.size() == split.second.size() &&
            split.first.size() >= bound &&
            split.first.tags().back() < split.second.tags().front();
  for (std::size_t i = 0; ok && i < split.first.size(); ++i) {
    for (std::size_t j = 0; ok && j < split.second.size(); ++j) {
      ok = sign_diff(split.first.vector(i), split.second.vector(j)) == split.sign;
    }
  }
  doc["output"] = Json{{"sign", split.sign.to_string()},
                       {"size", split.first.size()},
                       {"guarantee", bound},
                       {"A", tags_json(split.first)},
                       {"B", tags_json(split.second)}};
  return {true, ok};
}

LemmaRun lemma_tree_like(const Config& config, Rng& rng, Json& doc) {
  const std::size_t d = positive(config.d.value_or(1), "--d");
  const std::size_t m = config.m.value_or(3);
  const std::size_t exponent = m * (d + 1);
  if (exponent > 24 && !config.big_n) {
    throw Exit{kInput, "2^(m(d+1)) is too large; pass --N explicitly"};
  }
  const std::size_t count = config.big_n.value_or(std::size_t{1} << exponent);
  if (count == 0) throw Exit{kInput, "--N must be positive"};
  const IndexedSequence seq = random_sequence(rng, d, count);
  const bool regime = exponent < 64 && count >= (std::size_t{1} << exponent);
  doc["parameters"] = Json{{"d", d}, {"m", m}, {"N", count}};
  doc["instance"] = count <= 256 ? vectors_json(seq) : Json("omitted (N > 256)");
  try {
    const TreeLikeCertificate cert = tree_like_subsequence(seq, m);
    doc["output"] = Json{{"length", cert.subsequence.size()},
                         {"columns", tags_json(cert.subsequence)}};
    return {regime, verify_certificate(cert) &&
                        is_binary_tree_like(cert.subsequence).has_value()};
  } catch (const InsufficientLength& e) {
    doc["output"] = Json{{"error", e.what()}};
    return {regime, false};
  }
}

LemmaRun lemma_perfect(const Config& config, Rng& rng, Json& doc) {
  const std::size_t d = positive(config.d.value_or(1), "--d");
  const std::size_t m = config.m.value_or(11);
  const std::size_t h = config.t.value_or(2);
  if (m > 20) throw Exit{kInput, "--m is limited to 20 here"};
  LabeledBinaryTree tree(m, d);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p) {
      tree.set_label(Vertex{k, p}, random_signs(rng, d));
    }
  }
  // 2^m >= (2^(d+1) m)^h, compared in log2.
  const double rhs = static_cast<double>(h) *
                     std::log2(std::ldexp(1.0, static_cast<int>(d + 1)) *
                               static_cast<double>(std::max<std::size_t>(m, 1)));
  const bool regime = static_cast<double>(m) >= rhs;
  doc["parameters"] = Json{{"d", d}, {"m", m}, {"t", h}};
  doc["instance"] = "random labels on " + std::to_string(tree.leaf_count() - 1) +
                    " internal vertices";
  try {
    const LeafSet s = perfect_leafset_extract(tree, h);
    IndexList leaves(s.begin(), s.end());
    doc["output"] = Json{{"size", s.size()}, {"S", one_based(leaves)}};
    return {regime, s.size() == (std::size_t{1} << h) && is_perfect_leafset(tree, s)};
  } catch (const InsufficientTree& e) {
    doc["output"] = Json{{"error", e.what()}};
    return {regime, false};
  }
}

LemmaRun lemma_levels(const Config& config, Json& doc) {
  const std::size_t m = config.m.value_or(3);
  if (m > 20) throw Exit{kInput, "--m is limited to 20 here"};
  const IndexList z = parse_depths(config.depths.empty() ? "0,2" : config.depths);
  doc["parameters"] = Json{{"m", m}, {"Z", z}};
  const LeafSet q = levels_leafset(m, z);
  IndexList leaves(q.begin(), q.end());
  doc["output"] = Json{{"size", q.size()}, {"Q", one_based(leaves)}};
  const InducedTree tree = induced_subtree(m, q);
  bool ok = q.size() == (std::size_t{1} << z.size()) &&
            tree.perfect_height() == z.size();
  for (const Vertex& v : tree.vertices()) {
    if (v.depth < m) ok = ok && std::binary_search(z.begin(), z.end(), v.depth);
  }
  return {true, ok};
}

LemmaRun lemma_mono(const Config& config, Rng& rng, Json& doc) {
  const std::size_t d = positive(config.d.value_or(48), "--d");
  const std::size_t t = positive(config.t.value_or(16), "--t");
  const std::size_t n = positive(config.n.value_or(3), "--n");
  const std::size_t s = positive(config.s.value_or(2), "--s");
  ColoredMatrix cm(d, t);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < t; ++c) {
      cm.set(r, c, rng.bit() ? Color::kRed : Color::kBlue);
    }
  }
  const bool regime = s < 60 && t >= 4 * s * s && d >= 4 * n * (std::size_t{1} << s);
  doc["parameters"] = Json{{"d", d}, {"t", t}, {"n", n}, {"s", s}};
  Json rows = Json::array();
  for (std::size_t r = 0; r < d; ++r) {
    std::string line;
    for (std::size_t c = 0; c < t; ++c) line += cm.at(r, c) == Color::kRed ? 'R' : 'B';
    rows.push_back(line);
  }
  doc["instance"] = rows;
  const auto found = monochromatic_submatrix(cm, n, s);
  if (!found) {
    doc["output"] = "absent";
    return {regime, false};
  }
  bool ok = found->rows.size() == n && found->cols.size() == s;
  for (std::size_t r : found->rows) {
    for (std::size_t c : found->cols) ok = ok && cm.at(r, c) == found->color;
  }
  doc["output"] = Json{{"color", std::string(to_string(found->color))},
                       {"rows", one_based(found->rows)},
                       {"cols", one_based(found->cols)}};
  return {regime, ok};
}

int cmd_lemma(const Config& config, std::ostream& out) {
  const std::string lemma = canonical_lemma(config.lemma);
  Rng rng(config.seed);
  Json doc;
  doc["command"] = "lemma";
  doc["lemma"] = lemma;
  if (lemma != "levels") doc["generator"] = generator_json(config.seed);
  LemmaRun run;
  if (lemma == "split") {
    run = lemma_split(config, rng, doc);
  } else if (lemma == "tree-like") {
    run = lemma_tree_like(config, rng, doc);
  } else if (lemma == "perfect") {
    run = lemma_perfect(config, rng, doc);
  } else if (lemma == "levels") {
    run = lemma_levels(config, doc);
  } else {
    run = lemma_mono(config, rng, doc);
  }
  doc["guaranteed_regime"] = run.regime;
  doc["check"] = run.ok ? "OK" : "FAILED";
  emit(out, config, doc);
  if (run.ok) return kOk;
  return run.regime ? kGuaranteeBreach : kShortfall;
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* cmd, Config& config) {
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", config.seed, "Generator seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config config;
  CLI::App app{"Monotone submatrix extraction and lower-bound witnesses",
               "monosub"};
  app.require_subcommand(1);

  CLI::App* find = app.add_subcommand("find", "Extract a (row-)monotone submatrix");
  find->add_option("matrix", config.input, "Matrix file")->required();
  find->add_option("--n", config.n, "Target size");
  find->add_option("--kind", config.kind, "row or full")
      ->check(CLI::IsMember({"row", "full"}));
  find->add_option("--mode", config.mode, "best-effort or guaranteed")
      ->check(CLI::IsMember({"best-effort", "guaranteed"}));
  find->add_option("--ell", config.ell, "Per-column monotone length (full)");
  find->add_option("--out", config.out, "Write the witness JSON here");
  add_common(find, config);

  CLI::App* witness = app.add_subcommand("witness", "Sample a lower-bound witness");
  witness->add_option("--d", config.d, "Rows");
  witness->add_option("--t", config.t, "Sign-matrix columns (N = 2^t)");
  witness->add_option("--n", config.n, "Excluded submatrix size");
  witness->add_option("--s", config.s, "Excluded monochromatic width");
  witness->add_option("--max-attempts", config.max_attempts, "Sampling attempts");
  witness->add_option("--budget", config.budget, "Row sets verified");
  witness->add_option("--out-dir", config.out_dir, "Output directory");
  witness->add_flag("--materialize", config.materialize, "Also write the dense matrix");
  add_common(witness, config);

  CLI::App* verify = app.add_subcommand("verify", "Verify a witness or matrix");
  verify->add_option("file", config.input, "Witness, sign-matrix or matrix file")
      ->required();
  verify->add_option("--n", config.n, "Excluded submatrix size");
  verify->add_option("--kind", config.kind, "row or full (oracle)")
      ->check(CLI::IsMember({"row", "full"}));
  verify->add_option("--budget", config.budget, "Row sets or subsets examined");
  verify->add_flag("--structural", config.structural, "Structural check");
  verify->add_flag("--oracle", config.oracle, "Brute-force check");
  add_common(verify, config);

  CLI::App* lemma = app.add_subcommand("lemma", "Demonstrate one construction");
  lemma->add_option("id", config.lemma,
                    "split, tree-like, perfect, levels or mono")
      ->required();
  lemma->add_option("--d", config.d, "Dimension / rows");
  lemma->add_option("--N", config.big_n, "Sequence length");
  lemma->add_option("--m", config.m, "Tree height");
  lemma->add_option("--t", config.t, "Target height (perfect) or columns (mono)");
  lemma->add_option("--n", config.n, "Rows wanted (mono)");
  lemma->add_option("--s", config.s, "Columns wanted (mono)");
  lemma->add_option("--Z", config.depths, "Comma-separated depths (levels)");
  add_common(lemma, config);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force search");
  oracle->add_option("matrix", config.input, "Matrix file")->required();
  oracle->add_option("--n", config.n, "Target size");
  oracle->add_option("--kind", config.kind, "row or full")
      ->check(CLI::IsMember({"row", "full"}));
  oracle->add_option("--budget", config.budget, "Subsets examined");
  add_common(oracle, config);

  std::vector<const char*> argv{"monosub"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (find->parsed()) return cmd_find(config, out);
    if (witness->parsed()) return cmd_witness(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (lemma->parsed()) return cmd_lemma(config, out);
    return cmd_oracle(config, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ExhaustedAttempts& e) {
    err << "error: " << e.what() << '\n';
    return kSampling;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kGuaranteeBreach;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace monosub::cli
