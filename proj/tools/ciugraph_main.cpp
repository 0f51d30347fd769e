// Copyright 2026 ciugraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ciugraph: picture-description transcripts -> CIU sequences ->
// spatio-semantic graphs -> features -> group statistics.
//
// Exit codes: 0 ok, 1 total batch failure, 2 input parse error,
// 3 configuration error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ciugraph/chat.hpp"
#include "ciugraph/csv.hpp"
#include "ciugraph/defaults.hpp"
#include "ciugraph/errors.hpp"
#include "ciugraph/features.hpp"
#include "ciugraph/graph.hpp"
#include "ciugraph/pipeline.hpp"
#include "ciugraph/stats.hpp"
#include "ciugraph/synth.hpp"

namespace fs = std::filesystem;
using namespace ciugraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAllRowsFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConfigError = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << content;
}

// Flags shared by the pipeline-running subcommands.
struct ConfigFlags {
  std::string lexicon_path;
  std::string coords_path;
  std::string lemma_rules_path;
  std::string participant_tier = "PAR";
  bool include_low_precision = false;

  void attach(CLI::App* cmd, bool with_coords = true) {
    cmd->add_option("--lexicon", lexicon_path, "Lexicon JSON file");
    if (with_coords)
      cmd->add_option("--coords", coords_path, "Coordinate table JSON file");
    cmd->add_option("--lemma-rules", lemma_rules_path, "Lemma rules JSON file");
    cmd->add_option("--participant-tier", participant_tier,
                    "CHAT speaker tier treated as the participant");
    cmd->add_flag("--include-low-precision", include_low_precision,
                  "Match words flagged low precision in the lexicon");
  }
};

// Owns the loaded tables. The PipelineConfig holds pointers into this
// object, so build it only once the LoadedConfig sits at its final address.
struct LoadedConfig {
  std::optional<Lexicon> lexicon;
  std::optional<CoordinateTable> coords;
  std::optional<LemmaRules> lemma_rules;
  ExtractOptions extract;
  ChatOptions chat;

  PipelineConfig pipeline() const {
    PipelineConfig p;
    if (lexicon) p.lexicon = &*lexicon;
    if (coords) p.coordinates = &*coords;
    if (lemma_rules) p.lemma_rules = &*lemma_rules;
    p.extract = extract;
    p.chat = chat;
    return p;
  }
};

std::string config_dir_file(const char* name) {
  const char* dir = std::getenv("CIUGRAPH_CONFIG_DIR");
  if (!dir || !*dir) return "";
  fs::path p = fs::path(dir) / name;
  return fs::exists(p) ? p.string() : "";
}

LoadedConfig load_config(const ConfigFlags& flags) {
  LoadedConfig cfg;
  std::string lexicon_path = !flags.lexicon_path.empty()
                                 ? flags.lexicon_path
                                 : config_dir_file("lexicon.json");
  std::string coords_path = !flags.coords_path.empty()
                                ? flags.coords_path
                                : config_dir_file("coords.json");
  std::string lemma_path = !flags.lemma_rules_path.empty()
                               ? flags.lemma_rules_path
                               : config_dir_file("lemma_rules.json");
  if (!lexicon_path.empty()) cfg.lexicon = load_lexicon(read_file(lexicon_path));
  if (!coords_path.empty())
    cfg.coords = load_coordinates(read_file(coords_path));
  if (!lemma_path.empty())
    cfg.lemma_rules = load_lemma_rules(read_file(lemma_path));
  cfg.extract.include_low_precision = flags.include_low_precision;
  cfg.chat.participant_tier = flags.participant_tier;
  return cfg;
}

bool looks_like_json(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Transcript parse_transcript(const std::string& content, const fs::path& path,
                            const std::string& format,
                            const PipelineConfig& config) {
  bool chat = format == "chat" || (format.empty() && path.extension() == ".cha");
  Transcript t =
      chat ? parse_chat(content, config.chat) : parse_plain(content);
  t.id = path.stem().string();
  return t;
}

int cmd_extract(const std::string& input, const std::string& format,
                const std::string& out, const ConfigFlags& flags) {
  LoadedConfig cfg;
  try {
    cfg = load_config(flags);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    PipelineConfig pipe = cfg.pipeline();
    std::string content = read_file(input);
    Transcript t = parse_transcript(content, input, format, pipe);
    CiuSequence seq = run_extraction(t, pipe);
    write_output(out, sequence_to_json(seq, *pipe.lexicon));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_features(const std::string& input, const std::string& format,
                 const std::string& out, bool as_csv,
                 const ConfigFlags& flags) {
  LoadedConfig cfg;
  try {
    cfg = load_config(flags);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    PipelineConfig pipe = cfg.pipeline();
    std::string content = read_file(input);
    FeatureVector fv;
    if (looks_like_json(content)) {
      CiuSequence seq = sequence_from_json(content);
      fv = features_of_sequence(seq, pipe);
    } else {
      Transcript t = parse_transcript(content, input, format, pipe);
      fv = run_pipeline(t, pipe);
    }
    if (fv.nodes == 0)
      std::cerr << "warning: no content units found in '" << input << "'\n";
    if (as_csv)
      write_output(out, features_csv_header() + "\n" + features_csv_row(fv) +
                            "\n");
    else
      write_output(out, feature_vector_to_json(fv));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

struct ManifestRow {
  std::string id;
  std::string path;
};

int cmd_batch(const std::string& manifest_path, const std::string& format,
              const std::string& out, int jobs, const ConfigFlags& flags) {
  LoadedConfig cfg;
  try {
    cfg = load_config(flags);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::vector<ManifestRow> rows;
  try {
    auto table = csv::parse(read_file(manifest_path));
    if (table.empty())
      throw Error("manifest '" + manifest_path + "' is empty (no header)");
    const auto& header = table[0];
    auto col = [&](const std::string& name) {
      for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
      throw Error("manifest is missing column '" + name + "'");
    };
    int id_col = col("id");
    int path_col = col("path");
    std::set<std::string> seen_ids;
    for (size_t r = 1; r < table.size(); ++r) {
      const auto& row = table[r];
      if (static_cast<int>(row.size()) <= std::max(id_col, path_col))
        throw Error("manifest row " + std::to_string(r) + " is short");
      if (!seen_ids.insert(row[id_col]).second)
        throw Error("manifest has duplicate id '" + row[id_col] + "'");
      rows.push_back({row[id_col], row[path_col]});
    }
  } catch (const Error& e) {
    std::cerr << "manifest error: " << e.what() << "\n";
    return kExitInputError;
  }

  const PipelineConfig pipe = cfg.pipeline();
  const fs::path base = fs::path(manifest_path).parent_path();
  struct RowResult {
    bool ok = false;
    FeatureVector fv;
    std::string error;
  };
  std::vector<RowResult> results(rows.size());
  std::atomic<size_t> next{0};
  int workers = std::max(1, jobs);

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      RowResult& res = results[i];
      try {
        fs::path p = rows[i].path;
        if (p.is_relative()) p = base / p;
        std::string content = read_file(p);
        Transcript t = parse_transcript(content, p, format, pipe);
        t.id = rows[i].id;  // manifest id wins over the filename
        res.fv = run_pipeline(t, pipe);
        res.ok = true;
      } catch (const Error& e) {
        res.error = e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Output keeps manifest order regardless of completion order.
  std::string csv_out = features_csv_header() + "\n";
  size_t failed = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (results[i].ok) {
      csv_out += features_csv_row(results[i].fv) + "\n";
    } else {
      ++failed;
      std::cerr << "row '" << rows[i].id << "' failed: " << results[i].error
                << "\n";
    }
  }
  try {
    write_output(out, csv_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!rows.empty() && failed == rows.size()) {
    std::cerr << "error: every manifest row failed\n";
    return kExitAllRowsFailed;
  }
  return kExitOk;
}

int cmd_stats(const std::string& features_path, const std::string& meta_path,
              const std::string& out) {
  std::vector<FeatureVector> fvs;
  try {
    auto table = csv::parse(read_file(features_path));
    if (table.empty()) throw Error("features CSV is empty");
    const auto& header = table[0];
    std::map<std::string, int> col;
    for (size_t i = 0; i < header.size(); ++i)
      col[header[i]] = static_cast<int>(i);
    for (const std::string& name : feature_field_names())
      if (!col.count(name))
        throw Error("features CSV is missing column '" + name + "'");
    if (!col.count("transcript_id"))
      throw Error("features CSV is missing column 'transcript_id'");
    for (size_t r = 1; r < table.size(); ++r) {
      const auto& row = table[r];
      auto cell = [&](const std::string& name) -> std::string {
        int c = col.at(name);
        return c < static_cast<int>(row.size()) ? row[c] : "";
      };
      auto opt_real = [&](const std::string& name) -> std::optional<double> {
        std::string s = cell(name);
        if (s.empty()) return std::nullopt;
        return std::stod(s);
      };
      auto opt_int = [&](const std::string& name) -> std::optional<int> {
        std::string s = cell(name);
        if (s.empty()) return std::nullopt;
        return std::stoi(s);
      };
      FeatureVector fv;
      fv.avg_x = opt_real("avg_x");
      fv.std_x = opt_real("std_x");
      fv.avg_y = opt_real("avg_y");
      fv.std_y = opt_real("std_y");
      fv.total_path = opt_real("total_path");
      fv.unique_nodes = opt_int("unique_nodes");
      fv.path_per_unique = opt_real("path_per_unique");
      fv.nodes = opt_int("nodes").value_or(0);
      fv.self_cycles = opt_int("self_cycles");
      fv.cycles = opt_int("cycles");
      fv.self_cycles_quad = opt_int("self_cycles_quad");
      fv.cross_ratio_quad = opt_real("cross_ratio_quad");
      fv.transcript_id = cell("transcript_id");
      fvs.push_back(std::move(fv));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: features CSV: " << e.what() << "\n";
    return kExitInputError;
  }

  struct Meta {
    Group group;
    double age;
    double education;
    int gender;
  };
  std::map<std::string, Meta> meta;
  try {
    auto table = csv::parse(read_file(meta_path));
    if (table.empty()) throw SchemaError("meta CSV is empty");
    const auto& header = table[0];
    std::map<std::string, int> col;
    for (size_t i = 0; i < header.size(); ++i)
      col[header[i]] = static_cast<int>(i);
    for (const char* name :
         {"id", "group", "age", "education_years", "gender"}) {
      if (!col.count(name))
        throw SchemaError(std::string("meta CSV is missing column '") + name +
                          "'");
    }
    for (size_t r = 1; r < table.size(); ++r) {
      const auto& row = table[r];
      auto cell = [&](const char* name) -> std::string {
        int c = col.at(name);
        return c < static_cast<int>(row.size()) ? row[c] : "";
      };
      std::string id = cell("id");
      std::string group = cell("group");
      Meta m{};
      if (group == "unimpaired") {
        m.group = Group::kUnimpaired;
      } else if (group == "impaired") {
        m.group = Group::kImpaired;
      } else {
        std::cerr << "warning: row '" << id << "' has unknown group '" << group
                  << "', skipped\n";
        continue;
      }
      try {
        m.age = std::stod(cell("age"));
        m.education = std::stod(cell("education_years"));
        m.gender = std::stoi(cell("gender"));
      } catch (const std::exception&) {
        std::cerr << "warning: row '" << id
                  << "' has unparseable covariates, skipped\n";
        continue;
      }
      if (m.gender != 0 && m.gender != 1) {
        std::cerr << "warning: row '" << id << "' gender must be 0 or 1, "
                  << "skipped\n";
        continue;
      }
      meta[id] = m;
    }
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::vector<CohortRecord> records;
  for (const FeatureVector& fv : fvs) {
    auto it = meta.find(fv.transcript_id);
    if (it == meta.end()) {
      std::cerr << "warning: no metadata for '" << fv.transcript_id
                << "', skipped\n";
      continue;
    }
    CohortRecord rec;
    rec.transcript_id = fv.transcript_id;
    rec.group = it->second.group;
    rec.age = it->second.age;
    rec.education = it->second.education;
    rec.gender = it->second.gender;
    rec.features = fv;
    records.push_back(std::move(rec));
  }

  auto rows = ancova_table(records);
  for (const AncovaRow& row : rows) {
    if (!row.error.empty())
      std::cerr << "warning: " << row.feature_name << ": " << row.error << "\n";
  }
  try {
    write_output(out, ancova_csv(rows));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_render(const std::string& input, const std::string& svg_path,
               const std::string& dot_path, bool grid,
               const std::string& background, const ConfigFlags& flags) {
  LoadedConfig cfg;
  try {
    cfg = load_config(flags);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    PipelineConfig pipe = cfg.pipeline();
    std::string content = read_file(input);
    nlohmann::json probe;
    try {
      probe = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("render input: invalid JSON: ") + e.what());
    }
    SpatioSemanticGraph g;
    if (probe.is_object() && probe.contains("matches")) {
      CiuSequence seq = sequence_from_json(content);
      g = build_graph(seq, *pipe.coordinates);
    } else {
      g = graph_from_json(content);
    }

    RenderOptions options;
    options.width = pipe.coordinates->width;
    options.height = pipe.coordinates->height;
    options.grid_center = pipe.coordinates->center;
    options.quadrant_grid = grid;
    options.background_image = background;
    std::map<CiuId, std::string> dot_labels;
    for (const auto& info : pipe.lexicon->cius) {
      options.short_labels[info.id] = pipe.lexicon->short_label_of(info.id);
      options.full_labels[info.id] = info.label;
      dot_labels[info.id] = pipe.lexicon->short_label_of(info.id);
    }

    if (svg_path.empty() && dot_path.empty()) {
      std::cout << render_svg(g, options);
      return kExitOk;
    }
    if (!svg_path.empty()) write_output(svg_path, render_svg(g, options));
    if (!dot_path.empty()) write_output(dot_path, to_dot(g, dot_labels));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_synth(const std::string& spec_path, const std::string& out_dir,
              const ConfigFlags& flags) {
  LoadedConfig cfg;
  SynthSpec spec;
  try {
    cfg = load_config(flags);
    spec = spec_path.empty() ? SynthSpec{}
                             : synth_spec_from_json(read_file(spec_path));
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    PipelineConfig pipe = cfg.pipeline();
    SynthCohort cohort = generate_cohort(spec, pipe);
    fs::path dir(out_dir);
    fs::create_directories(dir / "transcripts");
    for (const SynthRecord& rec : cohort.records) {
      std::ofstream out(dir / "transcripts" / (rec.id + ".txt"),
                        std::ios::binary);
      out << rec.text << "\n";
    }
    {
      std::ofstream out(dir / "manifest.csv", std::ios::binary);
      out << cohort.manifest_csv("transcripts");
    }
    {
      std::ofstream out(dir / "meta.csv", std::ios::binary);
      out << cohort.meta_csv();
    }
    std::cout << "wrote " << cohort.records.size() << " transcripts to "
              << (dir / "transcripts").string() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CIU sequences, spatio-semantic graphs and group statistics "
               "from picture-description transcripts"};
  app.require_subcommand(1);

  // extract
  auto* extract = app.add_subcommand(
      "extract", "Transcript -> CIU sequence JSON");
  std::string ex_input, ex_format, ex_out;
  ConfigFlags ex_flags;
  extract->add_option("--input", ex_input, "Transcript file (.cha or .txt)")
      ->required();
  extract->add_option("--format", ex_format, "Input format")
      ->check(CLI::IsMember({"chat", "text"}));
  extract->add_option("--out", ex_out, "Output file (default stdout)");
  ex_flags.attach(extract, /*with_coords=*/false);

  // features
  auto* features = app.add_subcommand(
      "features", "Transcript or sequence JSON -> feature vector");
  std::string ft_input, ft_format, ft_out;
  bool ft_csv = false;
  ConfigFlags ft_flags;
  features->add_option("--input", ft_input,
                       "Transcript file or sequence JSON")->required();
  features->add_option("--format", ft_format, "Input format for transcripts")
      ->check(CLI::IsMember({"chat", "text"}));
  features->add_option("--out", ft_out, "Output file (default stdout)");
  features->add_flag("--csv", ft_csv, "Emit CSV instead of JSON");
  ft_flags.attach(features);

  // batch
  auto* batch = app.add_subcommand(
      "batch", "Manifest CSV -> features CSV (parallel)");
  std::string bt_manifest, bt_format, bt_out;
  int bt_jobs = 1;
  ConfigFlags bt_flags;
  batch->add_option("--manifest", bt_manifest,
                    "CSV with id,path,group,age,education_years,gender")
      ->required();
  batch->add_option("--format", bt_format, "Force input format")
      ->check(CLI::IsMember({"chat", "text"}));
  batch->add_option("--out", bt_out, "Output CSV (default stdout)");
  batch->add_option("--jobs", bt_jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bt_flags.attach(batch);

  // stats
  auto* stats = app.add_subcommand(
      "stats", "Features CSV + metadata CSV -> group comparison CSV");
  std::string st_features, st_meta, st_out;
  stats->add_option("--features", st_features, "Features CSV from batch")
      ->required();
  stats->add_option("--meta", st_meta,
                    "CSV with id,group,age,education_years,gender")
      ->required();
  stats->add_option("--out", st_out, "Output CSV (default stdout)");

  // render
  auto* render = app.add_subcommand(
      "render", "Sequence or graph JSON -> SVG / DOT");
  std::string rd_input, rd_svg, rd_dot, rd_background;
  bool rd_grid = false;
  ConfigFlags rd_flags;
  render->add_option("--input", rd_input, "Sequence JSON or graph JSON")
      ->required();
  render->add_option("--svg", rd_svg, "Write SVG to this file");
  render->add_option("--dot", rd_dot, "Write DOT to this file");
  render->add_flag("--grid", rd_grid, "Draw quadrant gridlines");
  render->add_option("--background", rd_background,
                     "Reference a background image by path");
  rd_flags.attach(render);

  // synth
  auto* synth = app.add_subcommand(
      "synth", "Generate a synthetic cohort (manifest + transcripts)");
  std::string sy_spec, sy_out_dir;
  ConfigFlags sy_flags;
  synth->add_option("--spec", sy_spec, "SynthSpec JSON (defaults when absent)");
  synth->add_option("--out-dir", sy_out_dir, "Output directory")->required();
  sy_flags.attach(synth);

  CLI11_PARSE(app, argc, argv);

  if (extract->parsed())
    return cmd_extract(ex_input, ex_format, ex_out, ex_flags);
  if (features->parsed())
    return cmd_features(ft_input, ft_format, ft_out, ft_csv, ft_flags);
  if (batch->parsed())
    return cmd_batch(bt_manifest, bt_format, bt_out, bt_jobs, bt_flags);
  if (stats->parsed()) return cmd_stats(st_features, st_meta, st_out);
  if (render->parsed())
    return cmd_render(rd_input, rd_svg, rd_dot, rd_grid, rd_background,
                      rd_flags);
  if (synth->parsed()) return cmd_synth(sy_spec, sy_out_dir, sy_flags);
  return kExitOk;
}
