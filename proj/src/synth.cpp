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

#include "ciugraph/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "ciugraph/chat.hpp"
#include "ciugraph/csv.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

// mt19937_64 output is pinned by the standard; the distributions are not,
// so sampling is done by hand to keep fixtures identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return (engine_() >> 11) * 0x1.0p-53;
  }

  double normal(double mean, double sd) {
    // Box-Muller, one value per call for reproducibility.
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + sd * z;
  }

  int uniform_int(int n) {  // 0..n-1
    return static_cast<int>(uniform01() * n) % n;
  }

 private:
  std::mt19937_64 engine_;
};

GroupParams group_params_from_json(const nlohmann::json& doc) {
  GroupParams p;
  p.len_mean = doc.value("len_mean", p.len_mean);
  p.len_sd = doc.value("len_sd", p.len_sd);
  p.repeat_rate = doc.value("repeat_rate", p.repeat_rate);
  p.age_mean = doc.value("age_mean", p.age_mean);
  p.age_sd = doc.value("age_sd", p.age_sd);
  p.edu_mean = doc.value("edu_mean", p.edu_mean);
  p.edu_sd = doc.value("edu_sd", p.edu_sd);
  return p;
}

void validate(const SynthSpec& spec) {
  if (spec.n_per_group < 0) throw SpecError("synth: n_per_group must be >= 0");
  if (spec.cius_per_sentence < 1)
    throw SpecError("synth: cius_per_sentence must be >= 1");
  if (spec.salience_decay <= 0.0 || spec.salience_decay > 1.0)
    throw SpecError("synth: salience_decay must be in (0, 1]");
  for (const GroupParams* p : {&spec.unimpaired, &spec.impaired}) {
    if (p->repeat_rate < 0.0 || p->repeat_rate > 1.0)
      throw SpecError("synth: repeat_rate must be in [0, 1]");
    if (p->len_mean < 1.0) throw SpecError("synth: len_mean must be >= 1");
    if (p->len_sd < 0.0 || p->age_sd < 0.0 || p->edu_sd < 0.0)
      throw SpecError("synth: standard deviations must be >= 0");
  }
}

// Sentence frames built from words outside the dictionary, so only the
// inserted CIU word can match.
const char* frame_for(int i) {
  static const char* kFrames[] = {
      "there is the %s .",
      "i see the %s .",
      "and then the %s is there .",
  };
  return kFrames[i % 3];
}

// Fixed mention-priority order: central actors and actions first, then
// peripheral scene elements.
const CiuId kSalienceOrder[] = {1,  6,  3,  9,  7,  2,  8, 12,
                                20, 17, 18, 15, 5,  13, 14, 19,
                                21, 10, 11, 16, 22, 23, 4};

}  // namespace

SynthSpec synth_spec_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("synth spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("synth spec: expected an object");
  SynthSpec spec;
  try {
    spec.n_per_group = doc.value("n_per_group", spec.n_per_group);
    spec.seed = doc.value("seed", spec.seed);
    spec.cius_per_sentence =
        doc.value("cius_per_sentence", spec.cius_per_sentence);
    spec.salience_decay = doc.value("salience_decay", spec.salience_decay);
    if (doc.contains("groups")) {
      const auto& g = doc.at("groups");
      if (g.contains("unimpaired"))
        spec.unimpaired = group_params_from_json(g.at("unimpaired"));
      if (g.contains("impaired"))
        spec.impaired = group_params_from_json(g.at("impaired"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("synth spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

SynthCohort generate_cohort(const SynthSpec& spec,
                            const PipelineConfig& config) {
  validate(spec);
  SynthCohort cohort;

  // Invert the lexicon: for each CIU, words whose emission list is exactly
  // that one CIU and which the full pipeline maps back to it.
  std::vector<std::vector<std::string>> words_for(kMaxCiuId + 1);
  for (const auto& [word, ids] : config.lexicon->entries) {
    if (ids.size() != 1) continue;
    if (word.find('-') != std::string::npos) continue;
    Transcript probe = parse_plain(word + " .");
    CiuSequence check = run_extraction(probe, config);
    if (check.matches.size() == 1 && check.matches[0].ciu == ids[0])
      words_for[ids[0]].push_back(word);
  }
  std::vector<CiuId> usable;
  for (CiuId id : kSalienceOrder) {
    if (!words_for[id].empty()) usable.push_back(id);
  }
  for (CiuId id = kMinCiuId; id <= kMaxCiuId; ++id) {
    if (!words_for[id].empty() &&
        std::find(usable.begin(), usable.end(), id) == usable.end())
      usable.push_back(id);
  }
  if (usable.empty()) throw SpecError("synth: lexicon has no invertible words");

  Rng rng(spec.seed);

  auto make_record = [&](Group group, const GroupParams& params, int ordinal) {
    SynthRecord rec;
    char id[32];
    std::snprintf(id, sizeof(id), "%s%04d",
                  group == Group::kUnimpaired ? "u" : "i", ordinal);
    rec.id = id;
    rec.group = group;
    rec.age = std::round(rng.normal(params.age_mean, params.age_sd) * 10.0) / 10.0;
    rec.education =
        std::round(rng.normal(params.edu_mean, params.edu_sd) * 10.0) / 10.0;
    rec.gender = rng.uniform01() < 0.5 ? 0 : 1;

    int len = static_cast<int>(std::lround(rng.normal(params.len_mean,
                                                      params.len_sd)));
    len = std::max(1, len);

    // unmentioned stays in salience order; new CIUs are drawn with
    // geometrically decaying weight down that order.
    std::vector<CiuId> mentioned;
    std::vector<CiuId> unmentioned = usable;
    auto pick_salient = [&]() {
      double decay = spec.salience_decay;
      double total = 0.0;
      double w = 1.0;
      for (size_t i = 0; i < unmentioned.size(); ++i, w *= decay) total += w;
      double target = rng.uniform01() * total;
      w = 1.0;
      for (size_t i = 0; i < unmentioned.size(); ++i, w *= decay) {
        target -= w;
        if (target <= 0.0) return static_cast<int>(i);
      }
      return static_cast<int>(unmentioned.size()) - 1;
    };
    for (int k = 0; k < len; ++k) {
      CiuId next;
      bool repeat = !mentioned.empty() &&
                    (unmentioned.empty() || rng.uniform01() < params.repeat_rate);
      if (repeat) {
        next = mentioned[rng.uniform_int(static_cast<int>(mentioned.size()))];
      } else {
        int pick = pick_salient();
        next = unmentioned[pick];
        unmentioned.erase(unmentioned.begin() + pick);
        mentioned.push_back(next);
      }
      rec.intended_sequence.push_back(next);
    }

    // Render to text, cius_per_sentence CIU words per sentence.
    std::string text;
    int in_sentence = 0;
    std::string sentence_words;
    auto flush_sentence = [&](int frame_index) {
      if (sentence_words.empty()) return;
      char buf[512];
      std::snprintf(buf, sizeof(buf), frame_for(frame_index), sentence_words.c_str());
      if (!text.empty()) text += " ";
      text += buf;
      sentence_words.clear();
      in_sentence = 0;
    };
    int frame = 0;
    for (size_t k = 0; k < rec.intended_sequence.size(); ++k) {
      CiuId id_k = rec.intended_sequence[k];
      const auto& candidates = words_for[id_k];
      const std::string& word =
          candidates[rng.uniform_int(static_cast<int>(candidates.size()))];
      if (!sentence_words.empty()) sentence_words += " and ";
      sentence_words += word;
      if (++in_sentence >= spec.cius_per_sentence) flush_sentence(frame++);
    }
    flush_sentence(frame);
    rec.text = text;
    return rec;
  };

  for (int i = 0; i < spec.n_per_group; ++i)
    cohort.records.push_back(make_record(Group::kUnimpaired, spec.unimpaired, i));
  for (int i = 0; i < spec.n_per_group; ++i)
    cohort.records.push_back(make_record(Group::kImpaired, spec.impaired, i));
  return cohort;
}

std::vector<CohortRecord> cohort_records(const SynthCohort& cohort,
                                         const PipelineConfig& config) {
  std::vector<CohortRecord> out;
  out.reserve(cohort.records.size());
  for (const SynthRecord& rec : cohort.records) {
    Transcript t = parse_plain(rec.text);
    t.id = rec.id;
    CohortRecord cr;
    cr.transcript_id = rec.id;
    cr.group = rec.group;
    cr.age = rec.age;
    cr.education = rec.education;
    cr.gender = rec.gender;
    cr.features = run_pipeline(t, config);
    out.push_back(std::move(cr));
  }
  return out;
}

std::string SynthCohort::manifest_csv(const std::string& dir) const {
  std::string out = "id,path,group,age,education_years,gender\n";
  char buf[64];
  for (const SynthRecord& r : records) {
    std::string path = dir.empty() ? r.id + ".txt" : dir + "/" + r.id + ".txt";
    std::snprintf(buf, sizeof(buf), "%.1f", r.age);
    std::string age = buf;
    std::snprintf(buf, sizeof(buf), "%.1f", r.education);
    std::string edu = buf;
    out += csv::escape(r.id) + "," + csv::escape(path) + "," +
           (r.group == Group::kUnimpaired ? "unimpaired" : "impaired") + "," +
           age + "," + edu + "," + std::to_string(r.gender) + "\n";
  }
  return out;
}

std::string SynthCohort::meta_csv() const {
  std::string out = "id,group,age,education_years,gender\n";
  char buf[64];
  for (const SynthRecord& r : records) {
    std::snprintf(buf, sizeof(buf), "%.1f", r.age);
    std::string age = buf;
    std::snprintf(buf, sizeof(buf), "%.1f", r.education);
    std::string edu = buf;
    out += csv::escape(r.id) + "," +
           (r.group == Group::kUnimpaired ? "unimpaired" : "impaired") + "," +
           age + "," + edu + "," + std::to_string(r.gender) + "\n";
  }
  return out;
}

}  // namespace ciugraph
