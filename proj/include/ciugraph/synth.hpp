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

#ifndef CIUGRAPH_SYNTH_HPP_
#define CIUGRAPH_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ciugraph/pipeline.hpp"
#include "ciugraph/stats.hpp"

namespace ciugraph {

// Per-group generator parameters. repeat_rate is the probability that a
// sequence step revisits an already-mentioned CIU instead of introducing a
// new one; longer sequences plus a higher repeat rate produce more nodes,
// cycles and path length.
struct GroupParams {
  double len_mean = 18.0;
  double len_sd = 4.0;
  double repeat_rate = 0.25;
  double age_mean = 65.0;
  double age_sd = 7.0;
  double edu_mean = 14.0;
  double edu_sd = 2.5;
};

struct SynthSpec {
  int n_per_group = 30;
  std::uint64_t seed = 1;
  GroupParams unimpaired;
  GroupParams impaired;
  // One sentence per CIU keeps the round trip exact; multi-CIU sentences
  // stress the per-sentence dedup instead.
  int cius_per_sentence = 1;
  // Speakers mention salient picture elements first: new CIUs are drawn
  // with geometrically decaying weight down a fixed salience order.
  // 1.0 means uniform.
  double salience_decay = 0.85;
};

SynthSpec synth_spec_from_json(std::string_view json_text);

struct SynthRecord {
  std::string id;
  Group group = Group::kUnimpaired;
  double age = 0.0;
  double education = 0.0;
  int gender = 0;
  std::vector<CiuId> intended_sequence;
  std::string text;  // plain-text transcript
};

struct SynthCohort {
  std::vector<SynthRecord> records;

  // manifest: id,path,group,age,education_years,gender (paths under dir).
  std::string manifest_csv(const std::string& dir) const;
  // meta: id,group,age,education_years,gender.
  std::string meta_csv() const;
};

// Samples per-group CIU sequences and renders them to surface text by
// inverting the lexicon. Only words that map to exactly one CIU and survive
// the full extraction round trip are used, so re-extraction recovers the
// intended sequence exactly (with cius_per_sentence = 1). Deterministic for
// a given (spec, seed) on every platform. Throws SpecError.
SynthCohort generate_cohort(const SynthSpec& spec,
                            const PipelineConfig& config = {});

// Runs every record through the real pipeline and joins covariates,
// yielding records ready for ancova_table.
std::vector<CohortRecord> cohort_records(const SynthCohort& cohort,
                                         const PipelineConfig& config = {});

}  // namespace ciugraph

#endif  // CIUGRAPH_SYNTH_HPP_
