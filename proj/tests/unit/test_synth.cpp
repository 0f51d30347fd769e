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

#include <doctest.h>

#include "ciugraph/errors.hpp"
#include "ciugraph/synth.hpp"

using namespace ciugraph;

TEST_CASE("seeded generation is reproducible") {
  SynthSpec spec;
  spec.n_per_group = 5;
  spec.seed = 77;
  SynthCohort a = generate_cohort(spec);
  SynthCohort b = generate_cohort(spec);
  REQUIRE(a.records.size() == 10);
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].text == b.records[i].text);
    CHECK(a.records[i].age == b.records[i].age);
    CHECK(a.records[i].intended_sequence == b.records[i].intended_sequence);
  }
  spec.seed = 78;
  SynthCohort c = generate_cohort(spec);
  bool any_diff = false;
  for (size_t i = 0; i < a.records.size(); ++i)
    any_diff |= a.records[i].text != c.records[i].text;
  CHECK(any_diff);
}

TEST_CASE("n_per_group zero gives empty outputs") {
  SynthSpec spec;
  spec.n_per_group = 0;
  SynthCohort cohort = generate_cohort(spec);
  CHECK(cohort.records.empty());
  CHECK(cohort.meta_csv() == "id,group,age,education_years,gender\n");
}

TEST_CASE("spec validation") {
  SynthSpec bad;
  bad.n_per_group = -1;
  CHECK_THROWS_AS(generate_cohort(bad), SpecError);
  SynthSpec worse;
  worse.impaired.repeat_rate = 1.5;
  CHECK_THROWS_AS(generate_cohort(worse), SpecError);
  CHECK_THROWS_AS(synth_spec_from_json("nope"), SpecError);
  CHECK_THROWS_AS(synth_spec_from_json(R"({"n_per_group": -3})"), SpecError);
}

TEST_CASE("spec JSON loads group parameters") {
  SynthSpec spec = synth_spec_from_json(R"({
    "n_per_group": 4, "seed": 9,
    "groups": {"impaired": {"repeat_rate": 0.7, "len_mean": 30}}
  })");
  CHECK(spec.n_per_group == 4);
  CHECK(spec.seed == 9);
  CHECK(spec.impaired.repeat_rate == 0.7);
  CHECK(spec.impaired.len_mean == 30.0);
  CHECK(spec.unimpaired.repeat_rate == 0.25);  // default untouched
}

TEST_CASE("re-extraction recovers the intended sequence exactly") {
  SynthSpec spec;
  spec.n_per_group = 15;
  spec.seed = 4242;
  spec.unimpaired.repeat_rate = 0.4;
  spec.impaired.repeat_rate = 0.6;
  SynthCohort cohort = generate_cohort(spec);
  PipelineConfig config;
  for (const SynthRecord& rec : cohort.records) {
    Transcript t = parse_plain(rec.text);
    t.id = rec.id;
    CiuSequence seq = run_extraction(t, config);
    INFO("record ", rec.id, ": ", rec.text);
    CHECK(seq.ids() == rec.intended_sequence);
  }
}

TEST_CASE("injected repeat-rate effect moves cycles and path length") {
  SynthSpec spec;
  spec.n_per_group = 40;
  spec.seed = 99;
  spec.unimpaired.len_mean = 18;
  spec.unimpaired.repeat_rate = 0.25;
  spec.impaired.len_mean = 30;
  spec.impaired.repeat_rate = 0.55;
  auto records = cohort_records(generate_cohort(spec));

  double cycles[2] = {0, 0}, path[2] = {0, 0};
  int n[2] = {0, 0};
  for (const CohortRecord& r : records) {
    int g = r.group == Group::kImpaired ? 1 : 0;
    cycles[g] += *r.features.cycles;
    path[g] += *r.features.total_path;
    n[g]++;
  }
  CHECK(n[0] == 40);
  CHECK(n[1] == 40);
  CHECK(cycles[1] / n[1] > cycles[0] / n[0] + 3.0);
  CHECK(path[1] / n[1] > path[0] / n[0]);
}

TEST_CASE("multi-CIU sentences exercise the dedup path") {
  SynthSpec spec;
  spec.n_per_group = 3;
  spec.seed = 7;
  spec.cius_per_sentence = 4;
  spec.unimpaired.repeat_rate = 0.8;  // stress repeats inside one sentence
  spec.impaired.repeat_rate = 0.8;
  SynthCohort cohort = generate_cohort(spec);
  PipelineConfig config;
  for (const SynthRecord& rec : cohort.records) {
    Transcript t = parse_plain(rec.text);
    CiuSequence seq = run_extraction(t, config);
    // Dedup may drop in-sentence repeats, never add.
    CHECK(seq.ids().size() <= rec.intended_sequence.size());
  }
}

TEST_CASE("manifest and meta CSV shapes") {
  SynthSpec spec;
  spec.n_per_group = 2;
  spec.seed = 5;
  SynthCohort cohort = generate_cohort(spec);
  std::string manifest = cohort.manifest_csv("transcripts");
  CHECK(manifest.find("id,path,group,age,education_years,gender\n") == 0);
  CHECK(manifest.find("transcripts/u0000.txt") != std::string::npos);
  CHECK(manifest.find(",unimpaired,") != std::string::npos);
  CHECK(manifest.find(",impaired,") != std::string::npos);
  std::string meta = cohort.meta_csv();
  CHECK(meta.find("id,group,age,education_years,gender\n") == 0);
  CHECK(meta.find("u0001,") != std::string::npos);
}

TEST_CASE("null cohorts keep group p-values unremarkable across seeds") {
  SynthSpec spec;
  spec.n_per_group = 30;
  PipelineConfig config;
  double p_sum = 0;
  int small_p = 0;
  const int seeds = 60;
  for (int seed = 1; seed <= seeds; ++seed) {
    spec.seed = seed;
    auto records = cohort_records(generate_cohort(spec, config), config);
    AncovaResult r = ancova_feature(records, "total_path");
    p_sum += r.p_value;
    if (r.p_value < 0.05) ++small_p;
  }
  // Uniform-ish: mean near 1/2, not star-heavy.
  double mean = p_sum / seeds;
  CHECK(mean > 0.3);
  CHECK(mean < 0.7);
  CHECK(small_p <= 9);  // ~3 expected at the 5% level
}
