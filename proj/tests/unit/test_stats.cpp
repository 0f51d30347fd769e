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

#include <algorithm>
#include <cmath>
#include <random>

#include "ciugraph/errors.hpp"
#include "ciugraph/stats.hpp"
#include "normal_eq_oracle.hpp"

using namespace ciugraph;

namespace {

// Cohort where only the listed feature values vary; covariates are fixed
// unless a setter tweaks them.
std::vector<CohortRecord> two_group_cohort(const std::vector<double>& g0,
                                           const std::vector<double>& g1) {
  std::vector<CohortRecord> records;
  int k = 0;
  auto add = [&](Group group, double value) {
    CohortRecord r;
    char id[16];
    std::snprintf(id, sizeof(id), "r%03d", k++);
    r.transcript_id = id;
    r.group = group;
    r.age = 70.0;       // constant: dropped by the model
    r.education = 12.0; // constant: dropped
    r.gender = 0;       // constant: dropped
    r.features.nodes = 5;
    r.features.unique_nodes = 5;  // constant: dropped
    r.features.total_path = value;
    records.push_back(r);
  };
  for (double v : g0) add(Group::kUnimpaired, v);
  for (double v : g1) add(Group::kImpaired, v);
  return records;
}

}  // namespace

TEST_CASE("ols_fit exact interpolation") {
  Matrix x(2, 2);
  x(0, 0) = 1; x(0, 1) = 0;
  x(1, 0) = 1; x(1, 1) = 1;
  LinearModelFit fit = ols_fit(x, {1.0, 2.0});
  CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.coefficients[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.residual_sum_squares == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("ols_fit constant-only design fits the mean") {
  Matrix x(3, 1);
  x(0, 0) = x(1, 0) = x(2, 0) = 1.0;
  LinearModelFit fit = ols_fit(x, {1.0, 2.0, 3.0});
  CHECK(fit.coefficients[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.residual_sum_squares == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("ols_fit matches the normal-equation oracle on random systems") {
  std::mt19937 rng(8);
  auto u = [&]() { return rng() / 4294967296.0 * 4.0 - 2.0; };
  for (int trial = 0; trial < 20; ++trial) {
    const size_t n = 50, p = 4;
    Matrix x(n, p);
    oracle::Mat ox(n, std::vector<double>(p));
    std::vector<double> y(n);
    for (size_t i = 0; i < n; ++i) {
      x(i, 0) = ox[i][0] = 1.0;
      for (size_t j = 1; j < p; ++j) x(i, j) = ox[i][j] = u();
      y[i] = 3.0 + 2.0 * x(i, 1) - x(i, 2) + 0.5 * x(i, 3) + 0.3 * u();
    }
    LinearModelFit fit = ols_fit(x, y);
    oracle::OlsOracle expect = oracle::ols(ox, y);
    for (size_t j = 0; j < p; ++j)
      CHECK(fit.coefficients[j] ==
            doctest::Approx(expect.beta[j]).epsilon(1e-8));
    CHECK(fit.residual_sum_squares ==
          doctest::Approx(expect.rss).epsilon(1e-8));

    // Residual orthogonality to the design columns.
    std::vector<double> resid(n);
    for (size_t i = 0; i < n; ++i) {
      double pred = 0;
      for (size_t j = 0; j < p; ++j) pred += x(i, j) * fit.coefficients[j];
      resid[i] = y[i] - pred;
    }
    for (size_t j = 0; j < p; ++j) {
      double dot = 0, norm = 0;
      for (size_t i = 0; i < n; ++i) {
        dot += x(i, j) * resid[i];
        norm += x(i, j) * x(i, j);
      }
      CHECK(std::fabs(dot) <= 1e-8 * std::max(1.0, norm));
    }

    // Covariance agrees with sigma^2 (X'X)^-1.
    double sigma2 = expect.rss / (n - p);
    for (size_t r = 0; r < p; ++r)
      for (size_t c = 0; c < p; ++c)
        CHECK(fit.coefficient_covariance(r, c) ==
              doctest::Approx(sigma2 * expect.xtx_inv[r][c]).epsilon(1e-6));
  }
}

TEST_CASE("ols_fit error conditions") {
  Matrix x(2, 3);
  CHECK_THROWS_AS(ols_fit(x, {1.0, 2.0}), TooFewRows);

  Matrix dup(5, 3);
  for (size_t i = 0; i < 5; ++i) {
    dup(i, 0) = 1.0;
    dup(i, 1) = static_cast<double>(i);
    dup(i, 2) = 2.0 * i;  // linearly dependent on column 1
  }
  CHECK_THROWS_AS(ols_fit(dup, {1, 2, 3, 4, 5}, {"intercept", "t", "t2"}),
                  RankDeficient);
  try {
    ols_fit(dup, {1, 2, 3, 4, 5}, {"intercept", "t", "t2"});
  } catch (const RankDeficient& e) {
    std::string msg = e.what();
    CHECK(msg.find("t") != std::string::npos);  // names a dependent column
  }
}

TEST_CASE("f_sf fixed points and properties") {
  CHECK(f_sf(0.0, 1, 4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f_sf(13.5, 1, 4) == doctest::Approx(0.021314).epsilon(1e-3));

  // Monotone decreasing toward zero.
  double prev = 1.0;
  for (double f : {0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4, 1e8}) {
    double p = f_sf(f, 3, 17);
    CHECK(p < prev);
    prev = p;
  }
  CHECK(prev < 1e-12);
  CHECK_THROWS_AS(f_sf(-1.0, 1, 4), DomainError);
  CHECK_THROWS_AS(f_sf(1.0, 0, 4), DomainError);
}

TEST_CASE("f_sf agrees with closed-form incomplete-beta values") {
  // I_x(1, b) = 1 - (1-x)^b, I_x(a, 1) = x^a,
  // I_x(2, 1/2) = 1 - (3/2)sqrt(1-x) + (1/2)(1-x)^(3/2),
  // I_x(1/2, 1/2) = (2/pi) asin(sqrt(x)); x = df2 / (df2 + df1 f).
  struct Spot {
    double f;
    int df1, df2;
    double expect;
  };
  auto x_of = [](double f, int df1, int df2) {
    return df2 / (df2 + df1 * f);
  };
  std::vector<Spot> spots;
  for (double f : {0.25, 1.0, 4.0}) {
    // df1=2, df2=2: a=1, b=1 -> p = x
    spots.push_back({f, 2, 2, x_of(f, 2, 2)});
    // df1=2, df2=4: a=2, b=1 -> p = x^2
    spots.push_back({f, 2, 4, std::pow(x_of(f, 2, 4), 2.0)});
    // df1=2, df2=6: a=3, b=1 -> p = x^3
    spots.push_back({f, 2, 6, std::pow(x_of(f, 2, 6), 3.0)});
    // df1=4, df2=2: a=1, b=2 -> p = 1-(1-x)^2
    spots.push_back({f, 4, 2, 1.0 - std::pow(1.0 - x_of(f, 4, 2), 2.0)});
    // df1=6, df2=2: a=1, b=3 -> p = 1-(1-x)^3
    spots.push_back({f, 6, 2, 1.0 - std::pow(1.0 - x_of(f, 6, 2), 3.0)});
    // df1=1, df2=4: a=2, b=1/2
    {
      double x = x_of(f, 1, 4);
      spots.push_back({f, 1, 4, 1.0 - 1.5 * std::sqrt(1.0 - x) +
                                    0.5 * std::pow(1.0 - x, 1.5)});
    }
    // df1=1, df2=1: a=1/2, b=1/2 -> p = (2/pi) asin(sqrt(x))
    {
      double x = x_of(f, 1, 1);
      spots.push_back(
          {f, 1, 1, 2.0 / 3.14159265358979323846 * std::asin(std::sqrt(x))});
    }
  }
  REQUIRE(spots.size() >= 20);
  for (const Spot& s : spots) {
    INFO("f=", s.f, " df=(", s.df1, ",", s.df2, ")");
    CHECK(std::fabs(f_sf(s.f, s.df1, s.df2) - s.expect) <= 1e-10);
  }
}

TEST_CASE("ancova with constant covariates equals one-way ANOVA") {
  auto records = two_group_cohort({1, 2, 3}, {4, 5, 6});
  AncovaResult r = ancova_feature(records, "total_path");
  CHECK(r.f_value == doctest::Approx(13.5).epsilon(1e-9));
  CHECK(r.df_numerator == 1);
  CHECK(r.df_denominator == 4);
  CHECK(r.p_value == doctest::Approx(0.0213).epsilon(5e-3));
  CHECK(std::fabs(r.p_value - 0.021314) < 1e-4);
  CHECK(r.n_used == 6);
  // Dropped constants are reported.
  CHECK(r.dropped_covariates.size() == 4);

  // EMMs equal group means with no covariates in play.
  CHECK(r.emm[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.emm[1] == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(r.ci95_lo[0] < r.emm[0]);
  CHECK(r.ci95_hi[0] > r.emm[0]);

  // CI must be mean +- t_{.975,4} * sqrt(sigma^2/3) = 2 +- 2.7764*0.5774.
  CHECK(r.ci95_hi[0] - r.emm[0] == doctest::Approx(1.6032).epsilon(1e-3));
}

TEST_CASE("identical groups give F = 0 and equal EMMs") {
  auto records = two_group_cohort({2, 2, 2}, {2, 2, 2});
  AncovaResult r = ancova_feature(records, "total_path");
  CHECK(r.f_value == 0.0);
  CHECK(r.p_value == doctest::Approx(1.0));
  CHECK(r.emm[0] == doctest::Approx(r.emm[1]));
}

TEST_CASE("ancova matches the brute-force oracle with random covariates") {
  std::mt19937 rng(31);
  auto u = [&]() { return rng() / 4294967296.0; };
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CohortRecord> records;
    oracle::Mat x;
    std::vector<double> y;
    for (int i = 0; i < 50; ++i) {
      CohortRecord r;
      char id[16];
      std::snprintf(id, sizeof(id), "r%03d", i);
      r.transcript_id = id;
      r.group = i < 25 ? Group::kUnimpaired : Group::kImpaired;
      r.age = 55.0 + 30.0 * u();
      r.education = 8.0 + 12.0 * u();
      r.gender = u() < 0.5 ? 0 : 1;
      int unique = 5 + static_cast<int>(u() * 15.0);
      r.features.nodes = unique + 2;
      r.features.unique_nodes = unique;
      double value = 100.0 + 40.0 * (r.group == Group::kImpaired) +
                     0.8 * r.age + 2.0 * r.education + 5.0 * r.gender +
                     3.0 * unique + 25.0 * u();
      r.features.total_path = value;
      records.push_back(r);

      x.push_back({1.0, r.group == Group::kImpaired ? 1.0 : 0.0, r.age,
                   r.education, static_cast<double>(r.gender),
                   static_cast<double>(unique)});
      y.push_back(value);
    }
    AncovaResult got = ancova_feature(records, "total_path");
    double f_expect = oracle::partial_f(x, y, 1);
    CHECK(got.f_value == doctest::Approx(f_expect).epsilon(1e-8));
    CHECK(got.df_denominator == 50 - 6);

    // EMM oracle: beta from normal equations, covariates at grand means.
    oracle::OlsOracle fit = oracle::ols(x, y);
    for (int g = 0; g < 2; ++g) {
      std::vector<double> at = {1.0, static_cast<double>(g), 0, 0, 0, 0};
      for (int i = 0; i < 50; ++i)
        for (int j = 2; j < 6; ++j) at[j] += x[i][j] / 50.0;
      double pred = 0;
      for (int j = 0; j < 6; ++j) pred += at[j] * fit.beta[j];
      CHECK(got.emm[g] == doctest::Approx(pred).epsilon(1e-8));
    }
  }
}

TEST_CASE("ancova invariances") {
  std::mt19937 rng(17);
  auto u = [&]() { return rng() / 4294967296.0; };
  std::vector<CohortRecord> records;
  for (int i = 0; i < 30; ++i) {
    CohortRecord r;
    char id[16];
    std::snprintf(id, sizeof(id), "r%03d", i);
    r.transcript_id = id;
    r.group = i % 2 == 0 ? Group::kUnimpaired : Group::kImpaired;
    r.age = 60 + 20 * u();
    r.education = 10 + 8 * u();
    r.gender = i % 3 == 0 ? 1 : 0;
    int unique = 6 + static_cast<int>(10 * u());
    r.features.nodes = unique + 1;
    r.features.unique_nodes = unique;
    r.features.total_path =
        500 + 100 * (r.group == Group::kImpaired) + 50 * u() + 4.0 * unique;
    records.push_back(r);
  }
  AncovaResult base = ancova_feature(records, "total_path");

  SUBCASE("adding a constant shifts EMMs and fixes F") {
    auto shifted = records;
    for (auto& r : shifted) *r.features.total_path += 1000.0;
    AncovaResult got = ancova_feature(shifted, "total_path");
    CHECK(got.f_value == doctest::Approx(base.f_value).epsilon(1e-9));
    CHECK(got.p_value == doctest::Approx(base.p_value).epsilon(1e-9));
    CHECK(got.emm[0] == doctest::Approx(base.emm[0] + 1000.0).epsilon(1e-9));
    CHECK(got.emm[1] == doctest::Approx(base.emm[1] + 1000.0).epsilon(1e-9));
  }
  SUBCASE("scaling scales EMMs and CI widths and fixes F") {
    auto scaled = records;
    for (auto& r : scaled) *r.features.total_path *= 3.5;
    AncovaResult got = ancova_feature(scaled, "total_path");
    CHECK(got.f_value == doctest::Approx(base.f_value).epsilon(1e-9));
    CHECK(got.emm[0] == doctest::Approx(base.emm[0] * 3.5).epsilon(1e-9));
    CHECK(got.ci95_hi[1] - got.ci95_lo[1] ==
          doctest::Approx((base.ci95_hi[1] - base.ci95_lo[1]) * 3.5)
              .epsilon(1e-9));
  }
  SUBCASE("record order never matters") {
    auto shuffled = records;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    AncovaResult got = ancova_feature(shuffled, "total_path");
    CHECK(got.f_value == doctest::Approx(base.f_value).epsilon(1e-12));
    CHECK(got.emm[0] == doctest::Approx(base.emm[0]).epsilon(1e-12));
  }
}

TEST_CASE("single-gender cohorts drop the gender column with a note") {
  auto records = two_group_cohort({1, 2, 3, 4}, {5, 6, 7, 8});
  for (auto& r : records) {
    r.age = 60 + static_cast<double>(r.transcript_id.back() - '0');
    r.gender = 1;  // everyone
  }
  AncovaResult r = ancova_feature(records, "total_path");
  bool noted = false;
  for (const auto& name : r.dropped_covariates) noted |= name == "gender";
  CHECK(noted);
}

TEST_CASE("insufficient data") {
  CHECK_THROWS_AS(ancova_feature({}, "total_path"), InsufficientData);
  auto records = two_group_cohort({1.0}, {2.0, 3.0});
  CHECK_THROWS_AS(ancova_feature(records, "total_path"), InsufficientData);

  // Null feature values are excluded per-feature.
  auto cohort = two_group_cohort({1, 2, 3}, {4, 5, 6});
  cohort[0].features.total_path.reset();
  cohort[1].features.total_path.reset();
  CHECK_THROWS_AS(ancova_feature(cohort, "total_path"), InsufficientData);
  AncovaResult ok = ancova_feature(cohort, "nodes");
  CHECK(ok.n_used == 6);  // nodes is present on every record
}

TEST_CASE("unique_nodes is not its own covariate") {
  auto records = two_group_cohort({1, 2, 3, 9}, {4, 5, 6, 9});
  int k = 0;
  for (auto& r : records) {
    r.features.unique_nodes = 3 + k++;
    r.age = 60 + k;
  }
  AncovaResult r = ancova_feature(records, "unique_nodes");
  for (const auto& name : r.dropped_covariates)
    CHECK(name != "unique_nodes");
  CHECK(r.df_denominator == 8 - 3);  // intercept, group, age
}

TEST_CASE("ancova_table stars and row behavior") {
  // Paired noise: each impaired record mirrors an unimpaired one on every
  // feature except total_path, which carries a +10 group shift. Group
  // coefficients for the noise features are exactly zero.
  std::vector<CohortRecord> records;
  for (int i = 0; i < 60; ++i) {
    CohortRecord r;
    char id[16];
    std::snprintf(id, sizeof(id), "r%03d", i);
    r.transcript_id = id;
    r.group = i % 2 == 0 ? Group::kUnimpaired : Group::kImpaired;
    int pair = i / 2;
    r.age = 60.0 + (pair % 13);
    r.education = 10.0 + (pair % 7);
    r.gender = pair % 2;
    double noise = std::sin(pair * 1.7) * 3.0;
    int unique = 8 + (pair % 9);
    r.features.nodes = unique + (pair % 4);
    r.features.unique_nodes = unique;
    r.features.avg_x = 200 + noise;
    r.features.std_x = 50 + noise;
    r.features.avg_y = 100 + noise;
    r.features.std_y = 30 + noise;
    r.features.self_cycles = pair % 3;
    r.features.cycles = pair % 4;
    r.features.self_cycles_quad = pair % 5;
    r.features.cross_ratio_quad = 1.0 + 0.1 * (pair % 6);
    r.features.path_per_unique = 120 + noise;
    r.features.total_path =
        1500 + 2.0 * (pair % 11) +
        (r.group == Group::kImpaired ? 10.0 : 0.0);
    records.push_back(r);
  }
  auto rows = ancova_table(records);
  REQUIRE(rows.size() == 12);
  for (const AncovaRow& row : rows) {
    REQUIRE(row.result.has_value());
    if (row.feature_name == "total_path") {
      CHECK(row.stars() != "");
    } else {
      INFO(row.feature_name, " p=", row.result->p_value);
      CHECK(row.stars() == "");
    }
  }

  // Feature order follows the reporting convention.
  CHECK(rows[0].feature_name == "avg_x");
  CHECK(rows[11].feature_name == "unique_nodes");
}

TEST_CASE("ancova_table on an empty record list reports per-row errors") {
  auto rows = ancova_table({});
  REQUIRE(rows.size() == 12);
  for (const AncovaRow& row : rows) {
    CHECK(!row.result.has_value());
    CHECK(!row.error.empty());
    CHECK(row.stars() == "");
  }
  std::string csv = ancova_csv(rows);
  CHECK(csv.find("avg_x,,,,,,,,,,,\n") != std::string::npos);
}

TEST_CASE("star thresholds are strict inequalities") {
  CHECK(significance_stars(0.049) == "*");
  CHECK(significance_stars(0.05) == "");
  CHECK(significance_stars(0.01) == "*");
  CHECK(significance_stars(0.0099) == "**");
  CHECK(significance_stars(0.001) == "**");
  CHECK(significance_stars(0.0009) == "***");
}

TEST_CASE("t_critical round trips through the t distribution") {
  // Classic two-sided 95% points.
  CHECK(t_critical(0.95, 4) == doctest::Approx(2.7764).epsilon(1e-4));
  CHECK(t_critical(0.95, 10) == doctest::Approx(2.2281).epsilon(1e-4));
  CHECK(t_critical(0.95, 100) == doctest::Approx(1.9840).epsilon(1e-4));
  CHECK(t_critical(0.99, 10) == doctest::Approx(3.1693).epsilon(1e-4));
}
