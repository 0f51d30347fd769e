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

#include "ciugraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "ciugraph/csv.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

constexpr double kRankTolerance = 1e-10;

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta function, modified Lentz.
double incbeta_cf(double x, double a, double b) {
  const double tiny = 1e-300;
  const double eps = 1e-15;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0) || !(x <= 1.0))
    throw DomainError("regularized_incomplete_beta: bad arguments");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * incbeta_cf(x, a, b) / a;
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(a, b)) *
                   incbeta_cf(1.0 - x, b, a) / b;
}

double f_sf(double f, int df1, int df2) {
  if (!(f >= 0.0) || df1 < 1 || df2 < 1)
    throw DomainError("f_sf: need f >= 0 and df >= 1");
  double x = df2 / (df2 + static_cast<double>(df1) * f);
  return regularized_incomplete_beta(x, df2 / 2.0, df1 / 2.0);
}

namespace {

// Two-sided survival of |T| > t for t >= 0.
double t_two_sided_p(double t, int df) {
  double x = df / (t * t + df);
  return regularized_incomplete_beta(x, df / 2.0, 0.5);
}

}  // namespace

double t_critical(double confidence, int df) {
  if (df < 1 || !(confidence > 0.0) || !(confidence < 1.0))
    throw DomainError("t_critical: bad arguments");
  double alpha = 1.0 - confidence;
  // p(t) = P(|T| > t) is monotone decreasing; bisect p(t) = alpha.
  double lo = 0.0, hi = 1.0;
  while (t_two_sided_p(hi, df) > alpha) {
    hi *= 2.0;
    if (hi > 1e9) break;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (t_two_sided_p(mid, df) > alpha)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

LinearModelFit ols_fit(const Matrix& design, const std::vector<double>& response,
                       const std::vector<std::string>& column_names) {
  const size_t n = design.rows();
  const size_t p = design.cols();
  if (response.size() != n)
    throw DomainError("ols_fit: response length does not match design rows");
  if (n < p)
    throw TooFewRows("ols_fit: need at least as many rows (" +
                     std::to_string(n) + ") as columns (" + std::to_string(p) +
                     ")");

  auto col_name = [&](size_t j) {
    return j < column_names.size() ? column_names[j]
                                   : "column " + std::to_string(j);
  };

  // Householder QR with column pivoting on a working copy.
  Matrix a(n, p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j) a(i, j) = design(i, j);
  std::vector<double> qty(response);
  std::vector<size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<double> col_norm(p, 0.0);
  for (size_t j = 0; j < p; ++j) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a(i, j) * a(i, j);
    col_norm[j] = s;
  }
  double max_initial_norm =
      *std::max_element(col_norm.begin(), col_norm.end());
  if (max_initial_norm == 0.0)
    throw RankDeficient("ols_fit: design is entirely zero");

  for (size_t k = 0; k < p; ++k) {
    // Pivot the column with the largest remaining norm to position k.
    size_t best = k;
    double best_norm = -1.0;
    for (size_t j = k; j < p; ++j) {
      double s = 0.0;
      for (size_t i = k; i < n; ++i) s += a(i, j) * a(i, j);
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    if (best != k) {
      for (size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, best));
      std::swap(perm[k], perm[best]);
    }
    if (best_norm <= kRankTolerance * max_initial_norm)
      throw RankDeficient("ols_fit: rank deficient; dependent column '" +
                          col_name(perm[k]) + "'");

    // Householder vector for column k.
    double alpha = 0.0;
    for (size_t i = k; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (a(k, k) > 0) alpha = -alpha;
    std::vector<double> v(n - k, 0.0);
    v[0] = a(k, k) - alpha;
    for (size_t i = k + 1; i < n; ++i) v[i - k] = a(i, k);
    double vtv = 0.0;
    for (double x : v) vtv += x * x;
    a(k, k) = alpha;
    for (size_t i = k + 1; i < n; ++i) a(i, k) = 0.0;
    if (vtv > 0.0) {
      for (size_t j = k + 1; j < p; ++j) {
        double dot = 0.0;
        for (size_t i = k; i < n; ++i) dot += v[i - k] * a(i, j);
        double scale = 2.0 * dot / vtv;
        for (size_t i = k; i < n; ++i) a(i, j) -= scale * v[i - k];
      }
      double dot = 0.0;
      for (size_t i = k; i < n; ++i) dot += v[i - k] * qty[i];
      double scale = 2.0 * dot / vtv;
      for (size_t i = k; i < n; ++i) qty[i] -= scale * v[i - k];
    }
  }

  // Back-substitute R beta_perm = (Q'y)[0..p).
  std::vector<double> beta_perm(p, 0.0);
  for (size_t k = p; k-- > 0;) {
    double s = qty[k];
    for (size_t j = k + 1; j < p; ++j) s -= a(k, j) * beta_perm[j];
    beta_perm[k] = s / a(k, k);
  }

  double rss = 0.0;
  for (size_t i = p; i < n; ++i) rss += qty[i] * qty[i];

  // R^-1 for the covariance: (X'X)^-1 = P R^-1 R^-T P'.
  Matrix rinv(p, p);
  for (size_t j = 0; j < p; ++j) {
    rinv(j, j) = 1.0 / a(j, j);
    for (size_t k = j + 1; k < p; ++k) {
      double s = 0.0;
      for (size_t i = j; i < k; ++i) s += rinv(j, i) * a(i, k);
      rinv(j, k) = -s / a(k, k);
    }
  }

  // Exact square systems have no residual degrees of freedom; the
  // covariance degenerates to zero there.
  double sigma2 = n > p ? rss / static_cast<double>(n - p) : 0.0;
  LinearModelFit fit;
  fit.coefficients.assign(p, 0.0);
  for (size_t k = 0; k < p; ++k) fit.coefficients[perm[k]] = beta_perm[k];
  fit.residual_sum_squares = rss;
  fit.coefficient_covariance = Matrix(p, p);
  for (size_t r = 0; r < p; ++r) {
    for (size_t c = 0; c < p; ++c) {
      double s = 0.0;
      for (size_t k = std::max(r, c); k < p; ++k) s += rinv(r, k) * rinv(c, k);
      fit.coefficient_covariance(perm[r], perm[c]) = sigma2 * s;
    }
  }
  fit.design_column_names.assign(column_names.begin(), column_names.end());
  fit.n_rows = n;
  return fit;
}

const std::vector<std::string>& ancova_default_feature_order() {
  static const std::vector<std::string> kOrder = {
      "avg_x",       "std_x",           "avg_y",
      "std_y",       "total_path",      "path_per_unique",
      "self_cycles", "cycles",          "nodes",
      "self_cycles_quad", "cross_ratio_quad", "unique_nodes"};
  return kOrder;
}

std::string significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

std::string AncovaRow::stars() const {
  return result ? significance_stars(result->p_value) : "";
}

AncovaResult ancova_feature(const std::vector<CohortRecord>& records,
                            const std::string& feature_name) {
  // Usable rows: non-null dependent. Sorted by transcript_id so record
  // order never changes the arithmetic.
  struct Row {
    const CohortRecord* rec;
    double y;
  };
  std::vector<Row> rows;
  for (const CohortRecord& r : records) {
    std::optional<double> v = r.features.get(feature_name);
    if (!v) continue;
    rows.push_back({&r, *v});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.rec->transcript_id < b.rec->transcript_id;
  });

  size_t n0 = 0, n1 = 0;
  for (const Row& r : rows) {
    (r.rec->group == Group::kUnimpaired ? n0 : n1)++;
  }
  if (n0 < 2 || n1 < 2)
    throw InsufficientData("feature '" + feature_name +
                           "': need >= 2 usable records per group (have " +
                           std::to_string(n0) + " / " + std::to_string(n1) +
                           ")");

  const size_t n = rows.size();

  // Candidate covariates; constant columns are dropped rather than letting
  // the fit fail (single-gender cohorts, degenerate fixtures).
  struct Cov {
    std::string name;
    std::vector<double> values;
  };
  std::vector<Cov> covariates;
  auto add_cov = [&](const std::string& name, auto getter) {
    Cov c;
    c.name = name;
    c.values.reserve(n);
    for (const Row& r : rows) c.values.push_back(getter(*r.rec));
    covariates.push_back(std::move(c));
  };
  add_cov("age", [](const CohortRecord& r) { return r.age; });
  add_cov("education", [](const CohortRecord& r) { return r.education; });
  add_cov("gender",
          [](const CohortRecord& r) { return static_cast<double>(r.gender); });
  if (feature_name != "unique_nodes") {
    add_cov("unique_nodes", [](const CohortRecord& r) {
      return r.features.unique_nodes ? static_cast<double>(
                                           *r.features.unique_nodes)
                                     : 0.0;
    });
  }

  AncovaResult result;
  result.feature_name = feature_name;

  std::vector<const Cov*> used;
  for (const Cov& c : covariates) {
    double lo = *std::min_element(c.values.begin(), c.values.end());
    double hi = *std::max_element(c.values.begin(), c.values.end());
    if (hi - lo <= 0.0) {
      result.dropped_covariates.push_back(c.name);
      continue;
    }
    used.push_back(&c);
  }

  const size_t p_full = 2 + used.size();
  if (n <= p_full)
    throw InsufficientData("feature '" + feature_name +
                           "': too few rows for the model");

  std::vector<double> y;
  y.reserve(n);
  for (const Row& r : rows) y.push_back(r.y);

  std::vector<std::string> full_names = {"intercept", "group"};
  for (const Cov* c : used) full_names.push_back(c->name);

  Matrix full(n, p_full);
  for (size_t i = 0; i < n; ++i) {
    full(i, 0) = 1.0;
    full(i, 1) = rows[i].rec->group == Group::kImpaired ? 1.0 : 0.0;
    for (size_t j = 0; j < used.size(); ++j) full(i, 2 + j) = used[j]->values[i];
  }
  Matrix reduced(n, p_full - 1);
  for (size_t i = 0; i < n; ++i) {
    reduced(i, 0) = 1.0;
    for (size_t j = 0; j < used.size(); ++j)
      reduced(i, 1 + j) = used[j]->values[i];
  }
  std::vector<std::string> reduced_names = {"intercept"};
  for (const Cov* c : used) reduced_names.push_back(c->name);

  LinearModelFit fit_full = ols_fit(full, y, full_names);
  LinearModelFit fit_reduced = ols_fit(reduced, y, reduced_names);

  const int df2 = static_cast<int>(n - p_full);
  double rss_full = fit_full.residual_sum_squares;
  double rss_reduced = fit_reduced.residual_sum_squares;
  double num = rss_reduced - rss_full;
  if (num < 0.0) num = 0.0;  // guard tiny negative round-off

  double y_scale = 0.0;
  for (double v : y) y_scale += v * v;
  const double floor = 1e-20 * std::max(y_scale, 1.0);

  double f;
  if (rss_full > floor) {
    f = num / (rss_full / df2);
  } else {
    // Degenerate exact fit: no within-group variance left. Identical
    // groups mean no between-group variance either.
    f = num > floor ? std::numeric_limits<double>::infinity() : 0.0;
  }
  result.f_value = f;
  result.p_value = std::isinf(f) ? 0.0 : f_sf(f, 1, df2);
  result.df_numerator = 1;
  result.df_denominator = df2;
  result.n_used = static_cast<int>(n);

  // EMMs: group set to 0/1, covariates at their grand means over the rows
  // used for this model.
  double tcrit = t_critical(0.95, df2);
  for (int gidx = 0; gidx < 2; ++gidx) {
    std::vector<double> at(p_full, 0.0);
    at[0] = 1.0;
    at[1] = static_cast<double>(gidx);
    for (size_t j = 0; j < used.size(); ++j) {
      double mean = std::accumulate(used[j]->values.begin(),
                                    used[j]->values.end(), 0.0) /
                    static_cast<double>(n);
      at[2 + j] = mean;
    }
    double pred = 0.0;
    for (size_t j = 0; j < p_full; ++j)
      pred += at[j] * fit_full.coefficients[j];
    double var = 0.0;
    for (size_t r = 0; r < p_full; ++r)
      for (size_t c = 0; c < p_full; ++c)
        var += at[r] * fit_full.coefficient_covariance(r, c) * at[c];
    double se = std::sqrt(std::max(0.0, var));
    result.emm[gidx] = pred;
    result.ci95_lo[gidx] = pred - tcrit * se;
    result.ci95_hi[gidx] = pred + tcrit * se;
  }
  return result;
}

std::vector<AncovaRow> ancova_table(const std::vector<CohortRecord>& records,
                                    const std::vector<std::string>& features) {
  std::vector<AncovaRow> rows;
  rows.reserve(features.size());
  for (const std::string& f : features) {
    AncovaRow row;
    row.feature_name = f;
    try {
      row.result = ancova_feature(records, f);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ancova_csv(const std::vector<AncovaRow>& rows) {
  std::string out =
      "feature,f_value,stars,p_value,df2,n_used,emm_unimpaired,ci_lo_u,"
      "ci_hi_u,emm_impaired,ci_lo_i,ci_hi_i\n";
  char buf[64];
  auto real = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  for (const AncovaRow& row : rows) {
    out += csv::escape(row.feature_name);
    if (row.result) {
      const AncovaResult& r = *row.result;
      out += "," + real(r.f_value);
      out += "," + row.stars();
      out += "," + real(r.p_value);
      out += "," + std::to_string(r.df_denominator);
      out += "," + std::to_string(r.n_used);
      out += "," + real(r.emm[0]) + "," + real(r.ci95_lo[0]) + "," +
             real(r.ci95_hi[0]);
      out += "," + real(r.emm[1]) + "," + real(r.ci95_lo[1]) + "," +
             real(r.ci95_hi[1]);
    } else {
      out += ",,,,,,,,,,,";
    }
    out += "\n";
  }
  return out;
}

}  // namespace ciugraph
