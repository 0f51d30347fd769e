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

#ifndef CIUGRAPH_STATS_HPP_
#define CIUGRAPH_STATS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ciugraph/features.hpp"

namespace ciugraph {

enum class Group { kUnimpaired = 0, kImpaired = 1 };

struct CohortRecord {
  std::string transcript_id;
  Group group = Group::kUnimpaired;
  double age = 0.0;
  double education = 0.0;
  int gender = 0;  // binary code {0,1}
  FeatureVector features;
};

// Dense row-major matrix, just large enough for small design matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols),
                                     data_(rows * cols, 0.0) {}
  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

struct LinearModelFit {
  std::vector<double> coefficients;
  double residual_sum_squares = 0.0;
  // (X'X)^-1 scaled by the residual variance RSS / (n - p).
  Matrix coefficient_covariance;
  std::vector<std::string> design_column_names;
  size_t n_rows = 0;
};

// Least squares via Householder QR with column pivoting. Throws TooFewRows
// when n < p and RankDeficient naming the dependent column.
LinearModelFit ols_fit(const Matrix& design, const std::vector<double>& response,
                       const std::vector<std::string>& column_names = {});

struct AncovaResult {
  std::string feature_name;
  double f_value = 0.0;
  double p_value = 1.0;
  int df_numerator = 1;
  int df_denominator = 0;
  double emm[2] = {0.0, 0.0};        // [unimpaired, impaired]
  double ci95_lo[2] = {0.0, 0.0};
  double ci95_hi[2] = {0.0, 0.0};
  int n_used = 0;
  std::vector<std::string> dropped_covariates;  // constant columns etc.
};

// One ANCOVA: dependent = the named feature; model = intercept + group +
// age + education + gender + unique_nodes (unique_nodes dropped when it is
// itself the dependent). F is the partial F for the group column; EMMs fix
// covariates at their grand means over the rows used. Records with a null
// feature value are excluded per-feature. Throws InsufficientData /
// RankDeficient.
AncovaResult ancova_feature(const std::vector<CohortRecord>& records,
                            const std::string& feature_name);

struct AncovaRow {
  std::string feature_name;
  std::optional<AncovaResult> result;
  std::string error;  // set when the per-feature model failed
  std::string stars() const;
};

// Default row order follows the reporting convention (unique_nodes last).
const std::vector<std::string>& ancova_default_feature_order();

std::vector<AncovaRow> ancova_table(const std::vector<CohortRecord>& records,
                                    const std::vector<std::string>& features =
                                        ancova_default_feature_order());

// CSV: feature,f_value,stars,p_value,df2,n_used,emm_unimpaired,ci_lo_u,
// ci_hi_u,emm_impaired,ci_lo_i,ci_hi_i
std::string ancova_csv(const std::vector<AncovaRow>& rows);

// Significance stars: *** p<0.001, ** p<0.01, * p<0.05 (strict).
std::string significance_stars(double p);

// Survival function of the F distribution via the regularized incomplete
// beta function, absolute error <= 1e-10. Throws DomainError.
double f_sf(double f, int df1, int df2);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double x, double a, double b);

// Two-sided t critical value at the given confidence level (e.g. 0.95).
double t_critical(double confidence, int df);

}  // namespace ciugraph

#endif  // CIUGRAPH_STATS_HPP_
