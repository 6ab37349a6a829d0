#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psmm/basis.hpp"
#include "psmm/dataset.hpp"

namespace psmm {

// What a variance component measures, so reports can find the right row
// without string matching.
enum class VarRole {
  Scale,             // residual sigma
  SmoothWiggle,      // sigma_t of a smooth term's curvature penalty
  SmoothNull,        // shrinkage of the smooth's linear part
  SmoothIntercept,   // per-level intercepts built into a factor smooth
  RandomIntercept,   // sigma_b
  SineAmplitude,     // sigma_alpha (random sin(t) coefficient)
  FwSlope,           // sigma_{b_w} (random within-treatment slope)
  GenericSlope,
  CorrPair,
};

// A deterministic function of the row covariates, used as a random-slope
// regressor.  When centered, the column mean is subtracted at assembly.
struct RowExpr {
  std::string name;
  std::function<double(double time, int fw, int fb)> fn;
  bool centered = false;

  static RowExpr sin_time();
  static RowExpr fw_indicator();
  static RowExpr time_raw();
  static RowExpr time_centered();
};

struct RandomTermSpec {
  enum class Form { Intercept, Slope, CorrelatedInterceptSlope };
  Form form = Form::Intercept;
  std::string group = "subject";
  RowExpr expr;              // unused for Form::Intercept
  VarRole slope_role = VarRole::GenericSlope;
};

// Declarative model: treatment-coded fixed effects over F_w (A/B) and
// F_b (X/Y) plus any random and smooth terms.
struct ModelSpec {
  bool include_fw = true;
  bool include_fb = true;
  bool include_interaction = false;
  std::vector<RandomTermSpec> random;
  std::vector<SmoothTermSpec> smooths;
  // Skips intercept orthogonalization of factor smooths, reproducing the
  // defect this engine otherwise refuses (see harness fit_with_bug).
  bool uncentered_factor_smooth_defect = false;
};

struct LambdaGroupInfo {
  std::string name;
  VarRole role = VarRole::GenericSlope;
  int term_index = -1;
};

struct PenalizedTermInfo {
  enum class Kind { RandomIntercept, RandomSlope, CorrelatedPair, Smooth };
  Kind kind = Kind::RandomIntercept;
  std::string name;
  int col_begin = 0;   // first penalized column
  int col_count = 0;   // penalized columns of this term
  int n_levels = 1;
  int per_level_cols = 1;
  std::vector<int> lambda_groups;
  int primary_lambda_group = -1;       // sigma_t source for smooths
  // Smooth bookkeeping: internal coords -> centered-basis coords, per level.
  Eigen::MatrixXd level_transform;
  int smooth_cols_per_level = 0;       // excludes factor-smooth intercept cols
  bool has_intercept_cols = false;
  int intercept_col_begin = 0;
  // m=2 smooths: unpenalized directions are moved to the fixed block.
  int null_fixed_begin = -1;
  int null_fixed_count = 0;
  int corr_index = -1;                 // index into PenalizedSystem::corr_terms
};

// The assembled penalized least-squares system.  Columns of C are ordered
// [penalized coords | fixed coords]; every penalized coordinate carries
// either a positive diagonal penalty in at least one lambda group or belongs
// to a correlated 2x2 block.
struct PenalizedSystem {
  Eigen::SparseMatrix<double> C;
  Eigen::VectorXd y;
  int q = 0;
  int p = 0;              // all unpenalized columns
  int p_model = 0;        // fixed columns of the model itself
  std::vector<std::string> fixed_names;

  std::vector<LambdaGroupInfo> lambda_groups;
  std::vector<Eigen::VectorXd> penalty_diag;   // q-vector per lambda group

  struct CorrTerm {
    int term_index = -1;
    int col_begin = 0;   // pairs are adjacent: (c, c+1) per level
    int n_levels = 0;
    std::string name;
  };
  std::vector<CorrTerm> corr_terms;

  std::vector<PenalizedTermInfo> terms;

  double mad_y = 1.0;   // scaled MAD of y (correlated-block initialization)
  double sd_y = 1.0;    // boundary threshold reference

  int n() const { return int(C.rows()); }
  int n_params() const {
    return int(lambda_groups.size()) + 3 * int(corr_terms.size());
  }
};

// Build the full design from a model spec.  Throws SpecError when X is rank
// deficient (naming the aliased columns) and DataError for unknown factor
// levels or terms referencing absent covariates.
PenalizedSystem assemble(const ModelSpec& spec, const LongDataset& data);

}  // namespace psmm
