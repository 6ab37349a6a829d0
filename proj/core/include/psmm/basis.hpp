#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <string>
#include <vector>

namespace psmm {

enum class KnotRule {
  Uniform,  // k-4 interior knots equally spaced strictly inside [lo, hi]
};

// Description of a univariate cubic B-spline basis with difference penalties
// (P-spline construction).  m = 2 penalizes curvature only; m = 1 adds a
// shrinkage penalty on the curvature null space (constant + linear part), so
// the whole smooth vanishes as its smoothing parameters grow.
struct BasisSpec {
  int k = 20;
  int m = 2;
  double lo = 0.0;
  double hi = 1.0;
  KnotRule knot_rule = KnotRule::Uniform;

  void validate() const;  // k >= 4, lo < hi, m in {1,2}
};

// An evaluated basis: design columns plus the penalty matrices that act on
// its coefficients.  After absorb_intercept() the columns are orthogonal to
// the constant vector and one column has been removed.
struct BasisBlock {
  Eigen::MatrixXd B;
  std::vector<Eigen::MatrixXd> S_list;
  bool centered = false;
  BasisSpec spec;
  bool rank_warning = false;  // numerical rank loss seen while centering

  int n_cols() const { return int(B.cols()); }
};

enum class SmoothMode { Population, FactorSmooth, BySmooth };

struct SmoothTermSpec {
  std::string covariate = "time";
  SmoothMode mode = SmoothMode::Population;
  std::string group = "subject";
  BasisSpec basis;
  // Factor smooths always share one smoothing parameter per penalty across
  // levels; by-smooths do so when a link id is set (the only configuration
  // this engine supports, matching the models it exists to compare).
  int lambda_link_id = 1;
};

// Evaluate the basis at x.  One penalty matrix when m = 2 (second-difference
// coefficient penalty), two when m = 1 (plus the null-space shrinkage
// penalty).  Deterministic in (x, spec).
BasisBlock build_basis(const Eigen::VectorXd& x, const BasisSpec& spec);

// Reparameterize so every column is orthogonal to the constant vector.  The
// result has one fewer column, congruently transformed penalties, and the
// same span once the constant vector is added back.
BasisBlock absorb_intercept(const BasisBlock& block);

// One penalty matrix applied to a column range of an expanded design.
struct GroupedPenalty {
  int offset = 0;            // first column within Z
  Eigen::MatrixXd S;
  int lambda_group = 0;      // penalties with equal ids share one lambda
  std::string role;          // "smooth", "null", "intercept"
};

struct GroupedSmooth {
  Eigen::SparseMatrix<double> Z;        // n x (L*p' [+ L intercept columns])
  std::vector<GroupedPenalty> penalties;
  int n_lambda_groups = 0;
  int per_level_cols = 0;
  int n_levels = 0;
  bool has_intercept_columns = false;   // factor smooth appends L of them
};

// Expand a centered basis block into a block-diagonal-by-level design.  All
// per-level copies of a penalty share one smoothing parameter.  Factor
// smooths append per-level intercept columns carrying an identity penalty
// with its own lambda; by-smooths leave random intercepts to the caller.
// Refuses uncentered blocks: per-level intercepts would be confounded with
// the smooth span (allow_uncentered exists so the defect can be demonstrated
// deliberately).
GroupedSmooth expand_grouped(const BasisBlock& block,
                             const std::vector<std::int32_t>& group,
                             int n_levels, SmoothMode mode,
                             bool allow_uncentered = false);

// Simultaneous diagonalization by congruence of two PSD matrices with PD sum:
// returns T with T^T*A*T = diag(d) and T^T*B*T = diag(1-d), d in [0,1].
// Used internally to make every smooth penalty diagonal before fitting.
struct DiagonalizedPair {
  Eigen::MatrixXd T;
  Eigen::VectorXd d;
};
DiagonalizedPair diagonalize_pair(const Eigen::MatrixXd& A,
                                  const Eigen::MatrixXd& B);

}  // namespace psmm
