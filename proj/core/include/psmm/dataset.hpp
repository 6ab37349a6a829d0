#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace psmm {

// Per-subject ground truth kept by the generators so that tests can audit a
// dataset without refitting anything.
struct SubjectTruth {
  double intercept = 0.0;       // b_i
  double fw_slope = 0.0;        // s_i, multiplies the F_w=B indicator
  double amplitude = 0.0;       // alpha_i (sine generators)
  double phase = 0.0;           // phi_i
  Eigen::VectorXd weights;      // basis weights (wiggly generator)
};

// Long-format trial data: one row per (subject, trial).  Factors are stored
// as 0/1 codes: factor_within A=0/B=1, factor_between X=0/Y=1.
struct LongDataset {
  std::vector<std::int32_t> subject;   // 0-based subject index
  std::vector<std::int32_t> trial;     // 0-based trial index within subject
  std::vector<double> time;
  std::vector<std::uint8_t> fw;
  std::vector<std::uint8_t> fb;
  std::vector<double> y;

  // Latent bookkeeping (filled by generators, empty for data read from CSV):
  std::vector<double> latent;          // time-varying component per row
  std::vector<double> noise;           // the exact epsilon draws
  std::vector<SubjectTruth> truth;     // per subject

  int n_subjects = 0;
  int n_trials = 0;

  std::size_t n_rows() const { return y.size(); }
  bool has_truth() const { return !latent.empty(); }

  void reserve_rows(std::size_t n);
  void check_consistent() const;  // throws DataError on broken invariants
};

// FNV-1a over the observable columns; used to verify that every model in a
// study replicate consumed the identical dataset.
std::uint64_t dataset_hash(const LongDataset& d);

// CSV with header subject,trial,time,factor_within,factor_between,response.
// subject is written 1-based, factors as single characters A/B/X/Y.  Lines
// starting with '#' are metadata comments and are skipped on read.
// include_latent appends latent,subject_intercept,subject_slope,noise.
void write_csv(std::ostream& os, const LongDataset& d,
               bool include_latent = false);
LongDataset read_csv(std::istream& is, const std::string& origin = "<stream>");

void write_csv_file(const std::string& path, const LongDataset& d,
                    bool include_latent = false,
                    const std::string& header_comment = "");
LongDataset read_csv_file(const std::string& path);

}  // namespace psmm
