#pragma once

// Tikhonov-regularized recovery of the orientation distribution from one
// diffraction frame: Pr = (K^T K + lambda E)^{-1} K^T I, with empirical
// conditioning diagnostics and an L-curve parameter scan.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qtomo {

enum class SolverBackend {
  normal_equations,  // LDLT of K^T K + lambda E
  augmented_qr,      // QR of [K; sqrt(lambda) E]
};

// Shares the factorization across frames solved at the same lambda.
class TikhonovSolver {
 public:
  TikhonovSolver(const Eigen::MatrixXd& kernel, double lambda,
                 SolverBackend backend = SolverBackend::normal_equations);

  Eigen::VectorXd solve(const Eigen::VectorXd& frame) const;
  double lambda() const { return lambda_; }

 private:
  Eigen::MatrixXd kernel_;
  double lambda_ = 0.0;
  SolverBackend backend_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

// One-shot convenience wrapper. Throws "singular system" when lambda = 0 and
// K^T K is rank-deficient. Negative entries in the result are expected and
// left alone; positivity belongs to the later reconstruction stages.
Eigen::VectorXd tikhonov_solve(const Eigen::MatrixXd& kernel,
                               const Eigen::VectorXd& frame, double lambda,
                               SolverBackend backend =
                                   SolverBackend::normal_equations);

struct ConditionEstimate {
  double mean = 0.0;
  double spread = 0.0;  // sample standard deviation across trials
};

// Empirical condition number: relative response of the solution to seeded
// relative perturbations of the frame,
//   cond = (|dPr| / |Pr|) / (|dI| / |I|),
// averaged over `trials` Gaussian noise realizations of size noise_rel.
ConditionEstimate condition_number(const Eigen::MatrixXd& kernel,
                                   const Eigen::VectorXd& frame, double lambda,
                                   double noise_rel, int trials,
                                   std::uint64_t seed);

struct RegularizationReport {
  std::vector<double> lambda_grid;
  std::vector<double> residual_norms;   // |I - K Pr|^2
  std::vector<double> solution_norms;   // |Pr|^2
  std::vector<double> condition_numbers;  // empty unless trials requested
  double selected_lambda = 0.0;
  double turning_point_lambda = 0.0;
  // Flat L-curve: no usable corner, selection fell back to the smallest
  // lambda.
  bool curvature_degenerate = false;
};

// Solves the frame on every lambda of a log-spaced grid and locates the
// L-curve corner by maximum Menger curvature of the
// (log residual^2, log solution^2) polyline. The corner detector is a
// heuristic stand-in for visual inspection. cond_trials > 0 adds empirical
// condition numbers (noise_rel 1e-3, seeded from `seed`).
RegularizationReport l_curve_scan(const Eigen::MatrixXd& kernel,
                                  const Eigen::VectorXd& frame,
                                  const std::vector<double>& lambda_grid,
                                  int cond_trials = 0,
                                  std::uint64_t seed = 12345);

std::vector<double> log_spaced_grid(double lo, double hi, int count);

}  // namespace qtomo
