#include <Eigen/Dense>
#include <cmath>

#include "scar/armodel.hpp"
#include "scar/rational.hpp"

namespace scar::armodel {

namespace {

Complex series_mean(const TimeSeries& s) {
  Complex acc(0.0, 0.0);
  for (const auto& v : s.values) acc += v;
  return acc / static_cast<double>(s.size());
}

struct Design {
  Eigen::MatrixXcd x;   // (M-p) x p lagged rows, mean removed
  Eigen::VectorXcd y;   // targets minus the u_m column, mean removed
  Complex mean;
};

Design build_design(const TimeSeries& series, int p) {
  const long m = static_cast<long>(series.size());
  if (m <= 2 * p) throw Error("fit: series too short (need M > 2p)");
  const Complex mean = series_mean(series);
  const long rows = m - p;
  Design d;
  d.mean = mean;
  d.x.resize(rows, p);
  d.y.resize(rows);
  for (long r = 0; r < rows; ++r) {
    for (int j = 0; j < p; ++j) d.x(r, j) = series.values[static_cast<size_t>(r + j)] - mean;
    // y - X e_p: the next value minus the current one, both mean-removed
    d.y(r) = (series.values[static_cast<size_t>(r + p)] - mean) -
             (series.values[static_cast<size_t>(r + p - 1)] - mean);
  }
  return d;
}

FitResult assemble(const TimeSeries& series, int p, const Eigen::VectorXcd& a,
                   const Design& d, bool constrained, double condition) {
  const long rows = d.x.rows();
  const Eigen::VectorXcd resid = d.y - d.x * a;
  const double q_hat = resid.squaredNorm() / static_cast<double>(rows);
  const double m = static_cast<double>(series.size());

  FitResult out;
  out.model.p = p;
  out.model.coeffs.assign(a.data(), a.data() + p);
  out.model.forcing = Complex(0.0, 0.0);
  out.model.mean_offset = d.mean;
  out.model.noise_variance = q_hat;
  out.model.dt = series.dt;
  out.model.provenance = constrained ? Provenance::ConstrainedYuleWalker : Provenance::YuleWalker;
  out.diagnostics.residual_variance = q_hat;
  out.diagnostics.aic_value = q_hat * (m + p) / (m - p);
  out.diagnostics.constrained = constrained;
  out.diagnostics.condition_estimate = condition;
  return out;
}

}  // namespace

FitResult yule_walker_fit(const TimeSeries& series, int p) {
  if (p < 1) throw Error("fit: order must be >= 1");
  const Design d = build_design(series, p);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(d.x);
  qr.setThreshold(1e-12);
  if (qr.rank() < p) throw Error("degenerate design matrix");
  const Eigen::VectorXcd a = qr.solve(d.y);
  const auto& rdiag = qr.matrixR().diagonal();
  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    dmax = std::max(dmax, std::abs(rdiag(i)));
    dmin = std::min(dmin, std::abs(rdiag(i)));
  }
  return assemble(series, p, a, d, false, dmin > 0 ? dmax / dmin : std::numeric_limits<double>::infinity());
}

FitResult constrained_yule_walker_fit(const TimeSeries& series, int p, Complex lambda) {
  if (p < 3) throw Error("fit: constrained fit needs p >= 3");
  const Design d = build_design(series, p);
  // constraints: sum_j a_j = lambda dt and 2 sum_j (j-p) a_j = lambda dt
  Eigen::MatrixXcd c(2, p);
  for (int j = 1; j <= p; ++j) {
    c(0, j - 1) = 1.0;
    c(1, j - 1) = 2.0 * static_cast<double>(j - p);
  }
  Eigen::VectorXcd rhs_c(2);
  rhs_c(0) = lambda * series.dt;
  rhs_c(1) = lambda * series.dt;

  // KKT system for min ||y - Xa|| s.t. Ca = d
  Eigen::MatrixXcd kkt = Eigen::MatrixXcd::Zero(p + 2, p + 2);
  kkt.topLeftCorner(p, p) = d.x.adjoint() * d.x;
  kkt.topRightCorner(p, 2) = c.adjoint();
  kkt.bottomLeftCorner(2, p) = c;
  Eigen::VectorXcd rhs(p + 2);
  rhs.head(p) = d.x.adjoint() * d.y;
  rhs.tail(2) = rhs_c;

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(kkt);
  if (!lu.isInvertible()) throw Error("constraint degeneracy");
  const Eigen::VectorXcd sol = lu.solve(rhs);
  const Eigen::VectorXcd a = sol.head(p);
  const double residual_check = (c * a - rhs_c).norm();
  if (!(residual_check < 1e-8)) throw Error("constraint degeneracy");
  FitResult out = assemble(series, p, a, d, true, 1.0 / lu.rcond());
  return out;
}

AicSelection aic_select(const TimeSeries& series, int p_max) {
  if (p_max < 1) throw Error("aic_select: p_max must be >= 1");
  if (static_cast<double>(p_max) >= static_cast<double>(series.size()) / 4.0)
    throw Error("p_max too large");
  AicSelection out;
  double best = std::numeric_limits<double>::infinity();
  for (int p = 1; p <= p_max; ++p) {
    try {
      const FitResult fit = yule_walker_fit(series, p);
      out.table.emplace_back(p, fit.diagnostics.aic_value);
      if (fit.diagnostics.aic_value < best) {
        best = fit.diagnostics.aic_value;
        out.chosen_p = p;
      }
    } catch (const Error&) {
      // skip orders whose fit fails
    }
  }
  if (out.table.empty()) throw Error("aic_select: every order failed to fit");
  return out;
}

MsmParameters msm_parameters(double energy, Complex correlation_time) {
  if (!(energy > 0)) throw Error("msm: nonpositive energy");
  if (correlation_time == Complex(0.0, 0.0)) throw Error("msm: zero correlation time");
  Complex lambda = 1.0 / correlation_time;
  // decaying autocorrelation integrates to -1/lambda; fix the sign so the
  // continuous dynamics decay
  if (lambda.real() > 0) lambda = -lambda;
  if (!(lambda.real() < 0)) throw Error("msm: correlation time implies neutral dynamics");
  MsmParameters out;
  out.lambda = lambda;
  out.sigma = std::sqrt(2.0 * std::abs(lambda.real()) * energy);
  return out;
}

}  // namespace scar::armodel
