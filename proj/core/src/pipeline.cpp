#include "scar/pipeline.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "scar/real_roots.hpp"

namespace scar::pipeline {

using algebra::EliminationBudget;
using algebra::Interval;
using algebra::Polynomial;
using algebra::Rational;
using algebra::RealPoint;

PipelineOptions PipelineOptions::from_env() {
  PipelineOptions opts;
  if (const char* s = std::getenv("SCAR_BUDGET_SECS")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v >= 0) opts.symbolic_seconds = v;
  }
  return opts;
}

ConsistentFamily consistency_family(Complex lambda) { return ConsistentFamily(lambda); }

namespace {

// ascending monic coefficients of -Pi for the family member:
// x^3 - (1+a3) x^2 - a2 x - a1
std::array<Complex, 3> member_poly(Complex lambda, Complex s, double dt) {
  const Complex ld = lambda * dt;
  const Complex a1 = (s - 1.5) * ld;
  const Complex a2 = -(2.0 * s - 2.5) * ld;
  const Complex a3 = s * ld;
  return {-a1, -a2, -(1.0 + a3)};
}

// Schur-Cohn test: all roots of the monic polynomial strictly inside the
// unit disc. coeffs are ascending below the (implicit) monic top.
bool schur_strictly_stable(std::vector<Complex> c) {
  c.push_back(Complex(1.0, 0.0));
  while (c.size() > 1) {
    const size_t n = c.size() - 1;
    const Complex top = c[n], bottom = c[0];
    if (!(std::abs(bottom) < std::abs(top))) return false;
    std::vector<Complex> next(n);
    for (size_t i = 0; i < n; ++i)
      next[i] = std::conj(top) * c[i + 1] - bottom * std::conj(c[n - 1 - i]);
    c = std::move(next);
  }
  return true;
}

// Compiled double-precision evaluator for an exact polynomial over the
// variables (alpha, beta, dt).
struct SurfaceEval {
  struct Term {
    double coef;
    unsigned ea, eb, et;
  };
  std::vector<Term> terms;
  unsigned max_ea = 0, max_eb = 0, max_et = 0;

  explicit SurfaceEval(const Polynomial& p) {
    const auto& vars = p.variables();
    int ia = -1, ib = -1, it = -1;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "alpha") ia = static_cast<int>(i);
      else if (vars[i] == "beta") ib = static_cast<int>(i);
      else if (vars[i] == "dt") it = static_cast<int>(i);
      else throw Error("surface evaluator: unexpected variable " + vars[i]);
    }
    for (const auto& [m, c] : p.terms()) {
      Term t{algebra::to_double(c), 0, 0, 0};
      if (ia >= 0) t.ea = m[static_cast<size_t>(ia)];
      if (ib >= 0) t.eb = m[static_cast<size_t>(ib)];
      if (it >= 0) t.et = m[static_cast<size_t>(it)];
      max_ea = std::max(max_ea, t.ea);
      max_eb = std::max(max_eb, t.eb);
      max_et = std::max(max_et, t.et);
      terms.push_back(t);
    }
  }

  double operator()(double a, double b, double t) const {
    double pa[32], pb[32], pt[32];
    pa[0] = pb[0] = pt[0] = 1.0;
    for (unsigned k = 1; k <= max_ea; ++k) pa[k] = pa[k - 1] * a;
    for (unsigned k = 1; k <= max_eb; ++k) pb[k] = pb[k - 1] * b;
    for (unsigned k = 1; k <= max_et; ++k) pt[k] = pt[k - 1] * t;
    double acc = 0.0;
    for (const auto& term : terms) acc += term.coef * pa[term.ea] * pb[term.eb] * pt[term.et];
    return acc;
  }
};

struct ContactScan {
  std::optional<double> first_unstable;  // bisected transversal crossing
};

ContactScan scan_stability(Complex lambda, Complex s) {
  const double scale = 1.0 / std::abs(lambda);
  const auto stable = [&](double t) {
    const auto c = member_poly(lambda, s, t);
    return schur_strictly_stable({c[0], c[1], c[2]});
  };
  double t_lo = 1e-7 * scale;
  if (!stable(t_lo)) {
    t_lo = 1e-12 * scale;
    if (!stable(t_lo)) return {};  // not stable even arbitrarily close to 0
  }
  const double t_max = 1e4 * scale;
  double prev = t_lo;
  double t = t_lo;
  bool found = false;
  while (t < t_max) {
    t *= 1.03;
    if (!stable(t)) {
      found = true;
      break;
    }
    prev = t;
  }
  if (!found) return {};
  double lo = prev, hi = t;
  for (int i = 0; i < 200 && (hi - lo) > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (stable(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi)};
}

}  // namespace

double max_root_modulus(Complex lambda, Complex s, double dt) {
  const auto c = member_poly(lambda, s, dt);
  double mm = 0.0;
  for (const auto& root : armodel::monic_roots({c[0], c[1], c[2]}))
    mm = std::max(mm, std::abs(root));
  return mm;
}

bool member_is_stable(Complex lambda, Complex s, double dt) {
  const auto c = member_poly(lambda, s, dt);
  return schur_strictly_stable({c[0], c[1], c[2]});
}

std::optional<double> first_boundary_contact(Complex lambda, Complex s,
                                             const std::vector<double>& slice_roots) {
  const ContactScan scan = scan_stability(lambda, s);
  // exact slice roots below the transversal crossing may be tangential
  // contacts; accept those whose member truly touches the circle
  double best = scan.first_unstable ? *scan.first_unstable : std::numeric_limits<double>::infinity();
  for (const double t : slice_roots) {
    if (!(t > 0) || t >= best) continue;
    if (std::abs(max_root_modulus(lambda, s, t) - 1.0) <= 1e-6) best = std::min(best, t);
  }
  if (!std::isfinite(best)) return std::nullopt;
  return best;
}

std::vector<RealPoint> singular_points_exact(const Polynomial& r, const EliminationBudget& budget) {
  const std::vector<Polynomial> system{r, r.derivative("alpha"), r.derivative("beta"),
                                       r.derivative("dt")};
  const auto j = algebra::groebner_elimination(system, {"dt"}, budget);
  if (j.empty()) return {};
  const auto components = algebra::decompose_zero_dimensional(j, budget);
  std::vector<RealPoint> w;
  for (const auto& comp : components) {
    if (comp.dimension != 0) continue;  // curve components excluded
    for (auto& pt : algebra::real_solve(comp, Rational(1, 10000000000L), budget))
      w.push_back(std::move(pt));
  }
  return w;
}

namespace {

struct NumericSystem {
  SurfaceEval r, ra, rb, rt;
  SurfaceEval raa, rab, rat, rbb, rbt, rtt;

  explicit NumericSystem(const Polynomial& surface)
      : r(surface),
        ra(surface.derivative("alpha")),
        rb(surface.derivative("beta")),
        rt(surface.derivative("dt")),
        raa(surface.derivative("alpha").derivative("alpha")),
        rab(surface.derivative("alpha").derivative("beta")),
        rat(surface.derivative("alpha").derivative("dt")),
        rbb(surface.derivative("beta").derivative("beta")),
        rbt(surface.derivative("beta").derivative("dt")),
        rtt(surface.derivative("dt").derivative("dt")) {}

  Eigen::Vector4d residual(const Eigen::Vector3d& x) const {
    Eigen::Vector4d f;
    f << r(x[0], x[1], x[2]), ra(x[0], x[1], x[2]), rb(x[0], x[1], x[2]), rt(x[0], x[1], x[2]);
    return f;
  }

  Eigen::Matrix<double, 4, 3> jacobian(const Eigen::Vector3d& x) const {
    Eigen::Matrix<double, 4, 3> jac;
    const double a = x[0], b = x[1], t = x[2];
    jac << ra(a, b, t), rb(a, b, t), rt(a, b, t),
        raa(a, b, t), rab(a, b, t), rat(a, b, t),
        rab(a, b, t), rbb(a, b, t), rbt(a, b, t),
        rat(a, b, t), rbt(a, b, t), rtt(a, b, t);
    return jac;
  }
};

struct Converged {
  Eigen::Vector3d x;
  double residual_norm;
  double rank_ratio;  // sigma_min / sigma_max of the Jacobian
};

std::optional<Converged> gauss_newton(const NumericSystem& sys, Eigen::Vector3d x) {
  double mu = 1e-8;
  for (int iter = 0; iter < 120; ++iter) {
    const Eigen::Vector4d f = sys.residual(x);
    const Eigen::Matrix<double, 4, 3> jac = sys.jacobian(x);
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d jtf = jac.transpose() * f;
    Eigen::Matrix3d damped = jtj;
    damped.diagonal().array() += mu * (1.0 + jtj.diagonal().array().abs());
    const Eigen::Vector3d step = damped.ldlt().solve(-jtf);
    if (!step.allFinite()) return std::nullopt;
    const Eigen::Vector3d xn = x + step;
    const double fn = sys.residual(xn).norm();
    if (fn <= f.norm()) {
      x = xn;
      mu = std::max(mu * 0.3, 1e-14);
    } else {
      mu *= 10.0;
      if (mu > 1e8) break;
    }
    if (step.norm() < 1e-14 * (1.0 + x.norm()) && fn < 1e-8) break;
  }
  const Eigen::Vector4d f = sys.residual(x);
  if (!(f.norm() < 1e-8)) return std::nullopt;
  const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(sys.jacobian(x));
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(2);
  return Converged{x, f.norm(), smax > 0 ? smin / smax : 0.0};
}

}  // namespace

namespace {

// The distinguished singular point is where two boundary branches
// collide: the member's characteristic polynomial acquires a double root
// on the unit circle. Solving Pi(e^{i theta}) = Pi'(e^{i theta}) = 0 in
// (theta, alpha, beta, dt) is a square, well-conditioned system, unlike
// the flat polynomial surface itself.
struct CircleDoubleRoot {
  double theta, alpha, beta, dt;
  double residual;
};

std::optional<CircleDoubleRoot> solve_circle_double_root(Complex lambda, Complex s0, double t0) {
  // seed theta from the root configuration at (s0, t0)
  const auto c0 = member_poly(lambda, s0, t0);
  const auto roots = armodel::monic_roots({c0[0], c0[1], c0[2]});
  double theta = 0.0;
  {
    std::vector<Complex> near_circle;
    for (const auto& root : roots)
      if (std::abs(std::abs(root) - 1.0) < 0.25) near_circle.push_back(root);
    if (near_circle.empty()) return std::nullopt;
    if (near_circle.size() >= 2) {
      // the colliding pair is the closest pair near the circle
      double best = std::numeric_limits<double>::infinity();
      Complex mid;
      for (size_t i = 0; i < near_circle.size(); ++i)
        for (size_t j = i + 1; j < near_circle.size(); ++j) {
          const double d = std::abs(near_circle[i] - near_circle[j]);
          if (d < best) {
            best = d;
            mid = 0.5 * (near_circle[i] + near_circle[j]);
          }
        }
      theta = std::arg(mid);
    } else {
      theta = std::arg(near_circle.front());
    }
  }

  Eigen::Vector4d u(theta, s0.real(), s0.imag(), t0);
  const Complex iunit(0.0, 1.0);
  double fnorm = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 80; ++iter) {
    const Complex s(u[1], u[2]);
    const double t = u[3];
    const Complex x = std::exp(iunit * u[0]);
    const Complex lt = lambda * t;
    const Complex a1 = (s - 1.5) * lt;
    const Complex a2 = -(2.0 * s - 2.5) * lt;
    const Complex a3 = s * lt;
    const Complex p = a1 + a2 * x + (1.0 + a3) * x * x - x * x * x;
    const Complex px = a2 + 2.0 * (1.0 + a3) * x - 3.0 * x * x;
    const Complex pxx = 2.0 * (1.0 + a3) - 6.0 * x;

    const Complex f1_th = px * iunit * x;
    const Complex f2_th = pxx * iunit * x;
    const Complex omx = 1.0 - x;
    const Complex f1_a = lt * omx * omx;
    const Complex f2_a = 2.0 * lt * (x - 1.0);
    const Complex f1_b = iunit * f1_a;
    const Complex f2_b = iunit * f2_a;
    const Complex f1_t = t != 0.0 ? (a1 + a2 * x + a3 * x * x) / t : Complex(0, 0);
    const Complex f2_t = t != 0.0 ? (a2 + 2.0 * a3 * x) / t : Complex(0, 0);

    Eigen::Vector4d f;
    f << p.real(), p.imag(), px.real(), px.imag();
    fnorm = f.norm();
    Eigen::Matrix4d jac;
    jac << f1_th.real(), f1_a.real(), f1_b.real(), f1_t.real(),
        f1_th.imag(), f1_a.imag(), f1_b.imag(), f1_t.imag(),
        f2_th.real(), f2_a.real(), f2_b.real(), f2_t.real(),
        f2_th.imag(), f2_a.imag(), f2_b.imag(), f2_t.imag();
    const Eigen::Vector4d step = jac.fullPivLu().solve(-f);
    if (!step.allFinite()) return std::nullopt;
    u += step;
    if (step.norm() < 1e-14 * (1.0 + u.norm())) break;
  }
  const double scale = std::max(1.0, std::abs(lambda) * std::abs(u[3]));
  if (!(fnorm < 1e-9 * scale)) return std::nullopt;
  if (!(u[3] > 0)) return std::nullopt;
  return CircleDoubleRoot{u[0], u[1], u[2], u[3], fnorm};
}

// Derivative-free sharpening of a local maximum of the contact landscape
// by shrinking 3x3 grid search. The isolated singular points of the
// surface sit exactly at such maxima; plain root-following slides onto
// the self-intersection curve instead, so the maximum is located first.
struct RefinedMax {
  double alpha, beta, contact, cell;
};

RefinedMax refine_contact_maximum(Complex lambda, double a, double b, double c0, double h,
                                  double lo, double hi) {
  double best_a = a, best_b = b, best_c = c0;
  double step = h;
  for (int round = 0; round < 160 && step > 1e-7; ++round) {
    bool moved = false;
    for (int di = -1; di <= 1; ++di)
      for (int dk = -1; dk <= 1; ++dk) {
        if (di == 0 && dk == 0) continue;
        const double na = std::clamp(best_a + step * di, lo, hi);
        const double nb = std::clamp(best_b + step * dk, lo, hi);
        const auto scan = scan_stability(lambda, Complex(na, nb));
        if (scan.first_unstable && *scan.first_unstable > best_c) {
          best_a = na;
          best_b = nb;
          best_c = *scan.first_unstable;
          moved = true;
        }
      }
    if (!moved) step *= 0.5;
  }
  return {best_a, best_b, best_c, step};
}

}  // namespace

std::vector<RealPoint> singular_points_numeric(const Polynomial& r, Complex lambda,
                                               const PipelineOptions& opts) {
  const NumericSystem sys(r);
  const int n = opts.search_grid;
  const double lo = opts.search_lo, hi = opts.search_hi;
  const double h = (hi - lo) / (n - 1);

  // contact-time landscape over the scan box
  std::vector<std::vector<double>> contact(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), -1.0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex s(lo + h * i, lo + h * k);
      const auto scan = scan_stability(lambda, s);
      if (scan.first_unstable) contact[static_cast<size_t>(i)][static_cast<size_t>(k)] = *scan.first_unstable;
    }

  struct Found {
    Eigen::Vector3d x;
    double radius;
  };
  std::vector<Found> points;
  const auto add_point = [&](const Eigen::Vector3d& x, double radius) {
    for (auto& other : points)
      if ((other.x - x).norm() < 1e-5 * (1.0 + other.x.norm())) {
        if (radius < other.radius) other = {x, radius};
        return;
      }
    points.push_back({x, radius});
  };

  // landscape maxima (including box-edge cells), sharpened then polished
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double c = contact[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (c <= 0) continue;
      bool maximal = true;
      for (int di = -1; di <= 1 && maximal; ++di)
        for (int dk = -1; dk <= 1 && maximal; ++dk) {
          if (di == 0 && dk == 0) continue;
          const int ii = i + di, kk = k + dk;
          if (ii < 0 || kk < 0 || ii >= n || kk >= n) continue;
          if (contact[static_cast<size_t>(ii)][static_cast<size_t>(kk)] > c) maximal = false;
        }
      if (!maximal) continue;
      const RefinedMax m = refine_contact_maximum(lambda, lo + h * i, lo + h * k, c, h, lo, hi);
      const auto collision =
          solve_circle_double_root(lambda, Complex(m.alpha, m.beta), m.contact);
      if (collision &&
          std::hypot(collision->alpha - m.alpha, collision->beta - m.beta) < 0.3 * (1.0 + std::abs(m.alpha))) {
        add_point(Eigen::Vector3d(collision->alpha, collision->beta, collision->dt), 1e-11);
        continue;
      }
      const Eigen::Vector3d seed(m.alpha, m.beta, m.contact);
      const auto polished = gauss_newton(sys, seed);
      if (polished && polished->rank_ratio > 1e-6 && polished->x[2] > 0 &&
          (polished->x - seed).norm() < 1e3 * m.cell) {
        add_point(polished->x, 1e-9);
      } else {
        // keep the sharpened maximum itself; the polish slid away
        add_point(seed, 10.0 * m.cell);
      }
    }

  // blanket of on-surface seeds picks up isolated singular points that
  // are not landscape maxima
  const int coarse = 13;
  const double hc = (hi - lo) / (coarse - 1);
  for (int i = 0; i < coarse; ++i)
    for (int k = 0; k < coarse; ++k) {
      const Complex s(lo + hc * i, lo + hc * k);
      const auto scan = scan_stability(lambda, s);
      if (!scan.first_unstable) continue;
      const auto result = gauss_newton(sys, Eigen::Vector3d(s.real(), s.imag(), *scan.first_unstable));
      if (!result) continue;
      if (result->rank_ratio < 1e-6) continue;  // curve of singular points
      if (!(result->x[2] > 0)) continue;
      add_point(result->x, 1e-9);
    }

  std::sort(points.begin(), points.end(), [](const Found& a, const Found& b) {
    if (a.x[0] != b.x[0]) return a.x[0] < b.x[0];
    return a.x[1] < b.x[1];
  });

  std::vector<RealPoint> w;
  for (const auto& c : points) {
    const Rational ar = algebra::rational_from_double(c.x[0]);
    const Rational br = algebra::rational_from_double(c.x[1]);
    const Rational rad = algebra::rational_from_double(std::max(c.radius, 1e-9));
    RealPoint pt;
    pt.coordinates["alpha"] = Interval(ar - rad, ar + rad);
    pt.coordinates["beta"] = Interval(br - rad, br + rad);
    w.push_back(std::move(pt));
  }
  return w;
}

std::vector<RealPoint> singular_points(const Polynomial& r, Complex lambda,
                                       const PipelineOptions& opts, std::string* method_out) {
  std::vector<RealPoint> w;
  std::string method = "numeric";
  if (opts.allow_exact) {
    EliminationBudget budget;
    budget.seconds = opts.symbolic_seconds;
    budget.max_basis = opts.symbolic_max_basis;
    budget.max_poly_terms = opts.symbolic_max_terms;
    try {
      w = singular_points_exact(r, budget);
      method = "exact";
    } catch (const algebra::BudgetExceeded&) {
      w.clear();
    }
  }
  if (w.empty() && opts.allow_numeric) {
    w = singular_points_numeric(r, lambda, opts);
    method = "numeric";
  }
  if (method_out) *method_out = method;
  if (w.empty()) throw Error("no singular candidates");
  return w;
}

Selection select_parameters(const Polynomial& r, const std::vector<RealPoint>& w, Complex lambda) {
  if (w.empty()) throw Error("select_parameters: empty candidate set");
  Selection sel;
  for (const auto& pt : w) {
    const auto ia = pt.coordinates.find("alpha");
    const auto ib = pt.coordinates.find("beta");
    if (ia == pt.coordinates.end() || ib == pt.coordinates.end())
      throw Error("select_parameters: candidate missing alpha/beta");
    const Rational am = ia->second.mid();
    const Rational bm = ib->second.mid();

    // exact positive roots of the dt-slice at the candidate
    std::vector<double> slice_roots;
    const Polynomial slice = r.substitute_values({{"alpha", am}, {"beta", bm}});
    if (!slice.is_zero() && !slice.is_constant()) {
      for (const auto& root :
           algebra::real_roots_univariate(slice, algebra::RootDomain::positive(), Rational(1, 1000000000000L)))
        slice_roots.push_back(algebra::to_double(root.mid()));
    }

    const Complex s(algebra::to_double(am), algebra::to_double(bm));
    const auto contact = first_boundary_contact(lambda, s, slice_roots);
    if (!contact) continue;  // no admissible stability interval at this candidate
    Candidate cand;
    cand.point = pt;
    cand.dt_bar = *contact;
    sel.candidates.push_back(std::move(cand));
  }
  if (sel.candidates.empty()) throw Error("no admissible candidate");

  const auto key = [](const Candidate& c) {
    const double a = c.point.value("alpha");
    const double b = c.point.value("beta");
    const long long q = llround(c.dt_bar / 1e-9);
    return std::make_tuple(-q, std::abs(Complex(a, b)), b, a);
  };
  std::sort(sel.candidates.begin(), sel.candidates.end(),
            [&](const Candidate& x, const Candidate& y) { return key(x) < key(y); });

  const Candidate& best = sel.candidates.front();
  sel.s_hat = Complex(best.point.value("alpha"), best.point.value("beta"));
  sel.dt_hat = best.dt_bar;
  return sel;
}

StabilityReport verify_stability_margin(const SCARCertificate& cert, int n_samples) {
  if (n_samples < 2) throw Error("verify_stability_margin: need at least 2 samples");
  StabilityReport report;
  for (int i = 1; i <= n_samples; ++i) {
    const double dt = cert.dt_hat * static_cast<double>(i) / static_cast<double>(n_samples + 1);
    const double mm = max_root_modulus(cert.lambda, cert.s_hat, dt);
    report.sampled_dts.push_back(dt);
    report.max_root_moduli.push_back(mm);
    if (!(mm < 1.0))
      throw Error("certificate refuted at dt = " + std::to_string(dt));
  }
  report.boundary_modulus_at_dt_hat = max_root_modulus(cert.lambda, cert.s_hat, cert.dt_hat);
  if (std::abs(report.boundary_modulus_at_dt_hat - 1.0) > 1e-6)
    throw Error("certificate refuted at dt_hat: boundary modulus " +
                std::to_string(report.boundary_modulus_at_dt_hat));
  return report;
}

SCARCertificate build_certificate(Complex lambda, const PipelineOptions& opts) {
  consistency_family(lambda);  // validates Re(lambda) < 0
  const algebra::ComplexRational lambda_q =
      algebra::rationalize_complex(lambda, opts.rationalize_denominator);

  SCARCertificate cert;
  cert.lambda = lambda;
  cert.tool_version = "scarkit 0.1.0";
  cert.budgets = opts;
  cert.r_surface = boundary_surface(lambda_q);

  const auto w = singular_points(cert.r_surface, lambda, opts, &cert.method);
  const Selection sel = select_parameters(cert.r_surface, w, lambda);
  cert.s_hat = sel.s_hat;
  cert.dt_hat = sel.dt_hat;
  cert.candidates = sel.candidates;
  cert.oracle_report = verify_stability_margin(cert, opts.oracle_samples);
  return cert;
}

armodel::ARModel model_from_certificate(const SCARCertificate& cert, double sigma, double dt) {
  if (!(dt > 0) || !(dt < cert.dt_hat))
    throw Error("requested step outside stable-consistent interval");
  if (!(sigma >= 0)) throw Error("model_from_certificate: sigma must be nonnegative");
  const ConsistentFamily family(cert.lambda);
  const auto a = family.coefficients(cert.s_hat, dt);
  armodel::ARModel model;
  model.p = 3;
  model.coeffs = {a[0], a[1], a[2]};
  model.forcing = Complex(0.0, 0.0);
  model.noise_variance = sigma * sigma * dt;
  model.dt = dt;
  model.provenance = armodel::Provenance::Scar;

  const auto stability = armodel::is_stable(model);
  if (!stability.stable)
    throw Error("certificate refuted: constructed model unstable at dt = " + std::to_string(dt));
  const auto consistency = armodel::is_consistent(model, cert.lambda, 2, 1e-9);
  if (!consistency.consistent)
    throw Error("construct_scar3: consistency identities violated");
  return model;
}

ScarConstruction construct_scar3(Complex lambda, double sigma, std::optional<double> dt,
                                 const PipelineOptions& opts) {
  ScarConstruction out;
  out.certificate = build_certificate(lambda, opts);
  const double step = dt ? *dt : out.certificate.dt_hat / 2.0;
  out.model = model_from_certificate(out.certificate, sigma, step);
  return out;
}

}  // namespace scar::pipeline
