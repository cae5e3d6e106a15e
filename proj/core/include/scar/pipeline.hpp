#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scar/armodel.hpp"
#include "scar/boundary.hpp"
#include "scar/consistency.hpp"
#include "scar/groebner.hpp"
#include "scar/real_solve.hpp"

namespace scar::pipeline {

/// Knobs for certificate construction. The symbolic budget gates the
/// exact elimination path; on exhaustion the numeric path takes over.
/// SCAR_BUDGET_SECS overrides symbolic_seconds when set.
struct PipelineOptions {
  double symbolic_seconds = 10.0;
  size_t symbolic_max_basis = 96;
  size_t symbolic_max_terms = 60000;
  unsigned long rationalize_denominator = 1000000;
  double search_lo = -6.0;   // (alpha, beta) scan box
  double search_hi = 6.0;
  int search_grid = 49;      // scan resolution per axis
  int oracle_samples = 33;
  bool allow_exact = true;
  bool allow_numeric = true;

  static PipelineOptions from_env();
};

struct StabilityReport {
  std::vector<double> sampled_dts;
  std::vector<double> max_root_moduli;
  double boundary_modulus_at_dt_hat = 0.0;
};

struct Candidate {
  algebra::RealPoint point;  // coordinates "alpha", "beta"
  double dt_bar = 0.0;       // smallest positive boundary contact at the point
};

/// Output of the construction: the chosen family member, its guaranteed
/// step bound, and the evidence behind the choice.
struct SCARCertificate {
  Complex lambda{0.0, 0.0};
  Complex s_hat{0.0, 0.0};
  double dt_hat = 0.0;
  algebra::Polynomial r_surface;
  std::vector<Candidate> candidates;
  StabilityReport oracle_report;
  std::string tool_version;
  std::string method;  // "exact" or "numeric"
  PipelineOptions budgets;
};

/// The two-parameter consistent family; throws for Re(lambda) >= 0.
ConsistentFamily consistency_family(Complex lambda);

/// Largest root modulus of the family member's characteristic polynomial.
double max_root_modulus(Complex lambda, Complex s, double dt);

/// Strict Schur stability of the family member (all roots inside the
/// open unit disc), decided without root extraction.
bool member_is_stable(Complex lambda, Complex s, double dt);

/// Smallest positive dt at which the family member at s touches the
/// stability boundary; nullopt when no contact is found in the scan
/// range. `slice_roots` may supply exact candidate contact times.
std::optional<double> first_boundary_contact(Complex lambda, Complex s,
                                             const std::vector<double>& slice_roots = {});

/// Isolated real singular points of the surface, projected to the
/// (alpha, beta) plane: exact elimination route.
std::vector<algebra::RealPoint> singular_points_exact(const algebra::Polynomial& r,
                                                      const algebra::EliminationBudget& budget);

/// Numeric route: seeds from the contact-time landscape plus a coarse
/// grid, Gauss-Newton on {r = r_alpha = r_beta = r_dt = 0}, Jacobian-rank
/// classification to drop curve points, then clustering.
std::vector<algebra::RealPoint> singular_points_numeric(const algebra::Polynomial& r,
                                                        Complex lambda,
                                                        const PipelineOptions& opts);

/// Dispatch: exact within budget, numeric fallback. Throws
/// "no singular candidates" when both routes return nothing.
std::vector<algebra::RealPoint> singular_points(const algebra::Polynomial& r, Complex lambda,
                                                const PipelineOptions& opts, std::string* method_out = nullptr);

struct Selection {
  Complex s_hat{0.0, 0.0};
  double dt_hat = 0.0;
  std::vector<Candidate> candidates;  // scored, sorted by the maximin ranking
};

/// Maximin choice over the candidate set: per candidate, the smallest
/// positive contact time of r(alpha, beta, .) validated against the
/// stability oracle; the candidate with the largest such time wins.
/// Ties within 1e-9 break toward smaller |s|, then smaller beta, then
/// smaller alpha.
Selection select_parameters(const algebra::Polynomial& r, const std::vector<algebra::RealPoint>& w,
                            Complex lambda);

/// Whole-algorithm driver: surface, singular set, maximin selection,
/// stability oracle.
SCARCertificate build_certificate(Complex lambda, const PipelineOptions& opts = PipelineOptions::from_env());

/// Samples max root moduli on (0, dt_hat); throws "certificate refuted"
/// on any interior violation or when the boundary modulus at dt_hat is
/// not within 1e-6 of 1.
StabilityReport verify_stability_margin(const SCARCertificate& cert, int n_samples);

/// AR(3) model at the certified parameters with Q = sigma^2 dt.
armodel::ARModel model_from_certificate(const SCARCertificate& cert, double sigma, double dt);

struct ScarConstruction {
  armodel::ARModel model;
  SCARCertificate certificate;
};

/// Certificate plus model in one call; dt defaults to dt_hat/2.
ScarConstruction construct_scar3(Complex lambda, double sigma, std::optional<double> dt = std::nullopt,
                                 const PipelineOptions& opts = PipelineOptions::from_env());

}  // namespace scar::pipeline
