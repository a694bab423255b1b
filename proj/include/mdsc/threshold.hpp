#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mdsc/density_evolution.hpp"
#include "mdsc/ensemble.hpp"

namespace mdsc {

/// Fixed point of the uncoupled recursion x <- eps (1 - (1-x)^(dr-1))^(dl-1),
/// iterated from x = eps. Returns 0 when the iteration decodes (x falls
/// below 1e-10), otherwise the converged positive fixed point.
double scalar_de_fixed_point(int dl, int dr, double eps, double tol = 1e-12,
                             long max_iters = 1000000);

struct BisectionSpec {
  double lo = 0.0;
  double hi = 1.0;
  double tol_eps = 1e-4;  // threshold resolution
  DEBudget de_budget{};
};

struct ThresholdResult {
  double eps_star = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int evaluations = 0;
  bool unrecoverable_at_zero = false;  // even eps = 0 fails (bursts cannot be recovered)
  int L_used = 0;                      // set by the doubling-rule search
  bool L_converged = true;             // false if the doubling rule hit its cap
};

std::string format_threshold_result(const ThresholdResult& r);

/// BP threshold of the uncoupled (dl, dr) ensemble by bisection on the
/// scalar recursion.
ThresholdResult uncoupled_bp_threshold(int dl, int dr, double tol_eps = 1e-4);

/// Thrown when a bisection bracket is invalid (lo does not decode or hi
/// decodes); carries both endpoint verdicts.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& msg, DEVerdict at_lo, DEVerdict at_hi)
      : std::runtime_error(msg), verdict_lo(at_lo), verdict_hi(at_hi) {}
  DEVerdict verdict_lo;
  DEVerdict verdict_hi;
};

/// BP threshold of the coupled ensemble: bisection of the base erasure with
/// burst sections pinned at eps = 1 and Z at 0. If the bursts cannot be
/// recovered even at base eps = 0, returns eps_star = 0 with
/// unrecoverable_at_zero set.
ThresholdResult coupled_bp_threshold(const EnsembleParams& params,
                                     const ShorteningDomain& domain,
                                     const std::vector<TorusIndex>& bursts,
                                     const BisectionSpec& spec);

enum class BurstBoundVerdict { ProvablyUnrecoverable, BoundInconclusive };

const char* to_string(BurstBoundVerdict v);

/// One-directional bound: a single burst section of erasure eps_burst is
/// provably unrecoverable when eps_burst > eps_bp(dl, dr) * w^D.
BurstBoundVerdict single_burst_bound(int dl, int dr, int w, int D, double eps_burst,
                                     double tol_eps = 1e-6);

/// Burst placement for a given grid; re-invoked at every L of the doubling rule.
using BurstPlacer = std::function<std::vector<TorusIndex>(const GridShape&)>;

/// Coupled threshold with L chosen by doubling: starting from
/// L = 4 w (bursts + 1), L doubles until consecutive thresholds agree within
/// tol_eps (sizes too small for the domain are skipped). Returns the last
/// result plus the (L, eps_star) history.
struct DoublingThreshold {
  ThresholdResult result;
  std::vector<std::pair<int, double>> history;
};
DoublingThreshold coupled_threshold_auto(int dl, int dr, int D, int w,
                                         const ShorteningDomain& domain, int burst_count,
                                         const BurstPlacer& placer, const BisectionSpec& spec,
                                         int L_max = 1024);

}  // namespace mdsc
