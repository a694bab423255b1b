#include "mdsc/threshold.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mdsc {

double scalar_de_fixed_point(int dl, int dr, double eps, double tol, long max_iters) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps must lie in [0, 1]");
  if (dl < 2 || dr <= dl) throw std::invalid_argument("need dl >= 2 and dr > dl");
  double x = eps;
  for (long it = 0; it < max_iters; ++it) {
    const double xn = eps * int_pow(1.0 - int_pow(1.0 - x, dr - 1), dl - 1);
    if (xn < 1e-10) return 0.0;
    if (std::abs(xn - x) < tol) return xn;
    x = xn;
  }
  return x;
}

std::string format_threshold_result(const ThresholdResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "eps_star=%.12g lo=%.12g hi=%.12g evaluations=%d L_used=%d "
                "unrecoverable_at_zero=%d L_converged=%d",
                r.eps_star, r.lo, r.hi, r.evaluations, r.L_used,
                r.unrecoverable_at_zero ? 1 : 0, r.L_converged ? 1 : 0);
  return buf;
}

ThresholdResult uncoupled_bp_threshold(int dl, int dr, double tol_eps) {
  if (tol_eps <= 0.0) throw std::invalid_argument("tol_eps must be positive");
  double lo = 0.0, hi = 1.0;
  int evals = 0;
  while (hi - lo > tol_eps) {
    const double mid = 0.5 * (lo + hi);
    ++evals;
    if (scalar_de_fixed_point(dl, dr, mid) == 0.0)
      lo = mid;
    else
      hi = mid;
  }
  ThresholdResult r;
  r.eps_star = 0.5 * (lo + hi);
  r.lo = lo;
  r.hi = hi;
  r.evaluations = evals;
  return r;
}

ThresholdResult coupled_bp_threshold(const EnsembleParams& params,
                                     const ShorteningDomain& domain,
                                     const std::vector<TorusIndex>& bursts,
                                     const BisectionSpec& spec) {
  if (!(0.0 <= spec.lo && spec.lo < spec.hi && spec.hi <= 1.0))
    throw std::invalid_argument("bisection bracket must satisfy 0 <= lo < hi <= 1");
  if (spec.tol_eps <= 0.0) throw std::invalid_argument("tol_eps must be positive");

  auto verdict_at = [&](double eps) {
    ErasurePattern pattern{eps, bursts, domain};
    return run_de(params, pattern, spec.de_budget).verdict;
  };

  int evals = 0;
  const DEVerdict at_lo = (++evals, verdict_at(spec.lo));
  if (at_lo != DEVerdict::Decoded) {
    if (spec.lo == 0.0) {
      ThresholdResult r;
      r.eps_star = 0.0;
      r.lo = 0.0;
      r.hi = 0.0;
      r.evaluations = evals;
      r.unrecoverable_at_zero = true;
      r.L_used = params.L;
      return r;
    }
    const DEVerdict at_hi = (++evals, verdict_at(spec.hi));
    std::ostringstream os;
    os << "bisection bracket rejected: lo=" << spec.lo << " -> " << to_string(at_lo)
       << ", hi=" << spec.hi << " -> " << to_string(at_hi);
    throw BracketError(os.str(), at_lo, at_hi);
  }
  const DEVerdict at_hi = (++evals, verdict_at(spec.hi));
  if (at_hi == DEVerdict::Decoded) {
    std::ostringstream os;
    os << "bisection bracket rejected: hi=" << spec.hi << " decodes (lo="
       << spec.lo << " -> " << to_string(at_lo) << ")";
    throw BracketError(os.str(), at_lo, at_hi);
  }

  double lo = spec.lo, hi = spec.hi;
  while (hi - lo > spec.tol_eps) {
    const double mid = 0.5 * (lo + hi);
    ++evals;
    if (verdict_at(mid) == DEVerdict::Decoded)
      lo = mid;
    else
      hi = mid;
  }
  ThresholdResult r;
  r.eps_star = 0.5 * (lo + hi);
  r.lo = lo;
  r.hi = hi;
  r.evaluations = evals;
  r.L_used = params.L;
  return r;
}

const char* to_string(BurstBoundVerdict v) {
  return v == BurstBoundVerdict::ProvablyUnrecoverable ? "ProvablyUnrecoverable"
                                                       : "BoundInconclusive";
}

BurstBoundVerdict single_burst_bound(int dl, int dr, int w, int D, double eps_burst,
                                     double tol_eps) {
  if (eps_burst < 0.0 || eps_burst > 1.0)
    throw std::invalid_argument("eps_burst must lie in [0, 1]");
  const double eps_bp = uncoupled_bp_threshold(dl, dr, tol_eps).eps_star;
  const double wD = int_pow(static_cast<double>(w), D);
  return eps_burst > eps_bp * wD ? BurstBoundVerdict::ProvablyUnrecoverable
                                 : BurstBoundVerdict::BoundInconclusive;
}

DoublingThreshold coupled_threshold_auto(int dl, int dr, int D, int w,
                                         const ShorteningDomain& domain, int burst_count,
                                         const BurstPlacer& placer, const BisectionSpec& spec,
                                         int L_max) {
  DoublingThreshold out;
  bool have_prev = false;
  double prev = 0.0;
  for (int L = 4 * w * (burst_count + 1); L <= L_max; L *= 2) {
    const GridShape shape(D, L);
    try {
      domain.validate(shape);
    } catch (const std::invalid_argument&) {
      continue;  // domain does not fit yet (e.g. hypercube z >= L)
    }
    EnsembleParams params(dl, dr, L, D, w);
    const std::vector<TorusIndex> bursts = placer ? placer(shape) : std::vector<TorusIndex>{};
    ThresholdResult r = coupled_bp_threshold(params, domain, bursts, spec);
    out.history.emplace_back(L, r.eps_star);
    out.result = r;
    if (have_prev && std::abs(r.eps_star - prev) < spec.tol_eps) return out;
    have_prev = true;
    prev = r.eps_star;
  }
  out.result.L_converged = false;
  return out;
}

}  // namespace mdsc
