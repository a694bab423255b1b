#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mdsc/ensemble.hpp"
#include "mdsc/torus_grid.hpp"

namespace mdsc {

/// Per-section channel erasure probabilities: base erasure everywhere,
/// 1 at burst sections, 0 on the shortening domain. A burst inside the
/// shortening domain is rejected (a shortened section is known perfectly).
struct ErasurePattern {
  double base_eps = 0.0;
  std::vector<TorusIndex> bursts;
  ShorteningDomain domain = ShorteningDomain::empty();
};

/// Materialized erasure field of a pattern on the given shape.
ScalarField materialize(const ErasurePattern& pattern, const GridShape& shape);

/// One density-evolution state: bit-to-check erasure probabilities p,
/// check-to-bit erasure probabilities q, at iteration `iter`.
struct DEState {
  EnsembleParams params;
  ScalarField eps;              // per-section channel erasure, 0 on Z
  std::int64_t shortened_count; // #Z
  ScalarField p;
  ScalarField q;
  long iter = 0;
};

DEState init_state(const EnsembleParams& params, const ErasurePattern& pattern);

/// State from an explicit erasure field (tests and reductions use non-0/1
/// burst levels); shortened_count feeds the P_b normalizer.
DEState init_state(const EnsembleParams& params, ScalarField eps_field,
                   std::int64_t shortened_count);

/// q_i = 1 - (1 - sum_j w_j p_{i-j})^(dr-1), evaluated on every section.
ScalarField check_update(const DEState& state);

/// p_i = eps_i * (sum_j w_j q_{i+j})^(dl-1); exactly 0 on Z since eps_i = 0.
ScalarField bit_update(const DEState& state, const ScalarField& q);

/// Two-phase step: q from the previous p, then p from that q. Returns the
/// advanced state; the input is unchanged.
DEState de_step(const DEState& state);

/// P_b = (1/(L^D - #Z)) sum_i eps_i (sum_j w_j q_{i+j})^dl  (exponent dl:
/// the decision uses all incoming messages).
double decoding_erasure_probability(const DEState& state);

enum class DEVerdict { Decoded, Stalled, IterLimit };

const char* to_string(DEVerdict v);

struct DEOutcome {
  DEVerdict verdict;
  double final_pb;
  long iters_used;
  double residual_delta;  // last max-norm change of p
};

struct DEBudget {
  long max_iters = 50000;
  double tol_success = 1e-10;  // P_b below this counts as decoded
  double tol_stall = 1e-12;    // max-norm change of p below this is a stall
};

struct TracePoint {
  long iter;
  double pb;
  double delta_max;
};

/// Optional per-iteration record of a run; snapshots are taken at the
/// requested iterations plus the final state.
struct DETrace {
  std::vector<TracePoint> points;
  std::vector<std::pair<long, ScalarField>> snapshots;
  ScalarField final_p{GridShape(1, 1), DenseArray<double>::Zero(1)};
};

DEOutcome run_de(const EnsembleParams& params, const ErasurePattern& pattern,
                 const DEBudget& budget, DETrace* trace = nullptr,
                 std::span<const long> snapshot_iters = {});

DEOutcome run_de(DEState state, const DEBudget& budget, DETrace* trace = nullptr,
                 std::span<const long> snapshot_iters = {});

/// Default geometric snapshot schedule 0,1,2,4,... capped at max_iters.
std::vector<long> geometric_snapshot_schedule(long max_iters);

}  // namespace mdsc
