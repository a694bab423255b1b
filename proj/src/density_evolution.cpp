#include "mdsc/density_evolution.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mdsc {

ScalarField materialize(const ErasurePattern& pattern, const GridShape& shape) {
  if (pattern.base_eps < 0.0 || pattern.base_eps > 1.0)
    throw std::invalid_argument("base erasure probability must lie in [0, 1]");
  pattern.domain.validate(shape);
  ScalarField eps = constant_field(shape, pattern.base_eps);
  if (pattern.domain.kind() != ShorteningDomain::Kind::Empty) {
    for (std::int64_t i = 0; i < shape.size(); ++i)
      if (pattern.domain.contains(unflatten(i, shape), shape)) eps.values[i] = 0.0;
  }
  for (const auto& b : pattern.bursts) {
    if (b.dim() != shape.dim())
      throw std::invalid_argument("burst coordinate dimension does not match grid");
    if (pattern.domain.contains(b, shape)) {
      std::ostringstream os;
      os << "burst section inside the shortening domain (section flat index "
         << flatten(b, shape) << ")";
      throw std::invalid_argument(os.str());
    }
    eps.at(b) = 1.0;
  }
  return eps;
}

DEState init_state(const EnsembleParams& params, const ErasurePattern& pattern) {
  const GridShape shape = params.shape();
  ScalarField eps = materialize(pattern, shape);
  const std::int64_t n_short = domain_size(pattern.domain, shape);
  return init_state(params, std::move(eps), n_short);
}

DEState init_state(const EnsembleParams& params, ScalarField eps_field,
                   std::int64_t shortened_count) {
  const GridShape shape = params.shape();
  if (!(eps_field.shape == shape))
    throw std::invalid_argument("erasure field shape does not match ensemble (L, D)");
  if (shortened_count >= shape.size())
    throw std::invalid_argument("shortening domain covers every section; no transmitted bits");
  ScalarField p = eps_field;  // p^(0) = eps_i
  ScalarField q = constant_field(shape, 1.0);
  return DEState{params, std::move(eps_field), shortened_count, std::move(p), std::move(q), 0};
}

namespace {

#ifndef NDEBUG
void assert_unit_range(const ScalarField& f) {
  assert((f.values >= 0.0).all() && (f.values <= 1.0).all());
}
#endif

double pb_from_mix(const DEState& state, const ScalarField& mix) {
  const DenseArray<double> powed = int_pow(mix.values, state.params.dl);
  const double denom = static_cast<double>(state.eps.shape.size() - state.shortened_count);
  return (state.eps.values * powed).sum() / denom;
}

// Advances the state in place and returns P_b of the new iteration, sharing
// the forward window sum between the bit update and P_b.
double advance(DEState& state) {
  const int w = state.params.w;
  ScalarField S = box_window_sum(state.p, w, WindowDirection::Backward);
  state.q.values = 1.0 - int_pow(DenseArray<double>(1.0 - S.values), state.params.dr - 1);
  ScalarField mix = box_window_sum(state.q, w, WindowDirection::Forward);
  state.p.values = state.eps.values * int_pow(mix.values, state.params.dl - 1);
  ++state.iter;
#ifndef NDEBUG
  assert_unit_range(state.p);
  assert_unit_range(state.q);
#endif
  return pb_from_mix(state, mix);
}

}  // namespace

ScalarField check_update(const DEState& state) {
  ScalarField S = box_window_sum(state.p, state.params.w, WindowDirection::Backward);
  ScalarField q{S.shape, 1.0 - int_pow(DenseArray<double>(1.0 - S.values), state.params.dr - 1)};
  return q;
}

ScalarField bit_update(const DEState& state, const ScalarField& q) {
  ScalarField mix = box_window_sum(q, state.params.w, WindowDirection::Forward);
  ScalarField p{mix.shape, state.eps.values * int_pow(mix.values, state.params.dl - 1)};
  return p;
}

DEState de_step(const DEState& state) {
  DEState next = state;
  advance(next);
  return next;
}

double decoding_erasure_probability(const DEState& state) {
  ScalarField mix = box_window_sum(state.q, state.params.w, WindowDirection::Forward);
  return pb_from_mix(state, mix);
}

const char* to_string(DEVerdict v) {
  switch (v) {
    case DEVerdict::Decoded:
      return "Decoded";
    case DEVerdict::Stalled:
      return "Stalled";
    case DEVerdict::IterLimit:
      return "IterLimit";
  }
  return "?";
}

DEOutcome run_de(const EnsembleParams& params, const ErasurePattern& pattern,
                 const DEBudget& budget, DETrace* trace,
                 std::span<const long> snapshot_iters) {
  return run_de(init_state(params, pattern), budget, trace, snapshot_iters);
}

DEOutcome run_de(DEState state, const DEBudget& budget, DETrace* trace,
                 std::span<const long> snapshot_iters) {
  if (budget.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (budget.tol_success <= 0.0 || budget.tol_stall <= 0.0)
    throw std::invalid_argument("tolerances must be positive");

  auto want_snapshot = [&](long it) {
    return trace != nullptr &&
           std::find(snapshot_iters.begin(), snapshot_iters.end(), it) != snapshot_iters.end();
  };
  auto finish = [&](DEVerdict v, double pb, double delta) {
    if (trace) trace->final_p = state.p;
    return DEOutcome{v, pb, state.iter, delta};
  };

  double pb = decoding_erasure_probability(state);
  if (trace) trace->points.push_back({0, pb, 0.0});
  if (want_snapshot(0)) trace->snapshots.emplace_back(0, state.p);
  if (pb < budget.tol_success) return finish(DEVerdict::Decoded, pb, 0.0);

  DenseArray<double> prev_p(state.p.values.size());
  double delta = 0.0;
  while (state.iter < budget.max_iters) {
    prev_p = state.p.values;
    pb = advance(state);
    delta = (state.p.values - prev_p).abs().maxCoeff();
    if (trace) trace->points.push_back({state.iter, pb, delta});
    if (want_snapshot(state.iter)) trace->snapshots.emplace_back(state.iter, state.p);
    if (pb < budget.tol_success) return finish(DEVerdict::Decoded, pb, delta);
    if (delta < budget.tol_stall) return finish(DEVerdict::Stalled, pb, delta);
  }
  return finish(DEVerdict::IterLimit, pb, delta);
}

std::vector<long> geometric_snapshot_schedule(long max_iters) {
  std::vector<long> out{0};
  for (long v = 1; v <= max_iters; v *= 2) out.push_back(v);
  return out;
}

}  // namespace mdsc
