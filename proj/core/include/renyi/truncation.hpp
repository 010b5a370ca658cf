#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/model.hpp"
#include "renyi/rational.hpp"

namespace renyi {

/// A nested sequence of finite models indexed by a window parameter N,
/// used to exhibit improper-prior inference at desk scale: the prior is
/// flat on parameter atoms θ ∈ {-N..N} and has infinite total mass in the
/// limit, yet the posterior given data is well defined window by window.
///
/// Windows are nested: every atom of window N appears in window N+1.
struct TruncationFamily {
  std::function<ModelSpec(long)> window;  // N ≥ 0
  std::string query_event = "query";
  std::string data_event = "data";
};

/// Parses a family file:
///
///   [family]
///   likelihood = kernel        # or: constant
///   data = 0                   # observed x (kernel mode)
///   query = 0                  # queried θ
///
///   [kernel]                   # offsets d = x - θ, positive weights
///   -1 = 1/4
///   0 = 1/2
///   1 = 1/4
///
/// In kernel mode window N is the joint model over (θ, x) with θ ∈ [-N, N],
/// x ∈ [-N-W, N+W] for W the largest |offset|, flat prior, and weight
/// kernel(x-θ). In constant mode the likelihood carries no information:
/// the carrier is just θ ∈ [-N, N] with flat weights and the data event is
/// the whole carrier, so the "posterior" of a point query shrinks like
/// 1/(2N+1) instead of stabilizing.
TruncationFamily parse_family(std::string_view text);

struct PosteriorPoint {
  long window;
  Rational posterior;
};

struct PosteriorReport {
  std::vector<PosteriorPoint> points;
  Rational max_successive_diff;
  bool stabilized = false;  // posterior exactly constant across the reported windows
};

/// Computes P(query | data) on every requested window via exact
/// conditioning; the report adds no arithmetic beyond the per-window
/// values. Throws PreconditionError (naming N) when the data event has
/// zero mass in some window.
PosteriorReport run_posterior(const TruncationFamily& family, const std::vector<long>& windows);

}  // namespace renyi
