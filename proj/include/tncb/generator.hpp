#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tncb/tree.hpp"

namespace tncb {

struct GenConfig {
  enum class Bound { NMinusOne, Unbounded };
  Bound max_rewrites_policy = Bound::NMinusOne;
  CombinePolicy violation_policy = CombinePolicy::Strict;
};

/// Trace entry: one applied move plus its per-step combine-call cost
/// (search trials + re-evaluation).
struct TraceStep {
  MoveStep step;
  std::string mover_orth;
  std::string dest_orth;
  std::uint64_t combine_calls = 0;
};

struct GenResult {
  bool success = false;
  std::string orth;                    // set on success
  std::vector<std::string> fragments;  // maximal orths in scan order, on failure
  std::vector<TraceStep> trace;
  std::size_t rewrites = 0;
  std::uint64_t eval_calls = 0;    // combine calls spent in test phases
  std::uint64_t search_calls = 0;  // combine calls spent locating moves
  std::uint64_t combine_calls() const { return eval_calls + search_calls; }
};

/// A legal move located by the search, carrying the already-combined sign.
struct MoveCandidate {
  int mover = -1;
  int destination = -1;
  MoveStep::Kind kind = MoveStep::Kind::Conjoin;
  int disrupted = 0;
  Sign combined;
};

/// Scans movers top-down left-to-right; per mover tries conjunction with
/// every other maximal TNCB in scan order, then adjunction sites ordered
/// globally by disruption count (ties: host scan order, then slot order).
/// Returns the first legal step, or nullopt. Requires an evaluated tree
/// whose root is not well-formed.
std::optional<MoveCandidate> find_move(const Tncb& t, const Grammar& grammar,
                                       CombinePolicy policy,
                                       CombineStats* stats = nullptr);

/// Count of well-formed nodes: the loop-progress witness.
std::size_t improvement_metric(const Tncb& t);

/// Called after each applied move is re-evaluated; used by the
/// monotonicity checkers to audit disrupted nodes.
using MoveObserver = std::function<void(const Tncb& t, const TraceStep& step,
                                        const std::vector<int>& disrupted_ids)>;

/// The test/rewrite cycle. `initial` must cover exactly the bag's signs.
/// Terminates with success (root well-formed), failure (no legal move), or
/// throws MonotonicityViolationError when the rewrite bound is exceeded or
/// a move fails to increase the well-formed-node count.
GenResult generate(Tncb initial, const Grammar& grammar,
                   const GenConfig& config = {},
                   const MoveObserver& observer = nullptr);

std::string trace_to_json(const std::vector<TraceStep>& trace);

}  // namespace tncb
