#include "tncb/generator.hpp"

#include <algorithm>

#include "json.hpp"
#include "tncb/errors.hpp"

namespace tncb {

std::size_t improvement_metric(const Tncb& t) {
  return t.well_formed_count();
}

namespace {

// Descendants of `host` at exactly `depth` links below it, slot order.
void sites_at_depth(const Tncb& t, int host, int depth,
                    std::vector<int>& out) {
  if (depth == 0) {
    out.push_back(host);
    return;
  }
  if (t.is_leaf(host)) return;
  auto [first, second] = t.children(host);
  sites_at_depth(t, first, depth - 1, out);
  sites_at_depth(t, second, depth - 1, out);
}

}  // namespace

std::optional<MoveCandidate> find_move(const Tncb& t, const Grammar& grammar,
                                       CombinePolicy policy,
                                       CombineStats* stats) {
  const std::vector<int> maximals = t.maximal_ids();

  for (int mover : maximals) {
    const Sign& mover_sign = t.sign(mover);

    // Conjunction first: it disrupts nothing.
    for (int partner : maximals) {
      if (partner == mover) continue;
      auto combined =
          combine_checked(mover_sign, t.sign(partner), grammar, policy, stats);
      if (combined) {
        return MoveCandidate{mover, partner, MoveStep::Kind::Conjoin, 0,
                             std::move(*combined)};
      }
    }

    // Adjunction, fewest disrupted nodes first across all hosts.
    for (int depth = 1;; ++depth) {
      bool any_site = false;
      for (int host : maximals) {
        if (host == mover || t.is_leaf(host)) continue;
        std::vector<int> sites;
        sites_at_depth(t, host, depth, sites);
        for (int site : sites) {
          any_site = true;
          auto combined =
              combine_checked(mover_sign, t.sign(site), grammar, policy, stats);
          if (combined) {
            return MoveCandidate{mover, site, MoveStep::Kind::Adjoin, depth,
                                 std::move(*combined)};
          }
        }
      }
      if (!any_site) break;
    }
  }
  return std::nullopt;
}

GenResult generate(Tncb t, const Grammar& grammar, const GenConfig& config,
                   const MoveObserver& observer) {
  if (t.leaf_count() != t.bag().size())
    throw PreconditionError("initial TNCB does not cover the bag");

  const std::size_t n = t.bag().size();
  GenResult result;

  result.eval_calls += t.evaluate(grammar, config.violation_policy, nullptr);

  while (true) {
    if (t.value(t.root()).well_formed()) {
      result.success = true;
      result.orth = t.sign(t.root()).orth;
      result.rewrites = result.trace.size();
      return result;
    }

    CombineStats search_stats;
    auto candidate =
        find_move(t, grammar, config.violation_policy, &search_stats);
    result.search_calls += search_stats.calls;

    if (!candidate) {
      result.success = false;
      for (int id : t.maximal_ids())
        result.fragments.push_back(t.sign(id).orth);
      result.rewrites = result.trace.size();
      return result;
    }

    if (config.max_rewrites_policy == GenConfig::Bound::NMinusOne &&
        result.trace.size() >= n - 1) {
      throw MonotonicityViolationError(
          "rewrite bound exceeded: " + std::to_string(n - 1) +
          " moves did not produce a well-formed TNCB; the grammar breaks "
          "the monotonicity assumptions");
    }

    const std::size_t metric_before = improvement_metric(t);

    TraceStep ts;
    ts.mover_orth = t.sign(candidate->mover).orth;
    ts.dest_orth = t.sign(candidate->destination).orth;

    std::vector<int> disrupted_ids;
    ts.step = t.apply(
        Tncb::PlannedMove{candidate->mover, candidate->destination,
                          candidate->kind, candidate->combined},
        &disrupted_ids);

    std::size_t step_evals =
        t.evaluate(grammar, config.violation_policy, nullptr);
    result.eval_calls += step_evals;
    ts.combine_calls = search_stats.calls + step_evals;
    result.trace.push_back(ts);

    if (observer) observer(t, result.trace.back(), disrupted_ids);

    const std::size_t metric_after = improvement_metric(t);
    if (metric_after <= metric_before) {
      throw MonotonicityViolationError(
          "move " + std::to_string(result.trace.size()) + " (" +
          ts.mover_orth + " -> " + ts.dest_orth +
          ") did not increase the well-formed-node count (" +
          std::to_string(metric_before) + " -> " +
          std::to_string(metric_after) +
          "); the grammar breaks the monotonicity assumptions");
    }
  }
}

std::string trace_to_json(const std::vector<TraceStep>& trace) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  int index = 1;
  for (const TraceStep& ts : trace) {
    nlohmann::ordered_json obj;
    obj["step"] = index++;
    obj["kind"] =
        ts.step.kind == MoveStep::Kind::Conjoin ? "conjoin" : "adjoin";
    obj["mover_orth"] = ts.mover_orth;
    obj["dest_orth"] = ts.dest_orth;
    obj["disrupted"] = ts.step.disrupted;
    obj["combine_calls"] = ts.combine_calls;
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tncb
