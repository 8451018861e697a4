#include "robustflow/special_solvers.hpp"

#include <algorithm>
#include <limits>

#include "robustflow/error.hpp"

namespace robustflow {

namespace {

PathFlow max_flow_paths(const Instance& inst, const CapacityOverride& caps) {
  const MaxFlowResult mf = max_flow(inst, caps);
  return path_decompose(inst, mf.arc_flow);
}

}  // namespace

IntegralSolution solve_unit_capacity(const Instance& inst) {
  require_valid(inst);
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite() || a.capacity.value() != 1) {
      throw Error(ErrorKind::kNotUnitCapacity,
                  "arc " + std::to_string(a.id) + " has capacity " +
                      to_string(a.capacity));
    }
  }
  IntegralSolution out;
  out.flow = max_flow_paths(inst, {});
  const auto cut_size = static_cast<long>(min_cut(inst).arcs.size());
  out.value = std::max(0L, cut_size - inst.k());
  return out;
}

IntegralSolution solve_integral_cap2(const Instance& inst) {
  require_valid(inst);
  for (const Arc& a : inst.arcs()) {
    const bool ok = a.capacity.is_finite() &&
                    (a.capacity.value() == 1 || a.capacity.value() == 2);
    if (!ok) {
      throw Error(ErrorKind::kCapacityOutOfRange,
                  "arc " + std::to_string(a.id) + " has capacity " +
                      to_string(a.capacity) + ", expected 1 or 2");
    }
  }
  const long k = inst.k();
  PathFlow x1 = max_flow_paths(inst, unit_override(inst));
  PathFlow x2 = max_flow_paths(inst, {});
  const Rational val1 = nominal_value(x1);
  const Rational val2 = nominal_value(x2);

  struct Candidate {
    PathFlow* flow;
    Rational value;
    Rational nominal;
  };
  PathFlow zero;
  // Listed in preference order for exact ties in (value, nominal).
  Candidate candidates[] = {
      {&x1, val1 - k, val1},
      {&x2, val2 - 2 * k, val2},
      {&zero, Rational(0), Rational(0)},
  };
  const Candidate* best = &candidates[0];
  for (const Candidate& c : candidates) {
    if (c.value > best->value ||
        (c.value == best->value && c.nominal > best->nominal)) {
      best = &c;
    }
  }
  IntegralSolution out;
  out.value = std::max(Rational(0), best->value);
  out.flow = *best->flow;
  return out;
}

GreedyInterdiction greedy_cut_interdiction(const Instance& inst,
                                           const PathFlow& x) {
  require_valid(inst);
  GreedyInterdiction out;
  out.cut = min_cut(inst, unit_override(inst)).arcs;

  std::vector<ArcId> taken;
  auto delta = [&](ArcId e) {
    Rational total = 0;
    for (const auto& [path, value] : x.entries()) {
      if (!path.contains(e)) continue;
      const bool meets = std::any_of(taken.begin(), taken.end(),
                                     [&](ArcId f) { return path.contains(f); });
      if (!meets) total += value;
    }
    return total;
  };
  auto best_remaining = [&]() -> std::pair<ArcId, Rational> {
    ArcId arg = -1;
    Rational best = 0;
    for (ArcId e : out.cut) {
      if (std::find(taken.begin(), taken.end(), e) != taken.end()) continue;
      Rational d = delta(e);
      if (arg < 0 || d > best) {
        arg = e;
        best = std::move(d);
      }
    }
    return {arg, best};
  };

  while (static_cast<int>(taken.size()) < inst.k() &&
         taken.size() < out.cut.size()) {
    auto [arc, d] = best_remaining();
    taken.push_back(arc);
    out.trace.push_back(GreedyStep{arc, d});
  }
  out.chosen = taken;
  out.residual_delta =
      taken.size() < out.cut.size() ? best_remaining().second : Rational(0);
  return out;
}

namespace {

class IntegralSearch {
 public:
  IntegralSearch(const Instance& inst, std::vector<Path> paths,
                 std::uint64_t budget)
      : inst_(inst), paths_(std::move(paths)), budget_(budget) {
    for (const Arc& a : inst.arcs()) {
      residual_.push_back(a.capacity.value().get_num().get_si());
    }
    values_.assign(paths_.size(), 0);
    arc_paths_.resize(residual_.size());
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      for (ArcId e : paths_[p].arcs) {
        arc_paths_[e].push_back(static_cast<int>(p));
      }
    }
  }

  void run() { descend(0); }

  bool found() const { return found_; }
  long best_value() const { return best_value_; }
  const std::vector<long>& best_vector() const { return best_vector_; }

 private:
  long headroom(std::size_t p) const {
    long h = std::numeric_limits<long>::max();
    for (ArcId e : paths_[p].arcs) h = std::min(h, residual_[e]);
    return h;
  }

  void count_node() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::kEnumerationBudgetExceeded,
                  "integral search exceeds budget " + std::to_string(budget_));
    }
  }

  void descend(std::size_t p) {
    count_node();
    if (p == paths_.size()) {
      evaluate();
      return;
    }
    const long top = headroom(p);
    for (long v = 0; v <= top; ++v) {
      set(p, v);
      descend(p + 1);
    }
    set(p, 0);
  }

  void set(std::size_t p, long v) {
    const long d = v - values_[p];
    for (ArcId e : paths_[p].arcs) residual_[e] -= d;
    values_[p] = v;
  }

  void evaluate() {
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      if (headroom(p) > 0) return;  // not maximal
    }
    long nominal = 0;
    for (long v : values_) nominal += v;
    const long value = nominal - worst_destroyed();
    if (!found_ || value > best_value_) {
      found_ = true;
      best_value_ = value;
      best_vector_ = values_;
    }
  }

  // Only arcs with flow matter; with fewer than k of them the adversary
  // takes them all.
  long worst_destroyed() {
    std::vector<ArcId> loaded;
    for (std::size_t e = 0; e < residual_.size(); ++e) {
      for (int p : arc_paths_[e]) {
        if (values_[p] > 0) {
          loaded.push_back(static_cast<ArcId>(e));
          break;
        }
      }
    }
    const int k = std::min<int>(inst_.k(), static_cast<int>(loaded.size()));
    hits_.assign(paths_.size(), 0);
    long best = 0;
    long current = 0;
    subsets(loaded, 0, k, current, best);
    return best;
  }

  void subsets(const std::vector<ArcId>& loaded, std::size_t start, int left,
               long& current, long& best) {
    if (left == 0) {
      best = std::max(best, current);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= loaded.size(); ++i) {
      const auto& on_arc = arc_paths_[loaded[i]];
      for (int p : on_arc) {
        if (hits_[p]++ == 0) current += values_[p];
      }
      subsets(loaded, i + 1, left - 1, current, best);
      for (int p : on_arc) {
        if (--hits_[p] == 0) current -= values_[p];
      }
    }
  }

  const Instance& inst_;
  std::vector<Path> paths_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<long> residual_;
  std::vector<long> values_;
  std::vector<std::vector<int>> arc_paths_;
  std::vector<int> hits_;
  bool found_ = false;
  long best_value_ = 0;
  std::vector<long> best_vector_;
};

}  // namespace

IntegralSolution brute_force_integral(const Instance& inst,
                                      std::uint64_t budget,
                                      std::size_t path_limit) {
  require_valid(inst);
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite()) {
      throw Error(ErrorKind::kInfiniteCapacity,
                  "brute-force search needs finite capacities");
    }
    if (!is_integral(a.capacity.value())) {
      throw Error(ErrorKind::kNonIntegralCapacity,
                  "brute-force search needs integral capacities");
    }
    if (!a.capacity.value().get_num().fits_slong_p()) {
      throw Error(ErrorKind::kEnumerationBudgetExceeded,
                  "capacity too large for exhaustive search");
    }
  }
  auto paths = enumerate_paths(inst, path_limit);
  IntegralSearch search(inst, paths, budget);
  search.run();
  IntegralSolution out;
  out.value = search.best_value();
  const auto& vec = search.best_vector();
  for (std::size_t p = 0; p < paths.size(); ++p) {
    out.flow.add(paths[p], Rational(vec[p]));
  }
  return out;
}

}  // namespace robustflow
