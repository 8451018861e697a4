#include "robustflow/robust_eval.hpp"

#include <algorithm>
#include <thread>

#include "robustflow/error.hpp"

namespace robustflow {

bool Scenario::contains(ArcId id) const {
  return std::binary_search(arcs.begin(), arcs.end(), id);
}

Scenario make_scenario(const Instance& inst, std::vector<ArcId> arcs) {
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw Error(ErrorKind::kInvalidArgument, "scenario repeats an arc");
  }
  for (ArcId id : arcs) {
    if (id < 0 || id >= inst.arc_count()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "scenario arc " + std::to_string(id) + " out of range");
    }
  }
  if (static_cast<int>(arcs.size()) != inst.k()) {
    throw Error(ErrorKind::kInvalidArgument,
                "scenario has " + std::to_string(arcs.size()) +
                    " arcs, expected k = " + std::to_string(inst.k()));
  }
  return Scenario{std::move(arcs)};
}

Integer binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return out;
}

Rational nominal_value(const PathFlow& x) {
  Rational total = 0;
  for (const auto& [path, value] : x.entries()) total += value;
  return total;
}

Rational arc_flow_value(const PathFlow& x, ArcId e) {
  Rational total = 0;
  for (const auto& [path, value] : x.entries()) {
    if (path.contains(e)) total += value;
  }
  return total;
}

Rational destroyed_value(const PathFlow& x, const std::vector<ArcId>& arcs) {
  Rational total = 0;
  for (const auto& [path, value] : x.entries()) {
    const bool hit = std::any_of(arcs.begin(), arcs.end(),
                                 [&](ArcId e) { return path.contains(e); });
    if (hit) total += value;
  }
  return total;
}

namespace {

// Support paths scaled to a common denominator so the inner loop adds
// integers only.
struct Support {
  Integer denominator = 1;
  std::vector<Integer> weight;                 // per support path
  std::vector<std::vector<int>> paths_on_arc;  // arc -> support path indices
};

Support build_support(const Instance& inst, const PathFlow& x) {
  Support s;
  s.paths_on_arc.resize(static_cast<std::size_t>(inst.arc_count()));
  for (const auto& [path, value] : x.entries()) {
    s.denominator = lcm(s.denominator, value.get_den());
  }
  int index = 0;
  for (const auto& [path, value] : x.entries()) {
    Rational scaled = value * s.denominator;
    s.weight.push_back(scaled.get_num());
    for (ArcId e : path.arcs) {
      if (e < 0 || e >= inst.arc_count()) {
        throw Error(ErrorKind::kNotFeasible, "flow path uses unknown arc");
      }
      s.paths_on_arc[e].push_back(index);
    }
    ++index;
  }
  return s;
}

struct Best {
  bool found = false;
  Integer value = 0;
  std::vector<ArcId> arcs;
};

// Depth-first walk over k-subsets in lexicographic order with incremental
// hit counts. Only strictly better subsets replace the incumbent, so the
// incumbent is always the lexicographically first maximizer.
class SubsetSearch {
 public:
  SubsetSearch(const Support& support, int m, int k)
      : support_(support), m_(m), k_(k),
        hits_(support.weight.size(), 0) {}

  Best run_with_first(int first) {
    best_ = Best{};
    chosen_.clear();
    current_ = 0;
    if (k_ == 0) {
      record();
      return best_;
    }
    push(first);
    descend(first + 1);
    pop(first);
    return best_;
  }

 private:
  void push(int e) {
    chosen_.push_back(e);
    for (int p : support_.paths_on_arc[e]) {
      if (hits_[p]++ == 0) current_ += support_.weight[p];
    }
  }

  void pop(int e) {
    for (int p : support_.paths_on_arc[e]) {
      if (--hits_[p] == 0) current_ -= support_.weight[p];
    }
    chosen_.pop_back();
  }

  void record() {
    if (!best_.found || current_ > best_.value) {
      best_.found = true;
      best_.value = current_;
      best_.arcs = chosen_;
    }
  }

  void descend(int start) {
    const int remaining = k_ - static_cast<int>(chosen_.size());
    if (remaining == 0) {
      record();
      return;
    }
    for (int e = start; e <= m_ - remaining; ++e) {
      push(e);
      descend(e + 1);
      pop(e);
    }
  }

  const Support& support_;
  int m_;
  int k_;
  std::vector<int> hits_;
  std::vector<ArcId> chosen_;
  Integer current_ = 0;
  Best best_;
};

bool better(const Best& a, const Best& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.value != b.value) return a.value > b.value;
  return a.arcs < b.arcs;
}

}  // namespace

WorstCase worst_case_scenario(const Instance& inst, const PathFlow& x,
                              std::uint64_t budget, int threads) {
  require_valid(inst);
  const int m = inst.arc_count();
  const int k = inst.k();
  if (binomial(m, k) > Integer(std::to_string(budget))) {
    throw Error(ErrorKind::kEnumerationBudgetExceeded,
                "C(" + std::to_string(m) + ", " + std::to_string(k) +
                    ") scenarios exceed budget " + std::to_string(budget));
  }
  const Support support = build_support(inst, x);

  // Subsets are partitioned by their smallest arc.
  const int first_count = k == 0 ? 1 : m - k + 1;
  const int workers = std::max(1, std::min(threads, first_count));
  std::vector<Best> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    SubsetSearch search(support, m, k);
    for (int first = w; first < first_count; first += workers) {
      Best b = search.run_with_first(first);
      if (better(b, partial[w])) partial[w] = std::move(b);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  Best best;
  for (auto& b : partial) {
    if (better(b, best)) best = std::move(b);
  }
  WorstCase out;
  out.scenario.arcs = best.arcs;
  out.lambda = Rational(best.value, support.denominator);
  out.lambda.canonicalize();
  return out;
}

Rational robust_value(const Instance& inst, const PathFlow& x,
                      std::uint64_t budget, int threads) {
  return nominal_value(x) - worst_case_scenario(inst, x, budget, threads).lambda;
}

}  // namespace robustflow
