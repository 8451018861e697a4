#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "robustflow/kroute.hpp"
#include "robustflow/lp.hpp"

using namespace robustflow;
using namespace fixtures;

namespace {

// Oracle: does a flow of value F exist with every arc at most F/h? Checked
// as a plain max flow with capacities min(u, F/h).
bool uniform_feasible(const Instance& inst, const Rational& f, int h) {
  Instance capped = inst;
  for (const Arc& a : inst.arcs()) {
    Rational c = f / h;
    if (a.capacity.value() < c) c = a.capacity.value();
    capped.set_capacity(a.id, c);
  }
  return max_flow(capped).value >= f;
}

}  // namespace

TEST_CASE("max_uniform_flow fixtures") {
  CHECK(max_uniform_flow(triple(0), 2).value == 3);
  CHECK(max_uniform_flow(chain(0, 1, 1), 2).value == 0);
  CHECK(max_uniform_flow(diamond(0), 2).value == 2);
  CHECK(max_uniform_flow(diamond(0), 1).value == 2);
  CHECK(max_uniform_flow(diamond(0), 3).value == 0);
}

TEST_CASE("robust_baseline fixtures") {
  RobustBaseline t = robust_baseline(triple(1), 1);
  CHECK(t.guarantee == q(3, 2));
  CHECK(robust_value(triple(1), t.flow, 1000) == 2);
  RobustBaseline d = robust_baseline(diamond(1), 1);
  CHECK(d.guarantee == 1);
  CHECK(solve_full_lp(diamond(1)).primal.objective == 1);
}

TEST_CASE("uniform flow is optimal and uniform on random instances") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_instance(rng, {});
    for (int h = 1; h <= 3; ++h) {
      UniformFlow u = max_uniform_flow(inst, h);
      CHECK(nominal_value(u.flow) == u.value);
      CHECK(is_feasible(inst, u.flow));
      for (const Arc& a : inst.arcs()) {
        CHECK(arc_flow_value(u.flow, a.id) * h <= u.value);
      }
      CHECK(uniform_feasible(inst, u.value, h));
      // slightly more is impossible
      CHECK_FALSE(uniform_feasible(inst, u.value + q(1, 97), h));
    }
  }
}

TEST_CASE("baseline guarantee and approximation ratio") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, {});
    RobustBaseline b = robust_baseline(inst, inst.k());
    Rational rv = robust_value(inst, b.flow, 1000000);
    CHECK(rv >= b.guarantee);
    CHECK(b.guarantee * (inst.k() + 1) == b.value);
    CHECK(solve_row_generation(inst).primal.objective <= (inst.k() + 1) * rv);
  }
}
