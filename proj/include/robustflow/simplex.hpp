#pragma once

#include <utility>
#include <vector>

#include "robustflow/rational.hpp"

namespace robustflow::lp {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Row {
  std::vector<std::pair<int, Rational>> coeffs;  // (variable, coefficient)
  Sense sense = Sense::kLessEqual;
  Rational rhs = 0;
};

// maximize objective . x  subject to rows, x >= 0.
struct Problem {
  int num_vars = 0;
  std::vector<Rational> objective;  // size num_vars
  std::vector<Row> rows;

  int add_var(const Rational& cost);
  void add_row(Row row) { rows.push_back(std::move(row)); }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective = 0;
  std::vector<Rational> x;
  // Row multipliers of the final basis: >= 0 on <= rows, <= 0 on >= rows,
  // free on equalities; rows . dual == objective at optimality.
  std::vector<Rational> dual;
  int pivots = 0;
};

// Dense two-phase tableau simplex over exact rationals with Bland's rule.
Solution solve(const Problem& problem);

}  // namespace robustflow::lp
