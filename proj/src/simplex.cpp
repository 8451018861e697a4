#include "robustflow/simplex.hpp"

#include <cstddef>

#include "robustflow/error.hpp"

namespace robustflow::lp {

int Problem::add_var(const Rational& cost) {
  objective.push_back(cost);
  return num_vars++;
}

namespace {

class Tableau {
 public:
  explicit Tableau(const Problem& p) : n_(p.num_vars) {
    rows_ = p.rows.size();
    flipped_.assign(rows_, false);
    unit_col_.assign(rows_, -1);
    basis_.assign(rows_, -1);

    // Column layout: structural, then one slack/surplus per inequality row,
    // then one artificial per >= or = row.
    int next = n_;
    std::vector<int> slack(rows_, -1);
    std::vector<Sense> sense(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      sense[i] = p.rows[i].sense;
      if (p.rows[i].rhs < 0) {
        flipped_[i] = true;
        if (sense[i] == Sense::kLessEqual) {
          sense[i] = Sense::kGreaterEqual;
        } else if (sense[i] == Sense::kGreaterEqual) {
          sense[i] = Sense::kLessEqual;
        }
      }
      if (sense[i] != Sense::kEqual) slack[i] = next++;
    }
    first_artificial_ = next;
    std::vector<int> artificial(rows_, -1);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sense[i] != Sense::kLessEqual) artificial[i] = next++;
    }
    cols_ = next;
    rhs_col_ = cols_;
    cell_.assign(rows_ * (cols_ + 1), Rational(0));

    for (std::size_t i = 0; i < rows_; ++i) {
      const Row& row = p.rows[i];
      const int sign = flipped_[i] ? -1 : 1;
      for (const auto& [var, coeff] : row.coeffs) {
        if (var < 0 || var >= n_) {
          throw Error(ErrorKind::kInvalidArgument, "LP row uses unknown var");
        }
        at(i, var) += sign * coeff;
      }
      at(i, rhs_col_) = sign * row.rhs;
      if (slack[i] >= 0) {
        at(i, slack[i]) = sense[i] == Sense::kLessEqual ? 1 : -1;
      }
      if (sense[i] == Sense::kLessEqual) {
        basis_[i] = slack[i];
        unit_col_[i] = slack[i];
      } else {
        at(i, artificial[i]) = 1;
        basis_[i] = artificial[i];
        unit_col_[i] = artificial[i];
      }
    }
    costs_.assign(cols_, Rational(0));
    for (int j = 0; j < n_; ++j) costs_[j] = p.objective[j];
  }

  Solution run() {
    Solution out;
    if (first_artificial_ < cols_) {
      std::vector<Rational> phase1(cols_, Rational(0));
      for (int j = first_artificial_; j < cols_; ++j) phase1[j] = -1;
      if (!optimize(phase1, /*allow_artificial=*/true)) {
        throw Error(ErrorKind::kSolverFailure, "phase 1 unbounded");
      }
      if (objective_value(phase1) < 0) {
        out.status = Status::kInfeasible;
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }
    if (!optimize(costs_, /*allow_artificial=*/false)) {
      out.status = Status::kUnbounded;
      out.pivots = pivots_;
      return out;
    }
    out.status = Status::kOptimal;
    out.objective = objective_value(costs_);
    out.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = at(i, rhs_col_);
    }
    out.dual.assign(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational y = 0;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& c = costs_[basis_[r]];
        if (c != 0) y += c * at(r, unit_col_[i]);
      }
      out.dual[i] = flipped_[i] ? Rational(-y) : y;
    }
    out.pivots = pivots_;
    return out;
  }

 private:
  Rational& at(std::size_t r, int c) {
    return cell_[r * (cols_ + 1) + static_cast<std::size_t>(c)];
  }

  Rational objective_value(const std::vector<Rational>& c) {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (c[basis_[i]] != 0) z += c[basis_[i]] * at(i, rhs_col_);
    }
    return z;
  }

  std::vector<Rational> reduced_costs(const std::vector<Rational>& c) {
    std::vector<Rational> d(c.begin(), c.end());
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) {
        const Rational& a = at(i, j);
        if (sgn(a) != 0) d[j] -= cb * a;
      }
    }
    return d;
  }

  // Returns false if the objective is unbounded.
  bool optimize(const std::vector<Rational>& c, bool allow_artificial) {
    std::vector<Rational> d = reduced_costs(c);
    const int limit = allow_artificial ? cols_ : first_artificial_;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (sgn(d[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = at(i, enter);
        if (sgn(a) <= 0) continue;
        Rational ratio = at(i, rhs_col_) / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(static_cast<std::size_t>(leave), enter, &d);
    }
  }

  void pivot(std::size_t r, int c, std::vector<Rational>* d) {
    ++pivots_;
    const Rational inv = 1 / at(r, c);
    std::vector<int> nonzero;
    for (int j = 0; j <= cols_; ++j) {
      Rational& v = at(r, j);
      if (sgn(v) != 0) {
        v *= inv;
        nonzero.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rational factor = at(i, c);
      if (sgn(factor) == 0) continue;
      for (int j : nonzero) at(i, j) -= factor * at(r, j);
    }
    if (d != nullptr) {
      const Rational factor = (*d)[c];
      if (sgn(factor) != 0) {
        for (int j : nonzero) {
          if (j < cols_) (*d)[j] -= factor * at(r, j);
        }
      }
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (sgn(at(i, j)) != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
      // A row with no structural/slack entry is redundant; its artificial
      // stays basic at zero and can never move again.
    }
  }

  int n_;
  std::size_t rows_ = 0;
  int cols_ = 0;
  int rhs_col_ = 0;
  int first_artificial_ = 0;
  int pivots_ = 0;
  std::vector<Rational> cell_;
  std::vector<Rational> costs_;
  std::vector<int> basis_;
  std::vector<int> unit_col_;
  std::vector<bool> flipped_;
};

}  // namespace

Solution solve(const Problem& problem) {
  if (static_cast<int>(problem.objective.size()) != problem.num_vars) {
    throw Error(ErrorKind::kInvalidArgument, "objective size mismatch");
  }
  Tableau tableau(problem);
  return tableau.run();
}

}  // namespace robustflow::lp
