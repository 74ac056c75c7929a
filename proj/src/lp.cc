// Copyright 2026 The stackgpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stackgpa/lp.h"

#include <string>
#include <utility>

#include "stackgpa/errors.h"

namespace stackgpa {

void LinearProgram::AddEquality(std::vector<Rational> row, Rational rhs) {
  eq_lhs.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::AddAtLeast(std::vector<Rational> row, Rational rhs) {
  ge_lhs.push_back(std::move(row));
  ge_rhs.push_back(std::move(rhs));
}

void LinearProgram::AddAtMost(std::vector<Rational> row, const Rational& rhs) {
  for (Rational& v : row) v = -v;
  AddAtLeast(std::move(row), -rhs);
}

const char* LPStatusName(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "Optimal";
    case LPStatus::kInfeasible: return "Infeasible";
    case LPStatus::kUnbounded: return "Unbounded";
  }
  return "?";
}

namespace {

// Dense tableau in canonical form with respect to `basis`:
//   rows[i] . y = rhs[i], basic column basis[i] is the i-th unit vector.
// reduced[j] = c_j - c_B B^-1 A_j; the current vertex is optimal for a
// maximization when no reduced cost is positive.
class Tableau {
 public:
  Tableau(RationalMatrix rows, std::vector<Rational> rhs,
          std::vector<int> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const {
    return rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
  }

  void SetObjective(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_ = cost;
    value_ = Rational(0);
    for (int i = 0; i < num_rows(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.IsZero()) continue;
      for (int j = 0; j < num_cols(); ++j) reduced_[j] -= cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
  }

  // Runs Bland's rule to optimality over columns [0, usable_cols). Returns
  // false if the objective is unbounded.
  bool Optimize(int usable_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < usable_cols; ++j) {
        if (reduced_[j].Sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < num_rows(); ++i) {
        if (rows_[i][enter].Sign() <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int row, int col) {
    const Rational pivot = rows_[row][col];
    for (Rational& v : rows_[row]) v /= pivot;
    rhs_[row] /= pivot;
    for (int i = 0; i < num_rows(); ++i) {
      if (i == row || rows_[i][col].IsZero()) continue;
      const Rational f = rows_[i][col];
      for (int j = 0; j < num_cols(); ++j) {
        if (!rows_[row][j].IsZero()) rows_[i][j] -= f * rows_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    if (!reduced_.empty() && !reduced_[col].IsZero()) {
      const Rational f = reduced_[col];
      for (int j = 0; j < num_cols(); ++j) {
        if (!rows_[row][j].IsZero()) reduced_[j] -= f * rows_[row][j];
      }
      value_ += f * rhs_[row];
    }
    basis_[row] = col;
  }

  void DropRow(int row) {
    rows_.erase(rows_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

  void TruncateColumns(int cols) {
    for (auto& r : rows_) r.resize(cols);
  }

  const RationalMatrix& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<int>& basis() const { return basis_; }
  const Rational& value() const { return value_; }

 private:
  RationalMatrix rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational value_;
};

// How an original variable maps onto nonnegative standard-form columns:
// x = offset + y[plus] - y[minus] (minus < 0 when absent).
struct VariableMap {
  Rational offset;
  int plus = -1;
  int minus = -1;
};

void CheckDimensions(const LinearProgram& lp) {
  const int n = lp.num_variables();
  auto check_rows = [n](const RationalMatrix& m, size_t rhs, const char* what) {
    if (m.size() != rhs) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " lhs/rhs row counts differ");
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != n) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(what) + " row has wrong width");
      }
    }
  };
  check_rows(lp.eq_lhs, lp.eq_rhs.size(), "equality");
  check_rows(lp.ge_lhs, lp.ge_rhs.size(), "inequality");
  if (!lp.lower_bounds.empty() &&
      static_cast<int>(lp.lower_bounds.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "lower_bounds has wrong size");
  }
}

}  // namespace

LPSolution SimplexSolve(const LinearProgram& lp) {
  CheckDimensions(lp);
  const int n = lp.num_variables();

  std::vector<VariableMap> vars(n);
  int num_structural = 0;
  for (int k = 0; k < n; ++k) {
    std::optional<Rational> lb =
        lp.lower_bounds.empty() ? std::optional<Rational>(Rational(0))
                                : lp.lower_bounds[k];
    vars[k].plus = num_structural++;
    if (lb.has_value()) {
      vars[k].offset = *lb;
    } else {
      vars[k].minus = num_structural++;
    }
  }

  const int num_eq = static_cast<int>(lp.eq_lhs.size());
  const int num_ge = static_cast<int>(lp.ge_lhs.size());
  const int m = num_eq + num_ge;
  const int num_surplus = num_ge;
  const int first_artificial = num_structural + num_surplus;
  const int total_cols = first_artificial + m;

  RationalMatrix rows(m, std::vector<Rational>(total_cols));
  std::vector<Rational> rhs(m);
  for (int i = 0; i < m; ++i) {
    const bool is_eq = i < num_eq;
    const auto& src = is_eq ? lp.eq_lhs[i] : lp.ge_lhs[i - num_eq];
    Rational b = is_eq ? lp.eq_rhs[i] : lp.ge_rhs[i - num_eq];
    for (int k = 0; k < n; ++k) {
      if (src[k].IsZero()) continue;
      rows[i][vars[k].plus] += src[k];
      if (vars[k].minus >= 0) rows[i][vars[k].minus] -= src[k];
      b -= src[k] * vars[k].offset;
    }
    if (!is_eq) rows[i][num_structural + (i - num_eq)] = Rational(-1);
    if (b.Sign() < 0) {
      for (int j = 0; j < first_artificial; ++j) rows[i][j] = -rows[i][j];
      b = -b;
    }
    rows[i][first_artificial + i] = Rational(1);
    rhs[i] = std::move(b);
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = first_artificial + i;
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(total_cols);
  for (int j = first_artificial; j < total_cols; ++j) phase1[j] = Rational(-1);
  tab.SetObjective(phase1);
  tab.Optimize(total_cols);
  LPSolution solution;
  if (tab.value().Sign() < 0) {
    solution.status = LPStatus::kInfeasible;
    return solution;
  }

  // Drive remaining (zero-valued) artificials out of the basis; rows where
  // that is impossible are linearly dependent and can be dropped.
  for (int i = tab.num_rows() - 1; i >= 0; --i) {
    if (tab.basis()[i] < first_artificial) continue;
    int col = -1;
    for (int j = 0; j < first_artificial; ++j) {
      if (!tab.rows()[i][j].IsZero()) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.Pivot(i, col);
    } else {
      tab.DropRow(i);
    }
  }
  tab.TruncateColumns(first_artificial);

  // Phase 2 on the original objective.
  std::vector<Rational> cost(first_artificial);
  Rational constant;
  for (int k = 0; k < n; ++k) {
    const Rational& c = lp.objective[k];
    cost[vars[k].plus] += c;
    if (vars[k].minus >= 0) cost[vars[k].minus] -= c;
    constant += c * vars[k].offset;
  }
  tab.SetObjective(cost);
  if (!tab.Optimize(first_artificial)) {
    solution.status = LPStatus::kUnbounded;
    return solution;
  }

  std::vector<Rational> y(first_artificial);
  for (int i = 0; i < tab.num_rows(); ++i) y[tab.basis()[i]] = tab.rhs()[i];
  solution.status = LPStatus::kOptimal;
  solution.values.resize(n);
  for (int k = 0; k < n; ++k) {
    Rational x = vars[k].offset + y[vars[k].plus];
    if (vars[k].minus >= 0) x -= y[vars[k].minus];
    solution.values[k] = std::move(x);
  }
  solution.objective_value = tab.value() + constant;
  return solution;
}

bool IsFeasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.num_variables()) return false;
  auto dot = [&x](const std::vector<Rational>& row) {
    Rational s;
    for (size_t k = 0; k < row.size(); ++k) s += row[k] * x[k];
    return s;
  };
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i) {
    if (dot(lp.eq_lhs[i]) != lp.eq_rhs[i]) return false;
  }
  for (size_t i = 0; i < lp.ge_lhs.size(); ++i) {
    if (dot(lp.ge_lhs[i]) < lp.ge_rhs[i]) return false;
  }
  for (int k = 0; k < lp.num_variables(); ++k) {
    std::optional<Rational> lb = lp.lower_bounds.empty()
                                     ? std::optional<Rational>(Rational(0))
                                     : lp.lower_bounds[k];
    if (lb.has_value() && x[k] < *lb) return false;
  }
  return true;
}

}  // namespace stackgpa
