#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace filicheck {

/// Polynomial of total degree <= 2 over Q in variables t_0, t_1, ...
///
/// Monomials are keyed by a pair (a, b) with a <= b, where -1 stands for "no variable":
/// (-1,-1) is the constant, (-1,v) the linear term in t_v, (u,v) the product t_u t_v.
class QuadPoly {
 public:
  using Monomial = std::pair<int, int>;
  /// Affine form: key -1 is the constant, key v the coefficient of t_v.
  using Affine = std::map<int, mpq_class>;

  QuadPoly() = default;

  static QuadPoly constant(const mpq_class& c);
  void add(int a, int b, const mpq_class& c);

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::vector<int> variables() const;
  bool has_variable(int v) const;
  mpq_class evaluate(const std::vector<mpq_class>& t) const;
  /// Replaces t_v by the affine form `value`.
  QuadPoly substitute(int v, const Affine& value) const;

 private:
  std::map<Monomial, mpq_class> terms_;
};

/// Signed square decomposition p = sum_k d_k * l_k(t)^2 with l_k affine (congruence diagonalization).
struct SquareDecomposition {
  std::vector<mpq_class> weights;
  std::vector<QuadPoly::Affine> forms;
};
SquareDecomposition decompose_squares(const QuadPoly& p);

struct QuadraticSolveResult {
  enum class Kind { Solved, Infeasible, BudgetExhausted };
  Kind kind = Kind::Infeasible;
  std::vector<mpq_class> solution;
  /// Infeasible over the reals, proved by branches that each cover every real solution.
  bool exhaustive = false;
  std::size_t nodes = 0;
};

/// Depth-first elimination for a rational point of {p = 0 for all p}. Linear equations are
/// eliminated; single-sign square sums collapse to their linear forms; two-term indefinite
/// sums with a rational ratio split into two linear branches. When none applies, variables
/// are fixed to small rationals, which makes a failure non-exhaustive.
QuadraticSolveResult solve_quadratic_system(std::vector<QuadPoly> equations, std::size_t num_vars,
                                            std::size_t node_budget = 20000);

}  // namespace filicheck
