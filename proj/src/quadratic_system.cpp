#include "filicheck/quadratic_system.hpp"

#include <algorithm>
#include <array>

namespace filicheck {

QuadPoly QuadPoly::constant(const mpq_class& c) {
  QuadPoly p;
  p.add(-1, -1, c);
  return p;
}

void QuadPoly::add(int a, int b, const mpq_class& c) {
  if (sgn(c) == 0) return;
  const Monomial key{std::min(a, b), std::max(a, b)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

int QuadPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, (m.first >= 0 ? 1 : 0) + (m.second >= 0 ? 1 : 0));
  return d;
}

std::vector<int> QuadPoly::variables() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) {
    if (m.first >= 0) out.push_back(m.first);
    if (m.second >= 0) out.push_back(m.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool QuadPoly::has_variable(int v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first.first == v || t.first.second == v; });
}

mpq_class QuadPoly::evaluate(const std::vector<mpq_class>& t) const {
  mpq_class s = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term = c;
    if (m.first >= 0) term *= t.at(static_cast<std::size_t>(m.first));
    if (m.second >= 0) term *= t.at(static_cast<std::size_t>(m.second));
    s += term;
  }
  return s;
}

QuadPoly QuadPoly::substitute(int v, const Affine& value) const {
  QuadPoly out;
  for (const auto& [m, c] : terms_) {
    const auto [a, b] = m;
    if (a != v && b != v) {
      out.add(a, b, c);
    } else if (a == v && b == v) {
      for (const auto& [k1, c1] : value)
        for (const auto& [k2, c2] : value) out.add(k1, k2, c * c1 * c2);
    } else {
      const int other = a == v ? b : a;
      for (const auto& [k, ck] : value) out.add(other, k, c * ck);
    }
  }
  return out;
}

SquareDecomposition decompose_squares(const QuadPoly& p) {
  const auto vars = p.variables();
  const std::size_t k = vars.size();
  const std::size_t h = k;  // homogenizing coordinate
  const std::size_t sz = k + 1;
  auto idx = [&](int v) -> std::size_t {
    if (v < 0) return h;
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  std::vector<std::vector<mpq_class>> m(sz, std::vector<mpq_class>(sz, 0));
  for (const auto& [mono, c] : p.terms()) {
    const std::size_t a = idx(mono.first), b = idx(mono.second);
    if (a == b) {
      m[a][a] += c;
    } else {
      m[a][b] += c / 2;
      m[b][a] += c / 2;
    }
  }
  auto to_affine = [&](const std::vector<mpq_class>& row) {
    QuadPoly::Affine f;
    for (std::size_t i = 0; i < sz; ++i)
      if (sgn(row[i]) != 0) f[i == h ? -1 : vars[i]] = row[i];
    return f;
  };
  SquareDecomposition out;
  for (;;) {
    std::size_t pivot = sz;
    for (std::size_t i = 0; i < sz && pivot == sz; ++i)
      if (sgn(m[i][i]) != 0) pivot = i;
    if (pivot < sz) {
      const mpq_class d = m[pivot][pivot];
      std::vector<mpq_class> row = m[pivot];
      std::vector<mpq_class> form(sz);
      for (std::size_t j = 0; j < sz; ++j) form[j] = row[j] / d;
      for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b) m[a][b] -= row[a] * row[b] / d;
      out.weights.push_back(d);
      out.forms.push_back(to_affine(form));
      continue;
    }
    std::size_t pi = sz, pj = sz;
    for (std::size_t i = 0; i < sz && pi == sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j)
        if (sgn(m[i][j]) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == sz) break;
    // Zero diagonal: 2 b x_i x_j + ... = (1/2b)((u+w).x)^2 - (1/2b)((u-w).x)^2 + remainder.
    const mpq_class b = m[pi][pj];
    const std::vector<mpq_class> u = m[pi], w = m[pj];
    std::vector<mpq_class> plus(sz), minus(sz);
    for (std::size_t j = 0; j < sz; ++j) {
      plus[j] = u[j] + w[j];
      minus[j] = u[j] - w[j];
    }
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t c = 0; c < sz; ++c) m[a][c] -= (u[a] * w[c] + w[a] * u[c]) / b;
    out.weights.push_back(1 / (2 * b));
    out.forms.push_back(to_affine(plus));
    out.weights.push_back(-1 / (2 * b));
    out.forms.push_back(to_affine(minus));
  }
  return out;
}

namespace {

QuadPoly from_affine(const QuadPoly::Affine& f) {
  QuadPoly p;
  for (const auto& [k, c] : f) p.add(-1, k, c);
  return p;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

struct Elimination {
  int var;
  QuadPoly::Affine expr;
};

struct NodeResult {
  bool found = false;
  bool exhaustive = true;
  bool budget = false;
  std::vector<mpq_class> solution;
};

class Search {
 public:
  Search(std::size_t num_vars, std::size_t budget) : num_vars_(num_vars), budget_(budget) {}

  NodeResult run(std::vector<QuadPoly> eqs, std::vector<Elimination> elims) {
    if (++nodes_ > budget_) return {false, false, true, {}};
    std::erase_if(eqs, [](const QuadPoly& p) { return p.is_zero(); });
    for (const auto& e : eqs)
      if (e.degree() == 0) return {false, true, false, {}};
    if (eqs.empty()) return {true, true, false, back_substitute(elims)};

    for (const auto& e : eqs)
      if (e.degree() == 1) return eliminate_linear(std::move(eqs), std::move(elims), e);

    // A single-sign sum of squares vanishes iff every form vanishes.
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto dec = decompose_squares(eqs[i]);
      const bool pos = std::all_of(dec.weights.begin(), dec.weights.end(), [](auto& w) { return sgn(w) > 0; });
      const bool neg = std::all_of(dec.weights.begin(), dec.weights.end(), [](auto& w) { return sgn(w) < 0; });
      if (pos || neg) {
        std::vector<QuadPoly> next;
        for (std::size_t j = 0; j < eqs.size(); ++j)
          if (j != i) next.push_back(eqs[j]);
        for (const auto& f : dec.forms) next.push_back(from_affine(f));
        return run(std::move(next), std::move(elims));
      }
    }

    // d1 l1^2 + d2 l2^2 with opposite signs and rational ratio: l1 = +-q l2.
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto dec = decompose_squares(eqs[i]);
      if (dec.weights.size() != 2) continue;
      const auto ratio = rational_sqrt(-dec.weights[1] / dec.weights[0]);
      if (!ratio) continue;
      NodeResult agg;
      for (int s : {1, -1}) {
        QuadPoly branch = from_affine(dec.forms[0]);
        for (const auto& [k, c] : dec.forms[1]) branch.add(-1, k, -s * *ratio * c);
        std::vector<QuadPoly> next = eqs;
        next[i] = branch;
        NodeResult r = run(std::move(next), elims);
        if (r.found || r.budget) return r;
        agg.exhaustive = agg.exhaustive && r.exhaustive;
      }
      return agg;
    }

    // Irrational ratio: the only rational points have both forms zero.
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto dec = decompose_squares(eqs[i]);
      if (dec.weights.size() != 2) continue;
      std::vector<QuadPoly> next = eqs;
      next[i] = from_affine(dec.forms[0]);
      next.push_back(from_affine(dec.forms[1]));
      NodeResult r = run(std::move(next), elims);
      r.exhaustive = false;
      return r;
    }

    return guess(std::move(eqs), std::move(elims));
  }

  std::size_t nodes() const { return nodes_; }

 private:
  NodeResult eliminate_linear(std::vector<QuadPoly> eqs, std::vector<Elimination> elims, QuadPoly lin) {
    const int v = lin.variables().front();
    const mpq_class a = lin.terms().at({-1, v});
    QuadPoly::Affine expr;
    for (const auto& [m, c] : lin.terms())
      if (m.second != v) expr[m.second] = -c / a;
    return substitute_and_run(std::move(eqs), std::move(elims), v, expr);
  }

  NodeResult substitute_and_run(std::vector<QuadPoly> eqs, std::vector<Elimination> elims, int v,
                                const QuadPoly::Affine& expr) {
    for (auto& e : eqs) e = e.substitute(v, expr);
    elims.push_back({v, expr});
    return run(std::move(eqs), std::move(elims));
  }

  NodeResult guess(std::vector<QuadPoly> eqs, std::vector<Elimination> elims) {
    std::map<int, std::size_t> count;
    for (const auto& e : eqs)
      for (int v : e.variables()) ++count[v];
    int best = count.begin()->first;
    for (const auto& [v, c] : count)
      if (c > count[best]) best = v;
    static const std::array<mpq_class, 7> kValues{mpq_class(0),  mpq_class(1),    mpq_class(-1),  mpq_class(2),
                                                  mpq_class(-2), mpq_class(1, 2), mpq_class(-1, 2)};
    for (const auto& val : kValues) {
      NodeResult r = substitute_and_run(eqs, elims, best, QuadPoly::Affine{{-1, val}});
      if (r.found || r.budget) return r;
    }
    return {false, false, false, {}};
  }

  std::vector<mpq_class> back_substitute(const std::vector<Elimination>& elims) const {
    std::vector<mpq_class> t(num_vars_, 0);
    for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
      mpq_class v = 0;
      for (const auto& [k, c] : it->expr) v += k < 0 ? c : c * t[static_cast<std::size_t>(k)];
      t[static_cast<std::size_t>(it->var)] = v;
    }
    return t;
  }

  std::size_t num_vars_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace

QuadraticSolveResult solve_quadratic_system(std::vector<QuadPoly> equations, std::size_t num_vars,
                                            std::size_t node_budget) {
  Search search(num_vars, node_budget);
  NodeResult r = search.run(std::move(equations), {});
  QuadraticSolveResult out;
  out.nodes = search.nodes();
  if (r.found) {
    out.kind = QuadraticSolveResult::Kind::Solved;
    out.solution = std::move(r.solution);
  } else if (r.budget) {
    out.kind = QuadraticSolveResult::Kind::BudgetExhausted;
  } else {
    out.kind = QuadraticSolveResult::Kind::Infeasible;
    out.exhaustive = r.exhaustive;
  }
  return out;
}

}  // namespace filicheck
