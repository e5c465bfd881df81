#include "filicheck/numeric_search.hpp"

#define EIGEN_DONT_PARALLELIZE
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace filicheck {

namespace {

/// R(J) = |J^2 + I|^2 + |N(J)|^2 as a least-squares problem over the entries J(r, c) = x[r n + c].
/// N(i, j) is stored for i < j only and weighted by sqrt(2), which reproduces the full-tensor norm.
class InvariantProblem {
 public:
  explicit InvariantProblem(const LieAlgebra& alg) : n_(alg.dim()), c_(n_ * n_ * n_) {
    if (alg.field() != Field::Q) throw FieldMismatch("numeric search runs on real algebras");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) c_[idx3(i, j, k)] = alg.tensor().at(i, j, k).re_double();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
  }

  std::size_t params() const { return n_ * n_; }
  std::size_t rows() const { return n_ * n_ + pairs_.size() * n_; }

  void residual(const Eigen::VectorXd& x, Eigen::VectorXd& f) {
    prepare(x);
    f.resize(static_cast<Eigen::Index>(rows()));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        double s = a == b ? 1.0 : 0.0;
        for (std::size_t m = 0; m < n_; ++m) s += x[ix(a, m)] * x[ix(m, b)];
        f[ix(a, b)] = s;
      }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [i, j] = pairs_[p];
      for (std::size_t k = 0; k < n_; ++k) {
        double b = 0;
        for (std::size_t q = 0; q < n_; ++q) b += x[ix(q, j)] * je_e_[idx3(i, q, k)];
        double ja = 0;
        for (std::size_t m = 0; m < n_; ++m) ja += x[ix(k, m)] * a_[p * n_ + m];
        f[row(p, k)] = kSqrt2 * (b - c_[idx3(i, j, k)] - ja);
      }
    }
  }

  /// Jacobian restricted to the listed free parameters.
  void jacobian(const Eigen::VectorXd& x, const std::vector<std::size_t>& free, Eigen::MatrixXd& jac) {
    prepare(x);
    jac.setZero(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(free.size()));
    for (std::size_t col = 0; col < free.size(); ++col) {
      const auto ci = static_cast<Eigen::Index>(col);
      const std::size_t r = free[col] / n_, c = free[col] % n_;
      for (std::size_t b = 0; b < n_; ++b) jac(static_cast<Eigen::Index>(ix(r, b)), ci) += x[ix(c, b)];
      for (std::size_t a = 0; a < n_; ++a) jac(static_cast<Eigen::Index>(ix(a, c)), ci) += x[ix(a, r)];
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        const auto [i, j] = pairs_[p];
        jac(static_cast<Eigen::Index>(row(p, r)), ci) -= kSqrt2 * a_[p * n_ + c];
        if (i == c)
          for (std::size_t k = 0; k < n_; ++k)
            jac(static_cast<Eigen::Index>(row(p, k)), ci) +=
                kSqrt2 * (-je_e_[idx3(j, r, k)] - jc_[idx3(r, j, k)]);
        if (j == c)
          for (std::size_t k = 0; k < n_; ++k)
            jac(static_cast<Eigen::Index>(row(p, k)), ci) += kSqrt2 * (je_e_[idx3(i, r, k)] - jc_[idx3(i, r, k)]);
      }
    }
  }

 private:
  static constexpr double kSqrt2 = 1.4142135623730951;

  std::size_t ix(std::size_t r, std::size_t c) const { return r * n_ + c; }
  std::size_t idx3(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }
  std::size_t row(std::size_t p, std::size_t k) const { return n_ * n_ + p * n_ + k; }

  // je_e_(i, j, :) = [J e_i, e_j];  jc_(i, j, :) = J [e_i, e_j];  a_(p, :) = [Je_i, e_j] + [e_i, Je_j].
  void prepare(const Eigen::VectorXd& x) {
    je_e_.assign(n_ * n_ * n_, 0.0);
    jc_.assign(n_ * n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t p = 0; p < n_; ++p) {
        const double w = x[ix(p, i)];
        if (w == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j)
          for (std::size_t k = 0; k < n_; ++k) je_e_[idx3(i, j, k)] += w * c_[idx3(p, j, k)];
      }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t m = 0; m < n_; ++m) {
          const double cm = c_[idx3(i, j, m)];
          if (cm == 0.0) continue;
          for (std::size_t k = 0; k < n_; ++k) jc_[idx3(i, j, k)] += x[ix(k, m)] * cm;
        }
    a_.assign(pairs_.size() * n_, 0.0);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [i, j] = pairs_[p];
      for (std::size_t m = 0; m < n_; ++m) a_[p * n_ + m] = je_e_[idx3(i, j, m)] - je_e_[idx3(j, i, m)];
    }
  }

  std::size_t n_;
  std::vector<double> c_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<double> je_e_, jc_, a_;
};

/// jac^T jac, skipping zero entries row by row; the Jacobian is mostly zero.
Eigen::MatrixXd gram(const Eigen::MatrixXd& jac) {
  const Eigen::Index cols = jac.cols();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(cols, cols);
  std::vector<Eigen::Index> nz;
  nz.reserve(static_cast<std::size_t>(cols));
  for (Eigen::Index r = 0; r < jac.rows(); ++r) {
    nz.clear();
    for (Eigen::Index c = 0; c < cols; ++c)
      if (jac(r, c) != 0.0) nz.push_back(c);
    for (std::size_t a = 0; a < nz.size(); ++a) {
      const double va = jac(r, nz[a]);
      for (std::size_t b = a; b < nz.size(); ++b) h(nz[b], nz[a]) += va * jac(r, nz[b]);
    }
  }
  return h.selfadjointView<Eigen::Lower>();
}

/// Levenberg-Marquardt over the free entries of x. Returns the final residual norm.
double levenberg_marquardt(InvariantProblem& prob, Eigen::VectorXd& x, const std::vector<std::size_t>& free,
                           std::size_t max_iterations, double target) {
  Eigen::VectorXd f, f_trial;
  Eigen::MatrixXd jac;
  prob.residual(x, f);
  double cost = f.squaredNorm();
  if (free.empty()) return std::sqrt(cost);
  double lambda = -1;
  std::size_t stalled = 0;
  // Slow-progress cutoff: less than 0.1% cost decrease over a window of iterations.
  constexpr std::size_t kWindow = 10;
  std::vector<double> history{cost};
  const auto nf = static_cast<Eigen::Index>(free.size());
  for (std::size_t it = 0; it < max_iterations && std::sqrt(cost) > target; ++it) {
    prob.jacobian(x, free, jac);
    const Eigen::MatrixXd h = gram(jac);
    const Eigen::VectorXd g = jac.transpose() * f;
    if (lambda < 0) lambda = 1e-3 * std::max(1.0, h.diagonal().maxCoeff());
    bool accepted = false;
    for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
      Eigen::MatrixXd damped = h;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      Eigen::VectorXd trial = x;
      for (Eigen::Index k = 0; k < nf; ++k) trial[static_cast<Eigen::Index>(free[static_cast<std::size_t>(k)])] += step[k];
      prob.residual(trial, f_trial);
      const double trial_cost = f_trial.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        stalled = (cost - trial_cost) < 1e-12 * cost ? stalled + 1 : 0;
        x = std::move(trial);
        f = f_trial;
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted || stalled >= 8) break;
    history.push_back(cost);
    if (history.size() > kWindow && cost > 0.999 * history[history.size() - 1 - kWindow]) break;
  }
  return std::sqrt(cost);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::size_t> all_params(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

RestartOutcome run_one(const LieAlgebra& alg, const NumericSearchOptions& opts, std::size_t index) {
  InvariantProblem prob(alg);
  std::mt19937_64 rng(restart_seed(opts.seed, index));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(prob.params()));
  for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = normal(rng);
  const double res = levenberg_marquardt(prob, x, all_params(prob.params()), opts.max_iterations, opts.tol * 1e-4);
  return {index, res, RealMatrix(x.data(), x.data() + x.size())};
}

void check_options(const LieAlgebra& alg, const NumericSearchOptions& opts) {
  if (alg.dim() % 2 != 0) throw OddDimension("complex structures need even dimension");
  if (!(opts.tol > 0)) throw PreconditionFailed("tolerance must be positive");
  if (alg.field() != Field::Q) throw FieldMismatch("numeric search runs on real algebras");
}

EndoMap to_exact(std::size_t n, const std::vector<mpq_class>& q) {
  EndoMap m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(q[r * n + c]);
  return m;
}

Verdict conclude(const LieAlgebra& alg, const NumericSearchOptions& opts, std::vector<RestartOutcome> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), [](const RestartOutcome& a, const RestartOutcome& b) {
    return a.residual < b.residual || (a.residual == b.residual && a.index < b.index);
  });
  SearchEvidence ev;
  ev.restarts = outcomes.size();
  if (!outcomes.empty()) {
    ev.min_residual = outcomes.front().residual;
    ev.best_restart = outcomes.front().index;
  }
  for (const auto& o : outcomes) {
    if (!(o.residual < opts.tol)) break;
    if (auto w = certify_candidate(alg, o.j, opts)) {
      Verdict v = Verdict::exists(std::move(*w), "certified from restart " + std::to_string(o.index));
      v.evidence = ev;
      return v;
    }
  }
  Verdict v = Verdict::unknown();
  v.evidence = ev;
  if (outcomes.empty() || !(ev.min_residual < opts.tol)) {
    v.certificate = Certificate::ResidualFloor;
    v.detail = "no restart reached the tolerance";
  } else {
    v.detail = "candidates below tolerance could not be certified";
  }
  return v;
}

}  // namespace

double invariant_residual(const LieAlgebra& alg, const RealMatrix& j) {
  InvariantProblem prob(alg);
  if (j.size() != prob.params()) throw DimensionMismatch("candidate has the wrong size");
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(j.data(), static_cast<Eigen::Index>(j.size()));
  Eigen::VectorXd f;
  prob.residual(x, f);
  return f.norm();
}

std::vector<double> invariant_residual_vector(const LieAlgebra& alg, const RealMatrix& j) {
  InvariantProblem prob(alg);
  if (j.size() != prob.params()) throw DimensionMismatch("candidate has the wrong size");
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(j.data(), static_cast<Eigen::Index>(j.size()));
  Eigen::VectorXd f;
  prob.residual(x, f);
  return {f.data(), f.data() + f.size()};
}

std::vector<double> invariant_jacobian(const LieAlgebra& alg, const RealMatrix& j) {
  InvariantProblem prob(alg);
  if (j.size() != prob.params()) throw DimensionMismatch("candidate has the wrong size");
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(j.data(), static_cast<Eigen::Index>(j.size()));
  std::vector<std::size_t> all(prob.params());
  std::iota(all.begin(), all.end(), std::size_t{0});
  Eigen::MatrixXd jac;
  prob.jacobian(x, all, jac);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(jac.size()));
  for (Eigen::Index r = 0; r < jac.rows(); ++r)
    for (Eigen::Index c = 0; c < jac.cols(); ++c) out.push_back(jac(r, c));
  return out;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

std::vector<RestartOutcome> run_restarts(const LieAlgebra& alg, const NumericSearchOptions& opts) {
  check_options(alg, opts);
  std::vector<RestartOutcome> out(opts.restarts);
  const auto count = static_cast<long>(opts.restarts);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = run_one(alg, opts, static_cast<std::size_t>(i));
  return out;
}

std::vector<RestartOutcome> run_restarts_serial(const LieAlgebra& alg, const NumericSearchOptions& opts) {
  check_options(alg, opts);
  std::vector<RestartOutcome> out;
  out.reserve(opts.restarts);
  for (std::size_t i = 0; i < opts.restarts; ++i) out.push_back(run_one(alg, opts, i));
  return out;
}

mpq_class rational_reconstruct(double x, long max_den) {
  if (!std::isfinite(x)) throw PreconditionFailed("cannot reconstruct a non-finite value");
  // Convergents h/k of the continued fraction of x.
  long h_prev = 1, h = static_cast<long>(std::floor(x));
  long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 64 && frac > 1e-12; ++step) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    const long h_next = a * h + h_prev, k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - std::floor(inv);
  }
  mpq_class q(h, k);
  q.canonicalize();
  return q;
}

std::optional<EndoMap> certify_candidate(const LieAlgebra& alg, const RealMatrix& j, const NumericSearchOptions& opts) {
  const std::size_t n = alg.dim(), count = n * n;
  auto round_all = [&](const Eigen::VectorXd& x, const std::vector<bool>& fixed, const std::vector<mpq_class>& vals) {
    std::vector<mpq_class> q(count);
    for (std::size_t i = 0; i < count; ++i) q[i] = fixed[i] ? vals[i] : rational_reconstruct(x[static_cast<Eigen::Index>(i)], 64);
    EndoMap m = to_exact(n, q);
    return is_invariant_cs(alg, m) ? std::optional<EndoMap>(std::move(m)) : std::nullopt;
  };

  InvariantProblem prob(alg);
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(j.data(), static_cast<Eigen::Index>(count));
  std::vector<bool> fixed(count, false);
  std::vector<mpq_class> vals(count);
  if (auto w = round_all(x, fixed, vals)) return w;

  // Fix the entry closest to a small rational, re-optimize the rest, repeat.
  for (std::size_t stage = 0; stage < count; ++stage) {
    struct Option {
      double dist;
      std::size_t entry;
      mpq_class value;
    };
    std::vector<Option> options;
    for (std::size_t i = 0; i < count; ++i) {
      if (fixed[i]) continue;
      const double xi = x[static_cast<Eigen::Index>(i)];
      mpq_class q = rational_reconstruct(xi, 4);
      options.push_back({std::abs(xi - q.get_d()), i, q});
    }
    std::sort(options.begin(), options.end(),
              [](const Option& a, const Option& b) { return a.dist < b.dist || (a.dist == b.dist && a.entry < b.entry); });
    bool progressed = false;
    for (std::size_t t = 0; t < std::min<std::size_t>(3, options.size()) && !progressed; ++t) {
      Eigen::VectorXd trial = x;
      trial[static_cast<Eigen::Index>(options[t].entry)] = options[t].value.get_d();
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < count; ++i)
        if (!fixed[i] && i != options[t].entry) free.push_back(i);
      const double res = levenberg_marquardt(prob, trial, free, opts.max_iterations, opts.tol * 1e-4);
      if (res < opts.tol) {
        x = std::move(trial);
        fixed[options[t].entry] = true;
        vals[options[t].entry] = options[t].value;
        progressed = true;
      }
    }
    if (!progressed) return std::nullopt;
    if (auto w = round_all(x, fixed, vals)) return w;
  }
  return std::nullopt;
}

Verdict numeric_invariant_search(const LieAlgebra& alg, const NumericSearchOptions& opts) {
  return conclude(alg, opts, run_restarts(alg, opts));
}

Verdict numeric_invariant_search_serial(const LieAlgebra& alg, const NumericSearchOptions& opts) {
  return conclude(alg, opts, run_restarts_serial(alg, opts));
}

}  // namespace filicheck
