#include "filicheck/complex_structures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "filicheck/nilpotent.hpp"
#include "filicheck/quadratic_system.hpp"

namespace filicheck {

std::string to_string(Status s) {
  switch (s) {
    case Status::Exists: return "Exists";
    case Status::NotExists: return "NotExists";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::None: return "None";
    case Certificate::FiliformTheorem: return "FiliformTheorem";
    case Certificate::PairingObstruction: return "PairingObstruction";
    case Certificate::CommutantExhausted: return "CommutantExhausted";
    case Certificate::ExplicitWitness: return "ExplicitWitness";
    case Certificate::ResidualFloor: return "ResidualFloor";
  }
  return "?";
}

Verdict Verdict::exists(EndoMap witness, std::string detail) {
  Verdict v;
  v.status = Status::Exists;
  v.certificate = Certificate::ExplicitWitness;
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::not_exists(Certificate c, std::string detail) {
  Verdict v;
  v.status = Status::NotExists;
  v.certificate = c;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::unknown(std::string detail) {
  Verdict v;
  v.detail = std::move(detail);
  return v;
}

namespace {

void check_map(const LieAlgebra& alg, const EndoMap& j) {
  if (j.rows() != alg.dim() || j.cols() != alg.dim()) throw DimensionMismatch("map does not match algebra dimension");
}

void require_even(const LieAlgebra& alg) {
  if (alg.dim() % 2 != 0) throw OddDimension("complex structures need even dimension");
}

}  // namespace

NijenhuisResidual nijenhuis_residual(const LieAlgebra& alg, const EndoMap& j) {
  check_map(alg, j);
  const std::size_t n = alg.dim();
  std::vector<Vector> je;
  for (std::size_t i = 0; i < n; ++i) je.push_back(j.column(i));
  NijenhuisResidual t(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = unit_vector(n, a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector eb = unit_vector(n, b);
      Vector v = bracket(alg, je[a], je[b]) - alg.tensor().pair(a, b) -
                 j * (bracket(alg, je[a], eb) + bracket(alg, ea, je[b]));
      for (std::size_t k = 0; k < n; ++k) {
        t.at(b, a, k) = -v[k];
        t.at(a, b, k) = std::move(v[k]);
      }
    }
  }
  return t;
}

bool squares_to_minus_identity(const EndoMap& j) {
  return j.square() && (j * j + Matrix::identity(j.rows())).is_zero();
}

bool is_invariant_cs(const LieAlgebra& alg, const EndoMap& j) {
  require_even(alg);
  check_map(alg, j);
  return squares_to_minus_identity(j) && nijenhuis_residual(alg, j).is_zero();
}

bool is_bi_invariant_cs(const LieAlgebra& alg, const EndoMap& j) {
  require_even(alg);
  check_map(alg, j);
  if (!squares_to_minus_identity(j)) return false;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const EndoMap ad = adjoint(alg, unit_vector(n, i));
    if (!(j * ad == ad * j)) return false;
  }
  return true;
}

std::vector<EndoMap> commutant(const LieAlgebra& alg) {
  const std::size_t n = alg.dim(), n2 = n * n;
  std::vector<EndoMap> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(alg, unit_vector(n, i)));
  // Unknown T(r, c) sits at index r * n + c.
  Matrix sys(n * n2, n2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = ads[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = i * n2 + r * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, r * n + k) += a(k, c);
          sys(row, k * n + c) -= a(r, k);
        }
      }
  }
  std::vector<Vector> vecs;
  Vector id(n2);
  for (std::size_t r = 0; r < n; ++r) id[r * n + r] = Scalar(1);
  vecs.push_back(id);
  for (auto& v : kernel(sys)) {
    std::vector<Vector> trial = vecs;
    trial.push_back(v);
    if (rank(Matrix::from_rows(trial, n2)) == trial.size()) vecs = std::move(trial);
  }
  std::vector<EndoMap> out;
  for (const auto& v : vecs) {
    EndoMap m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    out.push_back(std::move(m));
  }
  return out;
}

Verdict bi_invariant_pairing_obstruction(const LieAlgebra& alg) {
  const auto cs = characteristic_sequence(alg).sequence;
  if (!pairing_pattern_holds(cs))
    return Verdict::not_exists(Certificate::PairingObstruction, "characteristic sequence " + cs.str() + " is not paired");
  return Verdict::unknown("characteristic sequence " + cs.str() + " is paired");
}

Verdict filiform_obstruction(const LieAlgebra& alg) {
  require_even(alg);
  if (is_filiform(alg)) return Verdict::not_exists(Certificate::FiliformTheorem, "algebra is filiform");
  return Verdict::unknown("algebra is not filiform");
}

namespace {

/// Coordinates of members of a matrix algebra with respect to a fixed basis.
class AlgebraCoordinates {
 public:
  explicit AlgebraCoordinates(const std::vector<EndoMap>& basis) : n_(basis.front().rows()) {
    const std::size_t m = basis.size();
    Matrix vt(m, n_ * n_);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) vt(a, r * n_ + c) = basis[a](r, c);
    Matrix red = vt;
    rows_ = rref_in_place(red);
    Matrix sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < m; ++a) sub(i, a) = vt(a, rows_[i]);
    inv_ = inverse(sub);
  }

  Vector operator()(const EndoMap& x) const {
    Vector picked(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) picked[i] = x(rows_[i] / n_, rows_[i] % n_);
    return inv_ * picked;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

EndoMap combine(const std::vector<EndoMap>& basis, const Vector& coeffs) {
  EndoMap out(basis.front().rows(), basis.front().cols());
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!coeffs[a].is_zero()) out += coeffs[a] * basis[a];
  return out;
}

mpq_class trace(const EndoMap& m) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i).re();
  return t;
}

}  // namespace

Verdict solve_bi_invariant(const LieAlgebra& alg, const BiInvariantOptions& opts) {
  require_even(alg);
  if (alg.field() != Field::Q) throw FieldMismatch("bi-invariant search needs a real algebra");
  const std::size_t n = alg.dim();

  if (is_nilpotent(alg)) {
    if (auto v = bi_invariant_pairing_obstruction(alg); v.status == Status::NotExists) return v;
    if (auto v = filiform_obstruction(alg); v.status == Status::NotExists) return v;
  }

  // Cheap probe: the block map e(2k) -> e(2k+1) -> -e(2k) in the given basis.
  EndoMap probe(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    probe(k + 1, k) = Scalar(1);
    probe(k, k + 1) = Scalar(-1);
  }
  if (opts.probe_block_structure && is_bi_invariant_cs(alg, probe)) return Verdict::exists(std::move(probe), "block structure in the given basis");

  const auto basis = commutant(alg);
  const std::size_t m = basis.size();
  const AlgebraCoordinates coords(basis);

  // Radical of A = kernel of the trace form (a, b) -> tr(ab).
  Matrix gram(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      gram(a, b) = Scalar(trace(basis[a] * basis[b]));
      gram(b, a) = gram(a, b);
    }
  std::vector<Vector> adapted = kernel(gram);
  const std::size_t r = adapted.size();
  for (std::size_t a = 0; a < m && adapted.size() < m; ++a) {
    std::vector<Vector> trial = adapted;
    trial.push_back(unit_vector(m, a));
    if (rank(Matrix::from_rows(trial, m)) == trial.size()) adapted = std::move(trial);
  }
  const Matrix to_adapted = inverse(Matrix::from_columns(adapted, m));
  const std::size_t s = m - r;
  std::vector<EndoMap> semisimple;
  for (std::size_t p = 0; p < s; ++p) semisimple.push_back(combine(basis, adapted[r + p]));
  auto quotient_coords = [&](const EndoMap& x) {
    const Vector c = to_adapted * coords(x);
    return Vector(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
  };

  // x = sum_p t_p u_p in A/rad; equations x^2 + 1 = 0 coordinatewise.
  std::vector<QuadPoly> eqs(s);
  const Vector one = quotient_coords(Matrix::identity(n));
  for (std::size_t k = 0; k < s; ++k) eqs[k].add(-1, -1, one[k].re());
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      const Vector prod = quotient_coords(semisimple[p] * semisimple[q]);
      for (std::size_t k = 0; k < s; ++k) eqs[k].add(static_cast<int>(p), static_cast<int>(q), prod[k].re());
    }

  const auto solved = solve_quadratic_system(eqs, s, opts.node_budget);
  const std::string dims = "commutant dim " + std::to_string(m) + ", radical dim " + std::to_string(r);
  if (solved.kind == QuadraticSolveResult::Kind::Infeasible) {
    if (solved.exhaustive) return Verdict::not_exists(Certificate::CommutantExhausted, dims);
    return Verdict::unknown(dims + "; elimination inconclusive");
  }
  if (solved.kind == QuadraticSolveResult::Kind::BudgetExhausted)
    return Verdict::unknown(dims + "; elimination budget exhausted");

  Vector t(s);
  for (std::size_t p = 0; p < s; ++p) t[p] = Scalar(solved.solution[p]);
  EndoMap j = combine(semisimple, t);
  const EndoMap id = Matrix::identity(n);
  for (int step = 0; step < 64; ++step) {
    const EndoMap defect = j * j + id;
    if (defect.is_zero()) break;
    j += Scalar::rational(1, 2) * (j * defect);
  }
  if (!is_bi_invariant_cs(alg, j)) return Verdict::unknown(dims + "; lifted candidate failed verification");
  return Verdict::exists(std::move(j), dims);
}

SplitReport filiform_split_check(const LieAlgebra& alg_c, const Subspace& g1, const Subspace& g2) {
  if (alg_c.field() != Field::Qi) throw FieldMismatch("split check runs on a complexified algebra");
  require_even(alg_c);
  const std::size_t half = alg_c.dim() / 2;
  if (g1.ambient_dim() != alg_c.dim() || g2.ambient_dim() != alg_c.dim() || g1.dim() != half || g2.dim() != half)
    throw DimensionMismatch("split check needs two half-dimensional subspaces");
  if (!is_filiform(alg_c)) throw PreconditionFailed("split check needs a filiform algebra");
  SplitReport rep;
  rep.direct_sum = is_direct_sum(g1, g2);
  rep.g1_subalgebra = is_subalgebra(alg_c, g1);
  rep.g2_subalgebra = is_subalgebra(alg_c, g2);
  rep.g1_filiform = rep.g1_subalgebra && is_filiform(restrict_to(alg_c, g1));
  rep.g2_filiform = rep.g2_subalgebra && is_filiform(restrict_to(alg_c, g2));
  return rep;
}

std::vector<std::pair<Subspace, Subspace>> sample_split_pairs(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t half = dim / 2;
  auto gaussian_int = [&] {
    const long re = static_cast<long>(rng() % 5) - 2;
    const long im = static_cast<long>(rng() % 5) - 2;
    return Scalar(mpq_class(re), mpq_class(im));
  };
  auto random_subspace = [&](std::size_t k) {
    for (;;) {
      std::vector<Vector> vs(k, Vector(dim));
      for (auto& v : vs)
        for (auto& x : v) x = gaussian_int();
      Subspace s(dim, vs);
      if (s.dim() == k) return s;
    }
  };
  std::vector<std::pair<Subspace, Subspace>> out;
  out.reserve(count);
  std::vector<std::size_t> idx(dim);
  while (out.size() < count) {
    if (out.size() % 2 == 0) {
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<std::size_t> a(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(half));
      std::vector<std::size_t> b(idx.begin() + static_cast<std::ptrdiff_t>(half), idx.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      out.emplace_back(Subspace::coordinate(dim, a), Subspace::coordinate(dim, b));
    } else {
      out.emplace_back(random_subspace(half), random_subspace(half));
    }
  }
  return out;
}

namespace {

SplitScan tally(const std::vector<SplitReport>& reports) {
  SplitScan scan;
  scan.pairs = reports.size();
  for (const auto& r : reports) {
    scan.direct_sums += r.direct_sum;
    scan.both_subalgebras += r.direct_sum && r.g1_subalgebra && r.g2_subalgebra;
    scan.counterexamples += r.conjunction();
  }
  return scan;
}

}  // namespace

SplitScan scan_filiform_splits(const LieAlgebra& alg_c, std::size_t count, std::uint64_t seed) {
  if (!is_filiform(alg_c)) throw PreconditionFailed("split scan needs a filiform algebra");
  const auto pairs = sample_split_pairs(alg_c.dim(), count, seed);
  std::vector<SplitReport> reports(pairs.size());
  const auto total = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    const auto& [g1, g2] = pairs[static_cast<std::size_t>(i)];
    reports[static_cast<std::size_t>(i)] = filiform_split_check(alg_c, g1, g2);
  }
  return tally(reports);
}

SplitScan scan_filiform_splits_serial(const LieAlgebra& alg_c, std::size_t count, std::uint64_t seed) {
  if (!is_filiform(alg_c)) throw PreconditionFailed("split scan needs a filiform algebra");
  std::vector<SplitReport> reports;
  for (const auto& [g1, g2] : sample_split_pairs(alg_c.dim(), count, seed))
    reports.push_back(filiform_split_check(alg_c, g1, g2));
  return tally(reports);
}

}  // namespace filicheck
