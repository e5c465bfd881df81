#include "filicheck/nilpotent.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace filicheck {

std::size_t CharSequence::total() const {
  std::size_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::string CharSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

SeriesProfile lower_central_series(const LieAlgebra& alg) {
  SeriesProfile prof;
  const Subspace whole = Subspace::full(alg.dim());
  prof.terms.push_back(whole);
  prof.dims.push_back(whole.dim());
  while (prof.dims.back() > 0) {
    Subspace next = bracket_span(alg, whole, prof.terms.back());
    if (next.dim() == prof.dims.back()) break;
    prof.dims.push_back(next.dim());
    prof.terms.push_back(std::move(next));
  }
  return prof;
}

bool is_nilpotent(const LieAlgebra& alg) { return lower_central_series(alg).nilpotent(); }

bool is_filiform(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (n < 3) return false;
  const auto prof = lower_central_series(alg);
  if (prof.dims.size() != n) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (prof.dims[i] != n - i - 1) return false;
  return true;
}

CharSequence jordan_profile(const EndoMap& nmap) {
  if (!nmap.square()) throw DimensionMismatch("jordan_profile needs a square map");
  const std::size_t n = nmap.rows();
  // ranks[k] = rank(N^k)
  std::vector<std::size_t> ranks{n};
  Matrix pw = Matrix::identity(n);
  while (ranks.back() > 0) {
    pw = pw * nmap;
    const std::size_t r = rank(pw);
    if (r == ranks.back()) throw NotNilpotent("map is not nilpotent");
    ranks.push_back(r);
  }
  ranks.push_back(0);
  // blocks of size >= k: ranks[k-1] - ranks[k]
  CharSequence cs;
  for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = ranks[k] - ranks[k + 1];
    for (std::size_t b = 0; b < at_least_k - at_least_k1; ++b) cs.parts.push_back(k);
  }
  return cs;
}

std::vector<Vector> characteristic_sample(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto prof = lower_central_series(alg);
  const Subspace derived = prof.terms.size() > 1 ? prof.terms[1] : Subspace::zero(n);
  std::vector<Vector> out;
  auto offer = [&](Vector v) {
    if (!derived.contains(v)) out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) offer(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) offer(unit_vector(n, i) + unit_vector(n, j));
  std::mt19937_64 rng(0x5eed'c0de'2024ULL);
  for (int r = 0; r < 3; ++r) {
    Vector v(n);
    for (auto& x : v) x = Scalar(static_cast<long>(rng() % 7) - 3);
    offer(std::move(v));
  }
  return out;
}

namespace {

void require_nilpotent(const LieAlgebra& alg) {
  if (!is_nilpotent(alg)) throw NotNilpotent("characteristic sequence needs a nilpotent algebra");
}

CharacteristicResult pick_max(const std::vector<Vector>& sample, const std::vector<CharSequence>& profiles) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < profiles.size(); ++i)
    if (profiles[i] > profiles[best]) best = i;
  return {profiles[best], sample[best]};
}

}  // namespace

CharacteristicResult characteristic_sequence(const LieAlgebra& alg) {
  require_nilpotent(alg);
  const auto sample = characteristic_sample(alg);
  std::vector<CharSequence> profiles(sample.size());
  const auto count = static_cast<long>(sample.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    profiles[static_cast<std::size_t>(i)] = jordan_profile(adjoint(alg, sample[static_cast<std::size_t>(i)]));
  return pick_max(sample, profiles);
}

CharacteristicResult characteristic_sequence_serial(const LieAlgebra& alg) {
  require_nilpotent(alg);
  const auto sample = characteristic_sample(alg);
  std::vector<CharSequence> profiles;
  profiles.reserve(sample.size());
  for (const auto& x : sample) profiles.push_back(jordan_profile(adjoint(alg, x)));
  return pick_max(sample, profiles);
}

bool is_characteristic_vector(const LieAlgebra& alg, const Vector& x) {
  check_vector(alg, x);
  const auto series = lower_central_series(alg);
  if (series.terms.size() > 1 && series.terms[1].contains(x)) return false;
  const auto c = characteristic_sequence(alg).sequence;
  return jordan_profile(adjoint(alg, x)) == c;
}

Vector find_characteristic_vector(const LieAlgebra& alg) { return characteristic_sequence(alg).witness; }

bool pairing_pattern_holds(const CharSequence& c) {
  if (c.parts.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < c.parts.size(); i += 2)
    if (c.parts[i] != c.parts[i + 1]) return false;
  return true;
}

}  // namespace filicheck
