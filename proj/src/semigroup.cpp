#include "toric/semigroup.hpp"

#include <algorithm>
#include <mutex>

#include "toric/errors.hpp"

namespace toric {

void sort_canonical(std::vector<LatticeVector>& v, const LatticeVector& grading) {
  std::vector<std::pair<Integer, LatticeVector>> keyed;
  keyed.reserve(v.size());
  for (auto& x : v) keyed.emplace_back(dot(grading, x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::move(keyed[i].second);
}

HilbertBasis::HilbertBasis(std::vector<LatticeVector> elements, const LatticeVector& grading)
    : elements_(std::move(elements)) {
  sort_canonical(elements_, grading);
}

std::optional<std::size_t> HilbertBasis::index_of(const LatticeVector& v) const {
  auto it = std::find(elements_.begin(), elements_.end(), v);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool HilbertBasis::same_elements(std::span<const LatticeVector> other) const {
  std::vector<LatticeVector> a = elements_, b(other.begin(), other.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------

struct AffineSemigroup::Cache {
  std::once_flag pointed_once;
  bool pointed = false;
  std::once_flag lattice_once;
  bool lattice = false;
  std::once_flag grading_once;
  LatticeVector grading;
  std::once_flag basis_once;
  std::optional<HilbertBasis> basis;
  std::once_flag saturated_once;
  std::optional<bool> saturated;
  std::once_flag solver_once;
  std::unique_ptr<NonnegativeSolver> solver;
};

AffineSemigroup::AffineSemigroup(std::size_t ambient_rank, std::vector<LatticeVector> generators)
    : ambient_rank_(ambient_rank), generators_(std::move(generators)),
      cone_(ambient_rank_, generators_), cache_(std::make_shared<Cache>()) {
  if (rank(generators_, ambient_rank_) != ambient_rank_)
    throw StructureError("generators do not span the lattice");
}

AffineSemigroup::AffineSemigroup(const IntMatrix& column_generators)
    : AffineSemigroup(column_generators.rows(), column_generators.columns()) {}

AffineSemigroup AffineSemigroup::with_hilbert_basis(std::size_t ambient_rank, HilbertBasis basis,
                                                    std::optional<bool> saturated) {
  AffineSemigroup s(ambient_rank, basis.elements());
  std::call_once(s.cache_->basis_once, [&] { s.cache_->basis = std::move(basis); });
  if (saturated) s.cache_->saturated = saturated;
  return s;
}

bool AffineSemigroup::is_pointed() const {
  std::call_once(cache_->pointed_once, [this] { cache_->pointed = is_strongly_convex(cone_); });
  return cache_->pointed;
}

bool AffineSemigroup::generates_lattice() const {
  std::call_once(cache_->lattice_once, [this] {
    cache_->lattice = lattice_index(IntMatrix::from_columns(generators_, ambient_rank_)) == 1;
  });
  return cache_->lattice;
}

const LatticeVector& AffineSemigroup::grading() const {
  if (!is_pointed()) throw StructureError("semigroup is not pointed; no positive grading");
  std::call_once(cache_->grading_once, [this] { cache_->grading = grading_functional(cone_); });
  return cache_->grading;
}

const HilbertBasis& AffineSemigroup::hilbert_basis() const {
  std::call_once(cache_->basis_once, [this] {
    if (!cache_->basis) cache_->basis = minimal_generators(*this);
  });
  return *cache_->basis;
}

bool AffineSemigroup::is_saturated() const {
  std::call_once(cache_->saturated_once, [this] {
    if (cache_->saturated) return;
    HilbertBasis full = hilbert_basis_saturated(cone_);
    bool all = std::all_of(full.begin(), full.end(),
                           [this](const LatticeVector& h) { return member(h).has_value(); });
    cache_->saturated = all;
  });
  return *cache_->saturated;
}

std::optional<MembershipCertificate> AffineSemigroup::member(const LatticeVector& v) const {
  if (v.size() != ambient_rank_) throw DimensionError("vector length does not match semigroup");
  const LatticeVector& ell = grading();
  Integer level = dot(ell, v);
  if (level < 0) return std::nullopt;
  std::optional<Integer> min_level;
  for (const auto& g : generators_) {
    if (g.is_zero()) continue;
    Integer l = dot(ell, g);
    if (!min_level || l < *min_level) min_level = l;
  }
  if (!min_level) {
    if (v.is_zero()) return MembershipCertificate(generators_.size(), Integer(0));
    return std::nullopt;
  }
  std::call_once(cache_->solver_once, [this] {
    cache_->solver = std::make_unique<NonnegativeSolver>(generators_, ambient_rank_);
  });
  return cache_->solver->solve(v, level / *min_level);
}

// ---------------------------------------------------------------------------

std::vector<LatticeVector> parallelepiped_points(const SimplicialCone& s) {
  const std::size_t d = s.ambient_rank();
  IntMatrix rays = IntMatrix::from_columns(s.rays(), d);
  // u * rays^T = h upper triangular, so rays * u^T = h^T is a lower
  // triangular basis of the same lattice; its diagonal bounds a system of
  // coset representatives of Z^d / rays Z^d.
  IntMatrix h = hermite_normal_form(rays.transpose()).h;
  std::vector<Integer> radix(d);
  for (std::size_t i = 0; i < d; ++i) radix[i] = h(i, i);

  std::vector<LatticeVector> out;
  LatticeVector x = LatticeVector::zero(d);
  while (true) {
    auto lambda = solve_rational(rays, x);
    std::vector<Rational> point(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      Rational frac = (*lambda)[j] - floor((*lambda)[j]);
      if (frac == 0) continue;
      for (std::size_t i = 0; i < d; ++i) point[i] += frac * Rational(s.rays()[j][i]);
    }
    LatticeVector p = LatticeVector::zero(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = numerator(point[i]);
    out.push_back(std::move(p));

    std::size_t k = 0;
    while (k < d) {
      if (++x[k] < radix[k]) break;
      x[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

HilbertBasis hilbert_basis_saturated(const Cone& c) {
  if (!is_strongly_convex(c)) throw StructureError("cone contains a line");
  const LatticeVector ell = grading_functional(c);

  std::vector<LatticeVector> candidates;
  for (const auto& sigma : triangulate(c)) {
    for (const auto& r : sigma.rays()) candidates.push_back(r);
    for (auto& p : parallelepiped_points(sigma))
      if (!p.is_zero()) candidates.push_back(std::move(p));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  sort_canonical(candidates, ell);

  // A candidate is reducible iff it exceeds some irreducible element of
  // smaller degree by a point of the cone; all such elements come earlier.
  std::vector<LatticeVector> kept;
  for (const auto& v : candidates) {
    bool reducible = std::any_of(kept.begin(), kept.end(),
                                 [&](const LatticeVector& h) { return contains(c, v - h); });
    if (!reducible) kept.push_back(v);
  }
  return HilbertBasis(std::move(kept), ell);
}

std::optional<MembershipCertificate> member(const AffineSemigroup& s, const LatticeVector& v) {
  return s.member(v);
}

HilbertBasis minimal_generators(const AffineSemigroup& s) {
  const LatticeVector& ell = s.grading();
  std::vector<LatticeVector> gens;
  for (const auto& g : s.generators())
    if (!g.is_zero()) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  sort_canonical(gens, ell);

  // Summands of a decomposition have strictly smaller degree, so each
  // generator only needs testing against the irreducible ones before it.
  std::vector<LatticeVector> kept;
  std::unique_ptr<NonnegativeSolver> solver;
  Integer min_level = 0;
  for (const auto& g : gens) {
    bool reducible = false;
    if (solver) reducible = solver->solve(g, dot(ell, g) / min_level).has_value();
    if (reducible) continue;
    kept.push_back(g);
    solver = std::make_unique<NonnegativeSolver>(kept, s.ambient_rank());
    if (kept.size() == 1) min_level = dot(ell, g);
  }
  return HilbertBasis(std::move(kept), ell);
}

AffineSemigroup saturate(const AffineSemigroup& s) {
  if (!s.is_pointed()) throw StructureError("cannot saturate a non-pointed semigroup");
  return AffineSemigroup::with_hilbert_basis(s.ambient_rank(), hilbert_basis_saturated(s.cone()),
                                             true);
}

LatticeVector embed(const LatticeVector& v, std::size_t r) {
  std::vector<Integer> c(v.begin(), v.end());
  c.resize(v.size() + r, Integer(0));
  return LatticeVector(std::move(c));
}

AffineSemigroup product_with_free(const AffineSemigroup& s, std::size_t r) {
  if (r == 0) return s;
  const std::size_t d = s.ambient_rank() + r;
  std::vector<LatticeVector> gens;
  for (const auto& g : s.generators()) gens.push_back(embed(g, r));
  for (std::size_t i = s.ambient_rank(); i < d; ++i) gens.push_back(LatticeVector::unit(d, i));
  return AffineSemigroup(d, std::move(gens));
}

}  // namespace toric
