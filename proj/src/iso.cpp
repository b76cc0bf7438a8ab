#include "toric/iso.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

struct ElementProfile {
  Integer degree;
  bool extreme;
  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
  friend bool operator<(const ElementProfile& a, const ElementProfile& b) {
    return std::tie(a.degree, a.extreme) < std::tie(b.degree, b.extreme);
  }
};

std::vector<ElementProfile> profiles(const AffineSemigroup& s) {
  const auto rays = primitive_rays(s.cone());
  std::vector<ElementProfile> out;
  for (const auto& h : s.hilbert_basis()) {
    bool extreme = std::binary_search(rays.begin(), rays.end(), h);
    out.push_back({dot(s.grading(), h), extreme});
  }
  return out;
}

class TupleSearch {
 public:
  TupleSearch(const AffineSemigroup& source, const AffineSemigroup& target,
              std::vector<std::size_t> source_tuple,
              std::vector<std::vector<std::size_t>> candidates)
      : source_(source), target_(target), d_(source.ambient_rank()),
        source_tuple_(std::move(source_tuple)), candidates_(std::move(candidates)) {
    std::vector<LatticeVector> cols;
    for (auto i : source_tuple_) cols.push_back(source.hilbert_basis()[i]);
    IntMatrix s = IntMatrix::from_columns(cols, d_);
    source_det_ = det(s);
    source_adj_ = adjugate(s);
    target_set_.insert(target.hilbert_basis().begin(), target.hilbert_basis().end());
  }

  std::optional<IsoWitness> run() {
    std::vector<std::size_t> chosen;
    return extend(chosen);
  }

 private:
  std::optional<IsoWitness> extend(std::vector<std::size_t>& chosen) {
    if (chosen.size() == d_) return try_tuple(chosen);
    for (auto t : candidates_[chosen.size()]) {
      if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
      chosen.push_back(t);
      auto found = extend(chosen);
      chosen.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<IsoWitness> try_tuple(const std::vector<std::size_t>& chosen) {
    std::vector<LatticeVector> cols;
    for (auto i : chosen) cols.push_back(target_.hilbert_basis()[i]);
    IntMatrix t = IntMatrix::from_columns(cols, d_);
    if (abs(det(t)) != abs(source_det_)) return std::nullopt;
    // U * S = T, so U = T * adj(S) / det(S).
    IntMatrix u = t * source_adj_;
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) {
        if (u(i, j) % source_det_ != 0) return std::nullopt;
        u(i, j) /= source_det_;
      }
    for (const auto& h : source_.hilbert_basis())
      if (!target_set_.contains(u * h)) return std::nullopt;
    return IsoWitness{std::move(u)};
  }

  const AffineSemigroup& source_;
  const AffineSemigroup& target_;
  std::size_t d_;
  std::vector<std::size_t> source_tuple_;
  std::vector<std::vector<std::size_t>> candidates_;
  Integer source_det_;
  IntMatrix source_adj_;
  std::set<LatticeVector> target_set_;
};

// First lexicographic d-subset of the basis that is linearly independent.
std::vector<std::size_t> first_independent_tuple(const HilbertBasis& basis, std::size_t d) {
  std::vector<std::size_t> chosen;
  std::vector<LatticeVector> vecs;
  // Greedy selection yields the lexicographically first independent subset.
  for (std::size_t i = 0; i < basis.size() && chosen.size() < d; ++i) {
    vecs.push_back(basis[i]);
    if (rank(vecs, d) == vecs.size())
      chosen.push_back(i);
    else
      vecs.pop_back();
  }
  if (chosen.size() != d) throw StructureError("Hilbert basis does not have full rank");
  return chosen;
}

}  // namespace

std::optional<IsoWitness> find_iso(const AffineSemigroup& source, const AffineSemigroup& target) {
  if (source.ambient_rank() != target.ambient_rank())
    throw ArgumentError("semigroups live in lattices of different rank");
  if (!source.is_pointed() || !target.is_pointed())
    throw StructureError("isomorphism search needs pointed semigroups");
  const std::size_t d = source.ambient_rank();
  const HilbertBasis& hs = source.hilbert_basis();
  const HilbertBasis& ht = target.hilbert_basis();
  if (hs.size() != ht.size()) return std::nullopt;
  if (primitive_rays(source.cone()).size() != primitive_rays(target.cone()).size())
    return std::nullopt;

  auto ps = profiles(source), pt = profiles(target);
  {
    auto a = ps, b = pt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  auto source_tuple = first_independent_tuple(hs, d);
  std::vector<std::vector<std::size_t>> candidates(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < ht.size(); ++j)
      if (pt[j] == ps[source_tuple[k]]) candidates[k].push_back(j);

  return TupleSearch(source, target, std::move(source_tuple), std::move(candidates)).run();
}

bool verify_witness(const IsoWitness& w, const AffineSemigroup& source,
                    const AffineSemigroup& target) {
  const std::size_t d = source.ambient_rank();
  if (target.ambient_rank() != d || w.matrix.rows() != d || w.matrix.cols() != d) return false;
  if (!is_unimodular(w.matrix)) return false;
  std::vector<LatticeVector> image;
  for (const auto& h : source.hilbert_basis()) image.push_back(w.matrix * h);
  return target.hilbert_basis().same_elements(image);
}

AffineSemigroup apply(const IsoWitness& w, const AffineSemigroup& s) {
  if (w.matrix.cols() != s.ambient_rank() || w.matrix.rows() != s.ambient_rank())
    throw DimensionError("witness does not match the semigroup's rank");
  std::vector<LatticeVector> gens;
  for (const auto& g : s.generators()) gens.push_back(w.matrix * g);
  return AffineSemigroup(s.ambient_rank(), std::move(gens));
}

}  // namespace toric
