#include "toric/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "toric/detail/double_description.hpp"
#include "toric/errors.hpp"

namespace toric {

struct Cone::Cache {
  std::once_flag once;
  HalfspaceDescription halfspaces;
};

Cone::Cone(std::size_t ambient_rank, std::vector<LatticeVector> generators)
    : ambient_rank_(ambient_rank), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (ambient_rank_ == 0) throw DimensionError("cone ambient rank must be positive");
  for (const auto& g : generators_)
    if (g.size() != ambient_rank_) throw DimensionError("cone generator has wrong length");
  std::erase_if(generators_, [](const LatticeVector& g) { return g.is_zero(); });
}

Cone::Cone(const IntMatrix& column_generators)
    : Cone(column_generators.rows(), column_generators.columns()) {}

const HalfspaceDescription& Cone::halfspaces() const {
  std::call_once(cache_->once, [this] {
    // The dual cone is cone(rays) + span(lines), hence the facet normals and
    // the equations of this cone.
    auto dual = detail::double_description(generators_, {}, ambient_rank_);
    cache_->halfspaces.inequalities = std::move(dual.rays);
    cache_->halfspaces.equations = std::move(dual.lines);
  });
  return cache_->halfspaces;
}

std::size_t Cone::dimension() const { return ambient_rank_ - halfspaces().equations.size(); }

SimplicialCone::SimplicialCone(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {
  if (rays_.empty()) throw DimensionError("simplicial cone needs at least one ray");
  IntMatrix m = IntMatrix::from_columns(rays_, rays_.size());
  index_ = abs(det(m));
  if (index_ == 0) throw StructureError("simplicial cone rays are linearly dependent");
}

Cone dual_cone(const Cone& c) {
  const auto& h = c.halfspaces();
  std::vector<LatticeVector> gens = h.inequalities;
  for (const auto& e : h.equations) {
    gens.push_back(e);
    gens.push_back(-e);
  }
  return Cone(c.ambient_rank(), std::move(gens));
}

bool is_strongly_convex(const Cone& c) {
  const auto& h = c.halfspaces();
  std::vector<LatticeVector> all = h.inequalities;
  all.insert(all.end(), h.equations.begin(), h.equations.end());
  return rank(all, c.ambient_rank()) == c.ambient_rank();
}

std::vector<LatticeVector> primitive_rays(const Cone& c) {
  if (!is_strongly_convex(c)) throw StructureError("cone contains a line");
  const auto& h = c.halfspaces();
  return detail::double_description(h.inequalities, h.equations, c.ambient_rank()).rays;
}

bool contains(const Cone& c, const LatticeVector& v) {
  if (v.size() != c.ambient_rank()) throw DimensionError("vector length does not match cone");
  const auto& h = c.halfspaces();
  for (const auto& e : h.equations)
    if (dot(e, v) != 0) return false;
  for (const auto& n : h.inequalities)
    if (dot(n, v) < 0) return false;
  return true;
}

LatticeVector grading_functional(const Cone& c) {
  LatticeVector sum = LatticeVector::zero(c.ambient_rank());
  for (const auto& n : c.halfspaces().inequalities) sum += n;
  return sum;
}

bool same_cone(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  for (const auto& g : a.generators())
    if (!contains(b, g)) return false;
  for (const auto& g : b.generators())
    if (!contains(a, g)) return false;
  return true;
}

std::vector<SimplicialCone> triangulate(const Cone& c) {
  auto rays = primitive_rays(c);
  return triangulate(c, rays);
}

std::vector<SimplicialCone> triangulate(const Cone& c, std::span<const LatticeVector> ray_order) {
  const std::size_t d = c.ambient_rank();
  if (!is_strongly_convex(c)) throw StructureError("cannot triangulate a cone containing a line");
  if (c.dimension() != d) throw StructureError("cannot triangulate a lower-dimensional cone");

  std::vector<LatticeVector> order;
  for (const auto& r : ray_order) order.push_back(r.primitive());
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ArgumentError("ray order lists a ray twice");
    if (sorted != primitive_rays(c))
      throw ArgumentError("ray order must list exactly the primitive rays of the cone");
  }

  // Simplices are index lists into `order`, each a basis of the span of the
  // rays placed so far.
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<LatticeVector> placed;
  std::size_t span_rank = 0;

  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const LatticeVector& r = order[idx];
    placed.push_back(r);
    std::size_t new_rank = rank(placed, d);
    if (simplices.empty()) {
      simplices.push_back({idx});
      span_rank = new_rank;
      continue;
    }
    if (new_rank > span_rank) {
      for (auto& s : simplices) s.push_back(idx);
      span_rank = new_rank;
      continue;
    }

    // Boundary facets of the current triangulation: faces lying in exactly
    // one simplex. Each remembers its simplex and the omitted vertex.
    struct FacetInfo {
      std::size_t count = 0;
      std::size_t simplex = 0;
      std::size_t apex = 0;
    };
    std::map<std::vector<std::size_t>, FacetInfo> facets;
    for (std::size_t si = 0; si < simplices.size(); ++si) {
      const auto& s = simplices[si];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<std::size_t> f;
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != k) f.push_back(s[t]);
        auto& info = facets[f];
        ++info.count;
        info.simplex = si;
        info.apex = k;
      }
    }

    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, info] : facets) {
      if (info.count != 1) continue;
      const auto& s = simplices[info.simplex];
      std::vector<LatticeVector> basis;
      for (auto i : s) basis.push_back(order[i]);
      auto lambda = solve_rational(IntMatrix::from_columns(basis, d), r);
      // r sees the facet iff it lies strictly beyond it, i.e. its coordinate
      // along the omitted vertex is negative.
      if ((*lambda)[info.apex] < 0) {
        auto nf = f;
        nf.push_back(idx);
        added.push_back(std::move(nf));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }

  std::vector<SimplicialCone> out;
  out.reserve(simplices.size());
  for (const auto& s : simplices) {
    std::vector<LatticeVector> rays;
    for (auto i : s) rays.push_back(order[i]);
    out.emplace_back(std::move(rays));
  }
  return out;
}

}  // namespace toric
