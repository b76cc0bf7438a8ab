#include "toric/nash.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

void require_blowup_input(const AffineSemigroup& s) {
  if (!s.is_pointed()) throw StructureError("semigroup is not pointed");
  if (!s.generates_lattice()) throw StructureError("generators do not span the lattice");
}

bool next_combination(Subset& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IntMatrix subset_matrix(const HilbertBasis& basis, const Subset& subset) {
  std::vector<LatticeVector> cols;
  cols.reserve(subset.size());
  for (auto i : subset) {
    if (i >= basis.size()) throw ArgumentError("subset index out of range");
    cols.push_back(basis[i]);
  }
  return IntMatrix::from_columns(cols);
}

std::vector<Subset> valid_subsets(const HilbertBasis& basis, Characteristic p) {
  if (basis.size() == 0) throw StructureError("empty Hilbert basis");
  const std::size_t d = basis[0].size();
  if (rank(basis.elements(), d) != d) throw StructureError("Hilbert basis does not have full rank");
  std::vector<Subset> out;
  Subset c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = i;
  do {
    if (det_p(subset_matrix(basis, c), p) != 0) out.push_back(c);
  } while (next_combination(c, basis.size()));
  return out;
}

std::vector<LatticeVector> gamma_set(const HilbertBasis& basis, const Subset& subset,
                                     std::size_t pivot, Characteristic p) {
  auto pos = std::find(subset.begin(), subset.end(), pivot);
  if (pos == subset.end()) throw ArgumentError("pivot is not an element of the subset");
  const std::size_t slot = static_cast<std::size_t>(pos - subset.begin());
  IntMatrix m = subset_matrix(basis, subset);
  const std::size_t d = m.rows();

  std::vector<LatticeVector> out;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    if (std::find(subset.begin(), subset.end(), g) != subset.end()) continue;
    IntMatrix swapped = m;
    for (std::size_t i = 0; i < d; ++i) swapped(i, slot) = basis[g][i];
    if (det_p(swapped, p) != 0) out.push_back(basis[g] - basis[pivot]);
  }
  return out;
}

ChartSpec make_chart(const AffineSemigroup& base, const Subset& subset, Characteristic p) {
  const HilbertBasis& basis = base.hilbert_basis();
  if (subset.size() != base.ambient_rank()) throw ArgumentError("subset must have d elements");
  if (det_p(subset_matrix(basis, subset), p) == 0)
    throw ArgumentError("det_p vanishes on the chosen subset");

  std::vector<std::vector<LatticeVector>> gammas;
  std::vector<LatticeVector> generators = basis.elements();
  for (auto pivot : subset) {
    gammas.push_back(gamma_set(basis, subset, pivot, p));
    for (const auto& g : gammas.back())
      if (std::find(generators.begin(), generators.end(), g) == generators.end())
        generators.push_back(g);
  }
  AffineSemigroup chart(base.ambient_rank(), generators);
  bool pointed = chart.is_pointed();
  return ChartSpec{base, subset, p, std::move(gammas), std::move(generators), std::move(chart),
                   pointed};
}

std::vector<ChartSpec> all_charts(const AffineSemigroup& s, Characteristic p) {
  require_blowup_input(s);
  std::vector<ChartSpec> out;
  for (const auto& a : valid_subsets(s.hilbert_basis(), p)) out.push_back(make_chart(s, a, p));
  return out;
}

std::vector<ChartSpec> nash_charts(const AffineSemigroup& s, Characteristic p) {
  auto charts = all_charts(s, p);
  std::erase_if(charts, [](const ChartSpec& c) { return !c.pointed; });
  return charts;
}

std::vector<NormalizedChart> normalized_nash_charts(const AffineSemigroup& s, Characteristic p) {
  std::vector<NormalizedChart> out;
  for (const auto& chart : nash_charts(s, p)) {
    AffineSemigroup sat = saturate(chart.chart_semigroup);
    auto same = std::find_if(out.begin(), out.end(), [&](const NormalizedChart& n) {
      return n.semigroup.hilbert_basis().elements() == sat.hilbert_basis().elements();
    });
    if (same != out.end())
      same->subsets.push_back(chart.subset);
    else
      out.push_back(NormalizedChart{{chart.subset}, std::move(sat)});
  }
  return out;
}

std::vector<LatticeVector> nash_polyhedron_points(const AffineSemigroup& s, Characteristic p) {
  require_blowup_input(s);
  const HilbertBasis& basis = s.hilbert_basis();
  std::vector<LatticeVector> out;
  for (const auto& a : valid_subsets(basis, p)) {
    LatticeVector v = LatticeVector::zero(s.ambient_rank());
    for (auto i : a) v += basis[i];
    out.push_back(std::move(v));
  }
  return out;
}

bool is_hull_vertex(const LatticeVector& v, const std::vector<LatticeVector>& points,
                    const Cone& c) {
  const std::size_t d = c.ambient_rank();
  auto lift = [d](const LatticeVector& x, int last) {
    LatticeVector y = embed(x, 1);
    y[d] = last;
    return y;
  };
  std::vector<LatticeVector> gens;
  for (const auto& p : points)
    if (p != v) gens.push_back(lift(p, 1));
  for (const auto& g : c.generators()) gens.push_back(lift(g, 0));
  return !contains(Cone(d + 1, std::move(gens)), lift(v, 1));
}

Cone nash_polyhedron_tangent_cone(const AffineSemigroup& s, Characteristic p,
                                  const LatticeVector& v) {
  std::vector<LatticeVector> gens = s.cone().generators();
  for (const auto& q : nash_polyhedron_points(s, p)) gens.push_back(q - v);
  return Cone(s.ambient_rank(), std::move(gens));
}

std::vector<NashPolyhedronVertex> nash_polyhedron_vertices(const AffineSemigroup& s,
                                                           Characteristic p, bool cross_check) {
  auto charts = all_charts(s, p);
  std::vector<LatticeVector> points;
  if (cross_check) points = nash_polyhedron_points(s, p);

  std::vector<NashPolyhedronVertex> out;
  for (auto& chart : charts) {
    LatticeVector v = LatticeVector::zero(s.ambient_rank());
    for (auto i : chart.subset) v += s.hilbert_basis()[i];
    if (cross_check && chart.pointed != is_hull_vertex(v, points, s.cone()))
      throw StructureError("vertex criterion disagrees with the explicit hull at " + to_string(v));
    if (!chart.pointed) continue;
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const NashPolyhedronVertex& x) { return x.vertex == v; });
    if (!seen) out.push_back(NashPolyhedronVertex{std::move(v), std::move(chart)});
  }
  return out;
}

bool is_smooth(const AffineSemigroup& s) {
  if (!s.is_pointed()) return false;
  const HilbertBasis& basis = s.hilbert_basis();
  if (basis.size() != s.ambient_rank()) return false;
  return is_unimodular(IntMatrix::from_columns(basis.elements(), s.ambient_rank()));
}

}  // namespace toric
