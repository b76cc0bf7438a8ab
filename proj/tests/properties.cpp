#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "toric/iterate.hpp"
#include "toric/semigroup.hpp"

namespace props {

using namespace toric;

namespace {

std::optional<std::vector<oracle::Vec>> random_pointed_gens(std::size_t d, int range,
                                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-range, range);
  std::uniform_int_distribution<std::size_t> n(d, d + 2);
  std::vector<oracle::Vec> gens(n(rng), oracle::Vec(d));
  for (auto& g : gens)
    for (auto& x : g) x = e(rng);
  if (!oracle::facet_normals(gens, d)) return std::nullopt;
  return gens;
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

std::set<LatticeVector> mapped(const IntMatrix& u, const std::vector<LatticeVector>& v) {
  std::set<LatticeVector> out;
  for (const auto& x : v) out.insert(u * x);
  return out;
}

LatticeVector subset_sum(const HilbertBasis& hb, const Subset& a) {
  LatticeVector v = LatticeVector::zero(hb[0].size());
  for (auto i : a) v += hb[i];
  return v;
}

std::int64_t dot64(const oracle::Vec& a, const oracle::Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// v is a vertex of Conv(points) + Cone(gens) iff (v, 1) lies outside the
// cone over the other points at height 1 and the generators at height 0.
bool oracle_hull_vertex_2d(const oracle::Vec& v, const std::vector<oracle::Vec>& points,
                           const std::vector<oracle::Vec>& gens) {
  std::vector<oracle::Vec> lifted;
  for (const auto& q : points)
    if (q != v) lifted.push_back({q[0], q[1], 1});
  if (lifted.empty()) return true;
  for (const auto& g : gens) lifted.push_back({g[0], g[1], 0});
  auto normals = oracle::facet_normals(lifted, 3);
  if (!normals) throw std::logic_error("lifted cone is not full-dimensional and pointed");
  const oracle::Vec w{v[0], v[1], 1};
  return !std::all_of(normals->begin(), normals->end(),
                      [&](const oracle::Vec& n) { return dot64(n, w) >= 0; });
}

}  // namespace

SuiteResult hilbert_oracle_suite(int cones, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  while (r.cases < cones) {
    const std::size_t d = 2 + r.cases % 2;
    auto gens = random_pointed_gens(d, 5, rng);
    if (!gens) continue;
    ++r.cases;
    auto got = oracle::to_vecs(hilbert_basis_saturated(Cone(d, oracle::to_lattices(*gens))).elements());
    std::sort(got.begin(), got.end());
    if (got != oracle::hilbert_basis_brute_force(*gens, d)) {
      r.failure = "Hilbert basis differs from brute force on cone " + std::to_string(r.cases);
      return r;
    }
  }
  return r;
}

SuiteResult equivariance_suite(int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t primes[] = {0, 2, 3};
  SuiteResult r;
  while (r.cases < pairs) {
    const std::size_t d = 2 + r.cases % 2;
    auto gens = random_pointed_gens(d, 3, rng);
    if (!gens) continue;
    AffineSemigroup s = saturate(AffineSemigroup(d, oracle::to_lattices(*gens)));
    if (s.hilbert_basis().size() > 9) continue;
    ++r.cases;
    const IntMatrix u = oracle::random_unimodular(d, rng);
    const Characteristic p(primes[r.cases % 3]);
    std::ostringstream where;
    where << " (pair " << r.cases << ", p = " << p.value() << ")";

    std::vector<LatticeVector> image;
    for (const auto& g : s.generators()) image.push_back(u * g);
    AffineSemigroup us = saturate(AffineSemigroup(d, image));
    if (as_set(us.hilbert_basis().elements()) != mapped(u, s.hilbert_basis().elements())) {
      r.failure = "hilbert_basis is not equivariant" + where.str();
      return r;
    }

    auto a = nash_charts(s, p), b = nash_charts(us, p);
    std::multiset<std::set<LatticeVector>> ga, gb;
    for (const auto& c : a) ga.insert(mapped(u, c.chart_generators));
    for (const auto& c : b) gb.insert(as_set(c.chart_generators));
    if (ga != gb) {
      r.failure = "nash_charts is not equivariant" + where.str();
      return r;
    }

    for (const auto& c : a) {
      std::vector<LatticeVector> moved;
      for (const auto& g : c.chart_generators) moved.push_back(u * g);
      auto lhs = saturate(AffineSemigroup(d, moved)).hilbert_basis().elements();
      auto rhs = saturate(c.chart_semigroup).hilbert_basis().elements();
      if (as_set(lhs) != mapped(u, rhs)) {
        r.failure = "saturate does not commute with the lattice map" + where.str();
        return r;
      }
    }
  }
  return r;
}

std::string product_lemma(const AffineSemigroup& s, Characteristic p) {
  const std::size_t d = s.ambient_rank();
  AffineSemigroup prod = saturate(product_with_free(s, 1));
  const auto& hb = s.hilbert_basis();
  const auto& phb = prod.hilbert_basis();
  const LatticeVector e = LatticeVector::unit(d + 1, d);

  auto charts = all_charts(s, p);
  auto valid = valid_subsets(phb, p);
  // Valid subsets of S x N containing e correspond to valid subsets of S.
  std::size_t with_e = std::count_if(valid.begin(), valid.end(), [&](const Subset& a) {
    return std::any_of(a.begin(), a.end(), [&](std::size_t i) { return phb[i] == e; });
  });
  if (with_e != charts.size())
    return std::to_string(charts.size()) + " charts but " + std::to_string(with_e) +
           " valid subsets through e";

  for (const auto& c : charts) {
    Subset lifted;
    for (auto i : c.subset) lifted.push_back(*phb.index_of(embed(hb[i], 1)));
    lifted.push_back(*phb.index_of(e));
    std::sort(lifted.begin(), lifted.end());
    ChartSpec pc = make_chart(prod, lifted, p);

    std::set<LatticeVector> want;
    for (const auto& g : c.chart_generators) want.insert(embed(g, 1));
    want.insert(e);
    std::string label = "subset " + format_subset(c.subset);
    if (as_set(pc.chart_generators) != want) return label + ": generators differ";
    if (pc.pointed != c.pointed) return label + ": pointedness differs";
    if (c.pointed) {
      std::vector<LatticeVector> sat;
      AffineSemigroup normalized = saturate(c.chart_semigroup);
      for (const auto& h : normalized.hilbert_basis()) sat.push_back(embed(h, 1));
      sat.push_back(e);
      if (!saturate(pc.chart_semigroup).hilbert_basis().same_elements(sat))
        return label + ": normalized charts differ";
    }
  }
  return {};
}

std::string vertex_criterion(const AffineSemigroup& s, Characteristic p) {
  auto points = nash_polyhedron_points(s, p);
  for (const auto& c : all_charts(s, p)) {
    LatticeVector v = subset_sum(s.hilbert_basis(), c.subset);
    if (c.pointed != is_hull_vertex(v, points, s.cone()))
      return "subset " + format_subset(c.subset) + " at " + to_string(v);
  }
  return {};
}

SuiteResult vertex_criterion_2d_suite(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  while (r.cases < instances) {
    auto gens = random_pointed_gens(2, 5, rng);
    if (!gens) continue;
    AffineSemigroup s = saturate(AffineSemigroup(2, oracle::to_lattices(*gens)));
    const auto& hb = s.hilbert_basis();
    if (hb.size() < 3) continue;
    ++r.cases;
    const Characteristic p(r.cases % 2 ? 0 : 2);
    auto hbv = oracle::to_vecs(hb.elements());
    std::vector<oracle::Vec> points;
    for (std::size_t i = 0; i < hbv.size(); ++i)
      for (std::size_t j = i + 1; j < hbv.size(); ++j) {
        std::int64_t det = hbv[i][0] * hbv[j][1] - hbv[i][1] * hbv[j][0];
        if (p.value() ? det % static_cast<std::int64_t>(p.value()) : det)
          points.push_back({hbv[i][0] + hbv[j][0], hbv[i][1] + hbv[j][1]});
      }
    if (points.size() != all_charts(s, p).size()) {
      r.failure = "instance " + std::to_string(r.cases) + ": valid subset count differs";
      return r;
    }
    for (const auto& c : all_charts(s, p)) {
      auto v = oracle::to_vec(subset_sum(hb, c.subset));
      if (c.pointed != oracle_hull_vertex_2d(v, points, hbv)) {
        r.failure = "instance " + std::to_string(r.cases) + ", subset " + format_subset(c.subset);
        return r;
      }
    }
  }
  return r;
}

}  // namespace props
