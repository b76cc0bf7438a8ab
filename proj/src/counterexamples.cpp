#include "toric/counterexamples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/iso.hpp"
#include "toric/iterate.hpp"
#include "toric/nash.hpp"

namespace toric {

namespace {

std::vector<LatticeVector> columns_of(const IntMatrix& m) { return m.columns(); }

Binomial monomials(std::vector<int> lhs, std::vector<int> rhs) {
  Binomial b;
  for (int e : lhs) b.lhs.push_back(e);
  for (int e : rhs) b.rhs.push_back(e);
  return b;
}

ZeroCharacteristicExample zero_example() {
  ZeroCharacteristicExample z;
  z.rays = IntMatrix{{1, 0, 0, 0, 2, 1},
                     {0, 1, 0, 0, 3, 3},
                     {0, 0, 1, 0, -2, -1},
                     {0, 0, 0, 1, -1, -1}};
  z.hilbert_basis = columns_of(z.rays);
  z.hilbert_basis.push_back(LatticeVector{1, 2, -1, 0});
  z.subset = {1, 2, 3, 5};
  z.determinant_table = {
      {{4, 2, 3, 5}, -2}, {{6, 2, 3, 5}, 1},  {{7, 2, 3, 5}, -1},
      {{4, 1, 3, 5}, 3},  {{6, 1, 3, 5}, 0},  {{7, 1, 3, 5}, 2},
      {{4, 1, 2, 5}, 2},  {{6, 1, 2, 5}, -1}, {{7, 1, 2, 5}, 1},
      {{4, 1, 2, 3}, -1}, {{6, 1, 2, 3}, 1},  {{7, 1, 2, 3}, 0},
  };
  z.gamma = {{1, {4, 6, 7}}, {2, {4, 7}}, {3, {4, 6, 7}}, {5, {4, 6}}};
  z.generating_set = {{1, 0}, {4, 2}, {7, 2}, {4, 3}, {6, 3}, {4, 5}, {6, 5}};
  z.witness = IntMatrix{{-1, 0, -2, 1}, {0, -1, -3, 0}, {1, 0, 2, 0}, {0, 1, 2, 0}};
  z.witness_images = {{1, {6, 5}}, {2, {4, 2}}, {3, {4, 5}}, {4, {1, 0}},
                      {5, {6, 3}}, {6, {4, 3}}, {7, {7, 2}}};
  //                        x1 x2 x3 x4 x5 x6 x7
  z.binomials = {monomials({1, 0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 1, 0, 0}),
                 monomials({0, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 0, 1}),
                 monomials({0, 0, 0, 0, 0, 0, 2}, {0, 1, 0, 1, 1, 0, 0}),
                 monomials({0, 0, 0, 0, 0, 1, 1}, {0, 2, 0, 0, 1, 0, 0}),
                 monomials({0, 0, 1, 0, 0, 0, 1}, {1, 2, 0, 0, 0, 0, 0}),
                 monomials({0, 0, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 1})};
  z.negative_binomial = monomials({1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0});
  z.subdivision_order = {1, 2, 3, 6, 5, 4};
  z.index_two_cone = {1, 2, 4, 5};
  return z;
}

CharacteristicTwoExample two_example() {
  CharacteristicTwoExample t;
  t.rays = IntMatrix{{1, 0, 1, 0, 0}, {0, 1, 1, 0, 2}, {0, 0, 2, 0, 2}, {0, 0, 0, 1, 1}};
  t.hilbert_basis = columns_of(t.rays);
  t.hilbert_basis.push_back(LatticeVector{1, 1, 1, 0});
  t.hilbert_basis.push_back(LatticeVector{0, 1, 1, 1});
  t.subset = {1, 2, 4, 7};
  t.subset_det_mod_p = 1;
  t.gamma = {{1, {3, 6}}, {2, {3}}, {4, {5, 6}}, {7, {6}}};
  const auto& h = t.hilbert_basis;
  t.generating_set = {h[1],        h[3],        h[2] - h[1], h[2] - h[0],
                      h[5] - h[0], h[5] - h[6], LatticeVector{1, 0, 1, 0}};
  t.saturation_element = LatticeVector{1, 0, 1, 0};
  t.witness = IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {2, 0, -1, 2}, {0, 1, -1, 0}};
  return t;
}

CharacteristicThreeExample three_example() {
  CharacteristicThreeExample t;
  t.rays = IntMatrix{{1, 0, 1, 0, 0}, {0, 1, 2, 0, 3}, {0, 0, 3, 0, 3}, {0, 0, 0, 1, 1}};
  t.hilbert_basis = columns_of(IntMatrix{{1, 0, 1, 0, 0, 0, 1, 1, 0},
                                         {0, 1, 2, 0, 3, 2, 1, 2, 1},
                                         {0, 0, 3, 0, 3, 2, 1, 2, 1},
                                         {0, 0, 0, 1, 1, 1, 0, 0, 1}});
  t.subset = {1, 2, 4, 9};
  t.subset_det_mod_p = 2;
  t.first_rays = IntMatrix{{0, 0, 0, 1, 1}, {0, 1, 2, 0, 1}, {0, 0, 3, 0, 3}, {1, 0, 0, -1, 0}};
  t.first_hilbert_basis = columns_of(IntMatrix{{0, 0, 0, 1, 1, 0, 1},
                                               {0, 1, 2, 0, 1, 1, 1},
                                               {0, 0, 3, 0, 3, 1, 2},
                                               {1, 0, 0, -1, 0, 0, 0}});
  t.second_subset = {1, 2, 4, 6};
  t.second_subset_det_mod_p = 1;
  t.second_rays = IntMatrix{{0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {0, 0, 3, 0, 3}, {1, 0, 0, -1, 0}};
  t.witness = IntMatrix{{1, 1, -1, 0}, {0, 0, 0, 1}, {3, 0, -1, 3}, {0, -1, 1, 0}};
  return t;
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

void run(VerificationReport& report, std::string name, const std::function<Outcome()>& check) {
  try {
    Outcome o = check();
    report.items.push_back({std::move(name), o.passed, std::move(o.detail)});
  } catch (const std::exception& e) {
    report.items.push_back({std::move(name), false, std::string("error: ") + e.what()});
  }
}

const LatticeVector& label(const std::vector<LatticeVector>& listed, std::size_t l) {
  if (l == 0 || l > listed.size()) throw ArgumentError("label out of range");
  return listed[l - 1];
}

LatticeVector resolve(const std::vector<LatticeVector>& listed, const LabeledDifference& x) {
  LatticeVector v = label(listed, x.plus);
  if (x.minus) v -= label(listed, x.minus);
  return v;
}

// Canonical indices of labelled elements, sorted ascending.
template <std::size_t N>
Subset canonical_subset(const HilbertBasis& basis, const std::vector<LatticeVector>& listed,
                        const std::array<std::size_t, N>& labels) {
  Subset out;
  for (auto l : labels) {
    auto idx = basis.index_of(label(listed, l));
    if (!idx) throw StructureError("h" + std::to_string(l) + " is not in the Hilbert basis");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <std::size_t N>
IntMatrix labelled_matrix(const std::vector<LatticeVector>& listed,
                          const std::array<std::size_t, N>& labels) {
  std::vector<LatticeVector> cols;
  for (auto l : labels) cols.push_back(label(listed, l));
  return IntMatrix::from_columns(cols);
}

bool same_set(std::vector<LatticeVector> a, std::vector<LatticeVector> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

std::string list(const std::vector<LatticeVector>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << '}';
  return out.str();
}

Outcome check_hilbert_basis(const AffineSemigroup& s, const std::vector<LatticeVector>& listed) {
  const HilbertBasis& hb = s.hilbert_basis();
  if (hb.size() == listed.size() && hb.same_elements(listed))
    return pass(std::to_string(hb.size()) + " elements");
  return fail("computed " + list(hb.elements()) + ", expected " + list(listed));
}

Outcome check_gamma(const ChartSpec& chart, const std::vector<LatticeVector>& listed,
                    const std::vector<GammaExpectation>& expected) {
  const HilbertBasis& hb = chart.base.hilbert_basis();
  for (const auto& g : expected) {
    auto idx = hb.index_of(label(listed, g.pivot));
    if (!idx) return fail("pivot h" + std::to_string(g.pivot) + " missing");
    auto pos = std::find(chart.subset.begin(), chart.subset.end(), *idx);
    if (pos == chart.subset.end()) return fail("pivot h" + std::to_string(g.pivot) + " not in A");
    std::vector<LatticeVector> want;
    for (auto o : g.others) want.push_back(label(listed, o) - label(listed, g.pivot));
    const auto& got = chart.gamma_sets[static_cast<std::size_t>(pos - chart.subset.begin())];
    if (!same_set(got, want) || got.size() != want.size())
      return fail("G_A(h" + std::to_string(g.pivot) + ") = " + list(got) + ", expected " +
                  list(want));
  }
  if (!chart.pointed) return fail("chart semigroup is not pointed");
  return pass(std::to_string(chart.chart_generators.size()) + " generators, pointed");
}

// Chart generators (Hilbert basis plus gamma sets) as a set; equal sets give
// the same chart semigroup.
std::vector<LatticeVector> generator_set(const ChartSpec& c) {
  auto g = c.chart_generators;
  std::sort(g.begin(), g.end());
  return g;
}

void verify_zero(const ZeroCharacteristicExample& z, std::span<const std::uint64_t> primes,
                 VerificationReport& report) {
  const Characteristic p0(0);
  const AffineSemigroup s = saturate(AffineSemigroup(z.rays));
  const auto& listed = z.hilbert_basis;

  run(report, "char 0: Hilbert basis", [&] { return check_hilbert_basis(s, listed); });

  run(report, "char 0: determinant table", [&] {
    std::size_t bad = 0;
    std::string detail;
    for (const auto& e : z.determinant_table) {
      Integer got = det(labelled_matrix(listed, e.columns));
      if (got != e.value) {
        ++bad;
        detail += " det(h" + std::to_string(e.columns[0]) + " h" + std::to_string(e.columns[1]) +
                  " h" + std::to_string(e.columns[2]) + " h" + std::to_string(e.columns[3]) +
                  ")=" + to_string(got);
      }
    }
    if (bad) return fail(std::to_string(bad) + " mismatches:" + detail);
    return pass(std::to_string(z.determinant_table.size()) + " values");
  });

  auto chart = [&] { return make_chart(s, canonical_subset(s.hilbert_basis(), listed, z.subset), p0); };

  run(report, "char 0: chart generators G_A", [&] { return check_gamma(chart(), listed, z.gamma); });

  std::vector<LatticeVector> h_set;
  for (const auto& x : z.generating_set) h_set.push_back(resolve(listed, x));

  run(report, "char 0: generating set H", [&] {
    ChartSpec c = chart();
    AffineSemigroup r(4, h_set);
    for (const auto& g : c.chart_generators)
      if (!r.member(g)) return fail(to_string(g) + " is not generated by H");
    for (const auto& h : h_set)
      if (!c.chart_semigroup.member(h)) return fail(to_string(h) + " is not in S_A");
    const HilbertBasis& min = c.chart_semigroup.hilbert_basis();
    if (!min.same_elements(h_set)) return fail("minimal generators " + list(min.elements()));
    return pass("H is the minimal generating set of S_A");
  });

  run(report, "char 0: explicit witness", [&] {
    ChartSpec c = chart();
    IsoWitness w{z.witness};
    if (!verify_witness(w, s, c.chart_semigroup)) return fail("U does not map H(S) onto H");
    for (const auto& [src, img] : z.witness_images) {
      LatticeVector got = z.witness * label(listed, src);
      if (got != resolve(listed, img))
        return fail("U(h" + std::to_string(src) + ") = " + to_string(got));
    }
    return pass(std::to_string(z.witness_images.size()) + " image equalities");
  });

  run(report, "char 0: isomorphism search", [&] {
    ChartSpec c = chart();
    auto w = find_iso(s, c.chart_semigroup);
    if (!w) return fail("no witness found");
    if (!verify_witness(*w, s, c.chart_semigroup)) return fail("witness does not verify");
    std::ostringstream out;
    out << "U = " << w->matrix;
    return pass(out.str());
  });

  run(report, "char 0: iteration cycle", [&] {
    RunConfig cfg{p0, BlowupMode::nash, 1,
                  {canonical_subset(s.hilbert_basis(), listed, z.subset)}};
    IterationTree tree = iterate(s, cfg);
    if (tree.nodes.size() != 2 || tree.nodes[1].status != NodeStatus::cycle ||
        tree.nodes[1].iso_link->ancestor != 0)
      return fail("depth-1 chart is not reported isomorphic to the root");
    return pass("depth 1 isomorphic to the root");
  });

  run(report, "char 0: binomial relations", [&] {
    auto ok = check_binomials(listed, z.binomials);
    for (std::size_t i = 0; i < ok.size(); ++i)
      if (!ok[i]) return fail("relation " + std::to_string(i + 1) + " does not hold");
    if (binomial_holds(listed, z.negative_binomial)) return fail("negative control holds");
    return pass(std::to_string(ok.size()) + " relations hold, negative control fails");
  });

  run(report, "char 0: simplicial subdivision", [&] {
    std::vector<LatticeVector> order;
    for (auto l : z.subdivision_order) order.push_back(label(listed, l));
    auto cones = triangulate(s.cone(), order);
    std::vector<Integer> indices;
    const SimplicialCone* index_two = nullptr;
    for (const auto& c : cones) {
      indices.push_back(c.index());
      if (c.index() == 2) index_two = &c;
    }
    std::sort(indices.begin(), indices.end());
    if (indices != std::vector<Integer>{1, 1, 1, 2}) return fail("index multiset differs");
    std::vector<LatticeVector> want;
    for (auto l : z.index_two_cone) want.push_back(label(listed, l));
    if (!same_set(index_two->rays(), want)) return fail("index-2 cone " + list(index_two->rays()));
    auto points = parallelepiped_points(*index_two);
    if (!same_set(points, {LatticeVector::zero(4), label(listed, 7)}))
      return fail("parallelepiped points " + list(points));
    return pass("indices {1,1,1,2}, parallelepiped {0, h7}");
  });

  run(report, "char 0: product with N", [&] {
    AffineSemigroup product = saturate(product_with_free(s, 1));
    const HilbertBasis& hb = product.hilbert_basis();
    std::array<LatticeVector, 5> cols;
    for (std::size_t i = 0; i < 4; ++i) cols[i] = embed(label(listed, z.subset[i]), 1);
    cols[4] = LatticeVector::unit(5, 4);
    Subset a;
    for (const auto& c : cols) {
      auto idx = hb.index_of(c);
      if (!idx) return fail(to_string(c) + " missing from the product Hilbert basis");
      a.push_back(*idx);
    }
    std::sort(a.begin(), a.end());
    ChartSpec lifted = make_chart(product, a, p0);
    ChartSpec base = chart();
    std::vector<LatticeVector> want;
    for (const auto& h : base.chart_semigroup.hilbert_basis()) want.push_back(embed(h, 1));
    want.push_back(LatticeVector::unit(5, 4));
    if (!lifted.pointed) return fail("lifted chart is not pointed");
    if (!lifted.chart_semigroup.hilbert_basis().same_elements(want))
      return fail("lifted chart differs from S_A x N");
    return pass("chart of S x N over A + e5 equals S_A x N");
  });

  const auto base_subsets = valid_subsets(s.hilbert_basis(), p0);
  for (auto prime : primes) {
    run(report, "char " + std::to_string(prime) + ": same charts as char 0", [&] {
      const Characteristic p(prime);
      auto subsets = valid_subsets(s.hilbert_basis(), p);
      if (subsets != base_subsets)
        return fail(std::to_string(subsets.size()) + " nonzero determinants, char 0 has " +
                    std::to_string(base_subsets.size()));
      for (const auto& a : subsets) {
        ChartSpec x = make_chart(s, a, p), y = make_chart(s, a, p0);
        if (generator_set(x) != generator_set(y) || x.pointed != y.pointed)
          return fail("chart " + format_subset(a) + " differs");
      }
      return pass(std::to_string(subsets.size()) + " nonzero determinants, charts identical");
    });
  }
}

void verify_two(const CharacteristicTwoExample& t, VerificationReport& report) {
  const Characteristic p2(2);
  const AffineSemigroup s = saturate(AffineSemigroup(t.rays));
  const auto& listed = t.hilbert_basis;

  run(report, "char 2: Hilbert basis", [&] { return check_hilbert_basis(s, listed); });

  run(report, "char 2: subset determinant", [&] {
    Integer got = det_p(labelled_matrix(listed, t.subset), p2);
    if (got != t.subset_det_mod_p) return fail("det_2 = " + to_string(got));
    return pass("det_2 = " + to_string(got));
  });

  auto chart = [&] { return make_chart(s, canonical_subset(s.hilbert_basis(), listed, t.subset), p2); };

  run(report, "char 2: chart generators G_A", [&] { return check_gamma(chart(), listed, t.gamma); });

  run(report, "char 2: saturation", [&] {
    ChartSpec c = chart();
    if (c.chart_semigroup.member(t.saturation_element))
      return fail(to_string(t.saturation_element) + " already lies in S_A");
    if (!c.chart_semigroup.member(Integer(2) * t.saturation_element))
      return fail("twice " + to_string(t.saturation_element) + " is not in S_A");
    AffineSemigroup sat = saturate(c.chart_semigroup);
    if (!sat.hilbert_basis().contains(t.saturation_element))
      return fail("saturation misses " + to_string(t.saturation_element));
    if (!sat.hilbert_basis().same_elements(t.generating_set))
      return fail("saturation has Hilbert basis " + list(sat.hilbert_basis().elements()));
    return pass("Hilbert basis of the saturation is H");
  });

  run(report, "char 2: explicit witness", [&] {
    AffineSemigroup sat = saturate(chart().chart_semigroup);
    if (!verify_witness(IsoWitness{t.witness}, s, sat)) return fail("U does not map H(S) onto H");
    return pass();
  });

  run(report, "char 2: isomorphism search", [&] {
    AffineSemigroup sat = saturate(chart().chart_semigroup);
    auto w = find_iso(s, sat);
    if (!w || !verify_witness(*w, s, sat)) return fail("no verified witness");
    return pass();
  });
}

void verify_three(const CharacteristicThreeExample& t, VerificationReport& report) {
  const Characteristic p3(3);
  const AffineSemigroup s = saturate(AffineSemigroup(t.rays));
  const auto& listed = t.hilbert_basis;
  const auto& listed1 = t.first_hilbert_basis;

  run(report, "char 3: Hilbert basis", [&] { return check_hilbert_basis(s, listed); });

  run(report, "char 3: first chart", [&] {
    Integer d = det_p(labelled_matrix(listed, t.subset), p3);
    if (d != t.subset_det_mod_p) return fail("det_3 = " + to_string(d));
    ChartSpec c = make_chart(s, canonical_subset(s.hilbert_basis(), listed, t.subset), p3);
    if (!c.pointed) return fail("S_A is not pointed");
    AffineSemigroup x1 = saturate(c.chart_semigroup);
    auto rays = primitive_rays(x1.cone());
    if (!same_set(rays, columns_of(t.first_rays))) return fail("rays " + list(rays));
    if (!x1.hilbert_basis().same_elements(listed1))
      return fail("Hilbert basis " + list(x1.hilbert_basis().elements()));
    return pass("rays and Hilbert basis match");
  });

  auto second = [&] {
    AffineSemigroup x1 = saturate(AffineSemigroup(4, listed1));
    return make_chart(x1, canonical_subset(x1.hilbert_basis(), listed1, t.second_subset), p3);
  };

  run(report, "char 3: second chart", [&] {
    Integer d = det_p(labelled_matrix(listed1, t.second_subset), p3);
    if (d != t.second_subset_det_mod_p) return fail("det_3 = " + to_string(d));
    ChartSpec c = second();
    if (!c.pointed) return fail("S_A' is not pointed");
    auto rays = primitive_rays(saturate(c.chart_semigroup).cone());
    if (!same_set(rays, columns_of(t.second_rays))) return fail("rays " + list(rays));
    return pass("rays match");
  });

  run(report, "char 3: explicit witness", [&] {
    std::vector<LatticeVector> image;
    for (const auto& r : primitive_rays(s.cone())) image.push_back(t.witness * r);
    if (!is_unimodular(t.witness)) return fail("U is not unimodular");
    if (!same_set(image, columns_of(t.second_rays))) return fail("U maps the rays to " + list(image));
    AffineSemigroup x2 = saturate(second().chart_semigroup);
    if (!verify_witness(IsoWitness{t.witness}, s, x2)) return fail("Hilbert bases do not correspond");
    return pass("U maps the rays onto the rays of the second chart");
  });

  run(report, "char 3: two-step iteration", [&] {
    AffineSemigroup x1 = saturate(AffineSemigroup(4, listed1));
    RunConfig cfg{p3, BlowupMode::normalized, 2,
                  {canonical_subset(s.hilbert_basis(), listed, t.subset),
                   canonical_subset(x1.hilbert_basis(), listed1, t.second_subset)}};
    IterationTree tree = iterate(s, cfg);
    for (const auto& n : tree.nodes)
      if (n.depth == 2 && n.status == NodeStatus::cycle && n.iso_link->ancestor == 0)
        return pass("depth 2 isomorphic to the root");
    return fail("no depth-2 chart isomorphic to the root");
  });
}

}  // namespace

ReferenceData reference_data() { return {zero_example(), two_example(), three_example()}; }

bool VerificationReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

VerificationReport verify_counterexamples(const ReferenceData& data,
                                          std::span<const std::uint64_t> primes) {
  VerificationReport report;
  verify_zero(data.zero, primes, report);
  verify_two(data.two, report);
  verify_three(data.three, report);
  return report;
}

}  // namespace toric
