#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "known_cones.hpp"
#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/iso.hpp"
#include "toric/nash.hpp"

using namespace toric;

namespace {

AffineSemigroup mapped(const IntMatrix& u, const AffineSemigroup& s) {
  std::vector<LatticeVector> g;
  for (const auto& h : s.hilbert_basis()) g.push_back(u * h);
  return AffineSemigroup(s.ambient_rank(), g);
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(IsoTest, FindsWitnessForMappedSemigroup) {
  auto s = known::saturated(known::omega());
  IntMatrix u{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 1, 0}, {-1, 0, 3, 1}};
  auto t = mapped(u, s);
  auto w = find_iso(s, t);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(*w, s, t));
  EXPECT_TRUE(verify_witness(w->inverse(), t, s));
  auto back = find_iso(t, s);
  ASSERT_TRUE(back);
  EXPECT_TRUE(verify_witness(*back, t, s));
}

TEST(IsoTest, RandomPairsAreAlwaysFound) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> e(-4, 4);
  int checked = 0;
  while (checked < 50) {
    const std::size_t d = 2 + checked % 2;
    std::vector<oracle::Vec> gens(d + 1, oracle::Vec(d));
    for (auto& g : gens)
      for (auto& x : g) x = e(rng);
    if (!oracle::facet_normals(gens, d)) continue;
    ++checked;
    auto s = saturate(AffineSemigroup(d, oracle::to_lattices(gens)));
    auto t = mapped(oracle::random_unimodular(d, rng), s);
    auto w = find_iso(s, t);
    ASSERT_TRUE(w) << "pair " << checked;
    EXPECT_TRUE(verify_witness(*w, s, t));
    EXPECT_TRUE(as_set(apply(*w, s).generators()) == as_set(t.hilbert_basis().elements()));
  }
}

TEST(IsoTest, NonIsomorphicSemigroups) {
  auto n2 = saturate(AffineSemigroup(IntMatrix::identity(2)));
  auto a1 = saturate(AffineSemigroup(2, {LatticeVector{1, 0}, LatticeVector{1, 2}}));
  EXPECT_FALSE(find_iso(n2, a1));
  // Index 3 cones of different types.
  auto b = saturate(AffineSemigroup(2, {LatticeVector{1, 0}, LatticeVector{1, 3}}));
  auto c = saturate(AffineSemigroup(2, {LatticeVector{1, 0}, LatticeVector{2, 3}}));
  ASSERT_EQ(b.hilbert_basis().size(), 4u);
  ASSERT_EQ(c.hilbert_basis().size(), 3u);
  EXPECT_FALSE(find_iso(b, c));
  auto d = saturate(AffineSemigroup(2, {LatticeVector{1, 0}, LatticeVector{1, 4}}));
  auto e = saturate(AffineSemigroup(2, {LatticeVector{1, 0}, LatticeVector{3, 4}}));
  ASSERT_EQ(d.hilbert_basis().size(), 5u);
  ASSERT_EQ(e.hilbert_basis().size(), 3u);
  EXPECT_FALSE(find_iso(d, e));
}

// Cone((0,1),(n,-q)) with gcd(n,q) = 1 has type (n,q); two such cones are
// lattice-equivalent exactly when q' = q or q q' = 1 mod n.
TEST(IsoTest, CyclicQuotientTypes) {
  for (int n = 2; n <= 9; ++n)
    for (int q = 1; q < n; ++q)
      for (int r = 1; r < n; ++r) {
        if (std::gcd(n, q) != 1 || std::gcd(n, r) != 1) continue;
        auto x = saturate(AffineSemigroup(2, {LatticeVector{0, 1}, LatticeVector{n, -q}}));
        auto y = saturate(AffineSemigroup(2, {LatticeVector{0, 1}, LatticeVector{n, -r}}));
        const bool want = q == r || (q * r) % n == 1;
        auto w = find_iso(x, y);
        EXPECT_EQ(w.has_value(), want) << "(" << n << "," << q << ") vs (" << n << "," << r << ")";
        if (w) EXPECT_TRUE(verify_witness(*w, x, y));
      }
}

TEST(IsoTest, Errors) {
  auto n2 = saturate(AffineSemigroup(IntMatrix::identity(2)));
  auto n3 = saturate(AffineSemigroup(IntMatrix::identity(3)));
  EXPECT_THROW(find_iso(n2, n3), ArgumentError);
  AffineSemigroup line(2, {LatticeVector{1, 0}, LatticeVector{-1, 0}, LatticeVector{0, 1}});
  EXPECT_THROW(find_iso(line, n2), StructureError);
  EXPECT_FALSE(verify_witness(IsoWitness{IntMatrix{{2, 0}, {0, 1}}}, n2, n2));
}

TEST(IsoTest, CharacteristicZeroWitness) {
  auto s = known::saturated(known::omega());
  auto h = known::omega_basis();
  ChartSpec c = make_chart(s, known::subset_of(s.hilbert_basis(), h, {1, 2, 3, 5}), Characteristic(0));
  IsoWitness u{known::omega_witness()};
  EXPECT_TRUE(verify_witness(u, s, c.chart_semigroup));
  EXPECT_EQ(u.matrix * h[0], h[5] - h[4]);
  EXPECT_EQ(u.matrix * h[3], h[0]);
  auto w = find_iso(s, c.chart_semigroup);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(*w, s, c.chart_semigroup));
}

TEST(IsoTest, CharacteristicTwoWitness) {
  auto s = known::saturated(known::omega2());
  auto h = known::omega2_basis();
  ChartSpec c = make_chart(s, known::subset_of(s.hilbert_basis(), h, {1, 2, 4, 7}), Characteristic(2));
  auto sat = saturate(c.chart_semigroup);
  EXPECT_TRUE(verify_witness(IsoWitness{known::omega2_witness()}, s, sat));
  EXPECT_FALSE(verify_witness(IsoWitness{known::omega2_witness()}, s, c.chart_semigroup));
}

TEST(IsoTest, CharacteristicThreeWitnessMapsRays) {
  auto s = known::saturated(known::omega30());
  IntMatrix u = known::omega3_witness();
  ASSERT_TRUE(is_unimodular(u));
  std::set<LatticeVector> image;
  for (const auto& r : primitive_rays(s.cone())) image.insert(u * r);
  EXPECT_EQ(image, as_set(known::omega32().columns()));
  EXPECT_TRUE(verify_witness(IsoWitness{u}, s, known::saturated(known::omega32())));
}
