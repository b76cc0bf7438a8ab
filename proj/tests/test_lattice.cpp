#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
  return m;
}

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

}  // namespace

TEST(IntegerTest, FloorAndCeilingDivision) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(mod_floor(-7, 3), 2);
  EXPECT_EQ(mod_floor(7, -3), 1);
}

TEST(IntegerTest, ExtendedGcdBezout) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-500, 500);
  for (int i = 0; i < 200; ++i) {
    Integer a = e(rng), b = e(rng);
    auto r = extended_gcd(a, b);
    EXPECT_GE(r.g, 0);
    EXPECT_EQ(r.s * a + r.t * b, r.g);
    EXPECT_EQ(r.g, gcd(a, b));
  }
}

TEST(LatticeVectorTest, ContentAndPrimitive) {
  LatticeVector v{4, -6, 10};
  EXPECT_EQ(v.content(), 2);
  EXPECT_EQ(v.primitive(), (LatticeVector{2, -3, 5}));
  EXPECT_TRUE(LatticeVector::zero(3).primitive().is_zero());
  EXPECT_EQ(to_string(LatticeVector{1, 2, -1, 0}), "(1, 2, -1, 0)");
  EXPECT_THROW(LatticeVector({1, 2}) + LatticeVector({1, 2, 3}), DimensionError);
}

TEST(CharacteristicTest, AcceptsZeroAndPrimesOnly) {
  EXPECT_NO_THROW(Characteristic(0));
  EXPECT_NO_THROW(Characteristic(2));
  EXPECT_NO_THROW(Characteristic(3));
  EXPECT_NO_THROW(Characteristic(101));
  EXPECT_THROW(Characteristic(1), ArgumentError);
  EXPECT_THROW(Characteristic(4), ArgumentError);
  EXPECT_THROW(Characteristic(91), ArgumentError);
}

TEST(DeterminantTest, AgreesWithLeibnizExpansion) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      IntMatrix m = random_matrix(n, n, -9, 9, rng);
      EXPECT_EQ(det(m), oracle::leibniz_det(to_mat(m))) << m;
    }
}

TEST(DeterminantTest, IsMultiplicative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix a = random_matrix(n, n, -5, 5, rng), b = random_matrix(n, n, -5, 5, rng);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(DeterminantTest, ModularDeterminantIsCanonicalResidue) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix m = random_matrix(4, 4, -9, 9, rng);
      Integer d = det_p(m, Characteristic(p));
      EXPECT_GE(d, 0);
      EXPECT_LT(d, p);
      EXPECT_EQ(mod_floor(det(m) - d, Integer(p)), 0);
    }
  }
  IntMatrix m{{2, 1}, {1, 3}};
  EXPECT_EQ(det_p(m, Characteristic(0)), 5);
  EXPECT_EQ(det_p(m, Characteristic(5)), 0);
}

TEST(DeterminantTest, HandlesEntriesBeyondMachineWords) {
  Integer big("123456789012345678901234567890");
  IntMatrix m{{big, 1}, {1, big}};
  EXPECT_EQ(det(m), big * big - 1);
  EXPECT_EQ(rank(m), 2u);
}

TEST(RankTest, MatchesMinorCriterion) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 4;
    IntMatrix m = random_matrix(r, c, -2, 2, rng);
    std::size_t k = rank(m);
    EXPECT_EQ(k == r, oracle::gcd_of_maximal_minors(to_mat(m)) != 0) << m;
    EXPECT_EQ(k, rank(m.transpose()));
  }
}

TEST(AdjugateTest, TimesMatrixIsDeterminantTimesIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(n, n, -6, 6, rng);
    IntMatrix expected(n, n);
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = det(m);
    EXPECT_EQ(adjugate(m) * m, expected);
    EXPECT_EQ(m * adjugate(m), expected);
  }
}

TEST(UnimodularTest, InverseAndRejection) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix u = oracle::random_unimodular(4, rng, 10);
    ASSERT_TRUE(is_unimodular(u));
    EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(4));
  }
  EXPECT_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), ArgumentError);
}

TEST(HermiteTest, NormalFormInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    IntMatrix m = random_matrix(r, c, -8, 8, rng);
    auto [h, u] = hermite_normal_form(m);
    ASSERT_TRUE(is_unimodular(u));
    ASSERT_EQ(u * m, h);
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
      if (h(row, col) == 0) {
        for (std::size_t i = row; i < r; ++i) EXPECT_EQ(h(i, col), 0);
        continue;
      }
      EXPECT_GT(h(row, col), 0);
      for (std::size_t i = row + 1; i < r; ++i) EXPECT_EQ(h(i, col), 0);
      for (std::size_t i = 0; i < row; ++i) {
        EXPECT_GE(h(i, col), 0);
        EXPECT_LT(h(i, col), h(row, col));
      }
      ++row;
    }
    EXPECT_EQ(row, rank(m));
    for (std::size_t i = row; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(h(i, j), 0);
  }
}

TEST(HermiteTest, LatticeIndexIsGcdOfMaximalMinors) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + trial % 3, n = d + trial % 3;
    IntMatrix m = random_matrix(d, n, -4, 4, rng);
    EXPECT_EQ(lattice_index(m), oracle::gcd_of_maximal_minors(to_mat(m))) << m;
  }
}

TEST(SolveRationalTest, FindsSolutionsAndRejectsInconsistentSystems) {
  IntMatrix m{{2, 0}, {0, 3}};
  auto x = solve_rational(m, LatticeVector{1, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1, 2));
  EXPECT_EQ((*x)[1], Rational(1, 3));
  EXPECT_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, LatticeVector{1, 2}));
}

TEST(NonnegativeSolverTest, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(-3, 3), nb(0, 6);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 2 + trial % 2, n = 2 + trial % 3;
    std::vector<oracle::Vec> cols(n, oracle::Vec(d));
    for (auto& c : cols)
      for (auto& x : c) x = e(rng);
    oracle::Vec b(d, 0);
    if (trial % 4) {
      for (auto& c : cols) {
        int k = nb(rng) / 3;
        for (std::size_t i = 0; i < d; ++i) b[i] += k * c[i];
      }
    } else {
      for (auto& x : b) x = e(rng);
    }
    int bound = nb(rng);
    auto want = oracle::smallest_nonneg_solution(cols, b, bound);
    auto got = solve_nonneg_integer(IntMatrix::from_columns(oracle::to_lattices(cols), d),
                                    oracle::to_lattice(b), bound);
    ASSERT_EQ(want.has_value(), got.has_value()) << "trial " << trial;
    if (!want) continue;
    ++solved;
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ((*got)[j], (*want)[j]) << "trial " << trial;
  }
  EXPECT_GT(solved, 100);
}
