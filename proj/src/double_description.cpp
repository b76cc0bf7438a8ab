#include "toric/detail/double_description.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric::detail {

namespace {

// Component of r orthogonal to span(lines), scaled to a primitive integer
// vector with the same direction.
LatticeVector project_off_lines(const LatticeVector& r, const std::vector<LatticeVector>& lines) {
  if (lines.empty()) return r.primitive();
  const std::size_t k = lines.size();
  const std::size_t dim = r.size();
  // Solve (L L^T) c = L r, then r - L^T c.
  IntMatrix gram(k, k);
  LatticeVector rhs = LatticeVector::zero(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(lines[i], lines[j]);
    rhs[i] = dot(lines[i], r);
  }
  auto c = solve_rational(gram, rhs);
  std::vector<Rational> proj(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    proj[t] = Rational(r[t]);
    for (std::size_t i = 0; i < k; ++i) proj[t] -= (*c)[i] * Rational(lines[i][t]);
  }
  Integer den = 1;
  for (const auto& q : proj) den = boost::multiprecision::lcm(den, denominator(q));
  LatticeVector out = LatticeVector::zero(dim);
  for (std::size_t t = 0; t < dim; ++t) out[t] = numerator(proj[t]) * (den / denominator(proj[t]));
  return out.primitive();
}

void dedupe(std::vector<LatticeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GeneratorDescription double_description(std::span<const LatticeVector> inequalities,
                                        std::span<const LatticeVector> equations,
                                        std::size_t dim) {
  std::vector<LatticeVector> constraints;
  constraints.reserve(inequalities.size() + 2 * equations.size());
  for (const auto& e : equations) {
    if (e.size() != dim) throw DimensionError("constraint length mismatch");
    constraints.push_back(e);
    constraints.push_back(-e);
  }
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw DimensionError("constraint length mismatch");
    constraints.push_back(a);
  }

  std::vector<LatticeVector> lines;
  for (std::size_t i = 0; i < dim; ++i) lines.push_back(LatticeVector::unit(dim, i));
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const auto& a : constraints) {
    if (a.is_zero()) continue;

    auto it = std::find_if(lines.begin(), lines.end(),
                           [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (it != lines.end()) {
      // The halfspace cuts the lineality space: one line turns into a ray and
      // everything else is sheared onto the hyperplane <a, .> = 0.
      LatticeVector l0 = *it;
      lines.erase(it);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = -l0;
        s0 = -s0;
      }
      for (auto& l : lines) {
        Integer s = dot(a, l);
        if (s != 0) l = (s0 * l - s * l0).primitive();
      }
      for (auto& r : rays) {
        Integer s = dot(a, r);
        if (s != 0) r = (s0 * r - s * l0).primitive();
      }
      rays.push_back(l0.primitive());
      processed.push_back(a);
      continue;
    }

    std::vector<LatticeVector> pos, neg, next;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rays) {
      Integer s = dot(a, r);
      if (s > 0) {
        pos.push_back(r);
        pos_val.push_back(s);
      } else if (s < 0) {
        neg.push_back(r);
        neg_val.push_back(s);
      } else {
        next.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }
    // Two rays are adjacent iff the constraints tight at both cut out a
    // face of dimension lines + 2.
    const bool has_edges = dim >= lines.size() + 2;
    const std::size_t edge_rank = has_edges ? dim - lines.size() - 2 : 0;
    for (std::size_t pi = 0; has_edges && pi < pos.size(); ++pi) {
      for (std::size_t ni = 0; ni < neg.size(); ++ni) {
        std::vector<LatticeVector> common;
        for (const auto& c : processed)
          if (dot(c, pos[pi]) == 0 && dot(c, neg[ni]) == 0) common.push_back(c);
        if (common.size() < edge_rank) continue;
        if (rank(common, dim) != edge_rank) continue;
        next.push_back((pos_val[pi] * neg[ni] - neg_val[ni] * pos[pi]).primitive());
      }
    }
    next.insert(next.end(), pos.begin(), pos.end());
    dedupe(next);
    rays = std::move(next);
    processed.push_back(a);
  }

  GeneratorDescription out;
  if (!lines.empty()) {
    IntMatrix hnf = hermite_normal_form(IntMatrix::from_rows(lines, dim)).h;
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
      LatticeVector row = hnf.row(i);
      if (!row.is_zero()) out.lines.push_back(std::move(row));
    }
  }
  for (const auto& r : rays) {
    LatticeVector p = project_off_lines(r, out.lines);
    if (!p.is_zero()) out.rays.push_back(std::move(p));
  }
  dedupe(out.rays);
  return out;
}

}  // namespace toric::detail
