#pragma once

// Charts of the Nash blowup and the normalized Nash blowup of an affine
// toric variety X(S), described through the Hilbert basis of S.
//
// A subset A = {h_i1, ..., h_id} of the Hilbert basis indexes a chart when
// det_p(h_i1 ... h_id) != 0. For each h in A, G_A(h) collects g - h over the
// g outside A whose substitution for h keeps det_p nonzero; S_A is generated
// by the Hilbert basis together with all G_A(h), and the chart is kept only
// when S_A is pointed. The normalized charts are the saturations of these.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/semigroup.hpp"

namespace toric {

/// Ascending 0-based indices into a Hilbert basis.
using Subset = std::vector<std::size_t>;

/// Columns h_i for i in `subset`, in subset order.
IntMatrix subset_matrix(const HilbertBasis& basis, const Subset& subset);

/// All d-element subsets with nonzero det_p, in lexicographic order.
std::vector<Subset> valid_subsets(const HilbertBasis& basis, Characteristic p);

/// {g - h_pivot : g outside the subset, det_p nonzero after g replaces
/// h_pivot in its position}, ordered by the index of g. `pivot` is a basis
/// index belonging to the subset.
std::vector<LatticeVector> gamma_set(const HilbertBasis& basis, const Subset& subset,
                                     std::size_t pivot, Characteristic p);

struct ChartSpec {
  AffineSemigroup base;
  Subset subset;
  Characteristic characteristic;
  std::vector<std::vector<LatticeVector>> gamma_sets;  // one per element of subset
  std::vector<LatticeVector> chart_generators;         // Hilbert basis, then the gamma sets
  AffineSemigroup chart_semigroup;
  bool pointed;
};

/// Builds the chart for one valid subset; throws ArgumentError if det_p
/// vanishes on it.
ChartSpec make_chart(const AffineSemigroup& base, const Subset& subset, Characteristic p);

/// Every chart over a valid subset, pointed or not.
std::vector<ChartSpec> all_charts(const AffineSemigroup& s, Characteristic p);

/// Covering charts of the Nash blowup: valid subsets with S_A pointed.
std::vector<ChartSpec> nash_charts(const AffineSemigroup& s, Characteristic p);

/// A chart of the normalized Nash blowup together with every subset whose
/// saturated chart semigroup coincides with it.
struct NormalizedChart {
  std::vector<Subset> subsets;
  AffineSemigroup semigroup;
};

std::vector<NormalizedChart> normalized_nash_charts(const AffineSemigroup& s, Characteristic p);

struct NashPolyhedronVertex {
  LatticeVector vertex;
  ChartSpec chart;
};

/// Vertices of N_p(S) = Conv(sum of A over valid A) + Cone(S), found via
/// pointedness of S_A and deduplicated by vertex. With cross_check set,
/// every vertex is also confirmed against the explicit hull and a mismatch
/// throws StructureError.
std::vector<NashPolyhedronVertex> nash_polyhedron_vertices(const AffineSemigroup& s,
                                                           Characteristic p,
                                                           bool cross_check = false);

/// The points sum(A) over all valid subsets A.
std::vector<LatticeVector> nash_polyhedron_points(const AffineSemigroup& s, Characteristic p);

/// Whether v is a vertex of Conv(points) + c, decided by exact cone
/// membership of (v, 1) in one dimension higher.
bool is_hull_vertex(const LatticeVector& v, const std::vector<LatticeVector>& points,
                    const Cone& c);

/// Cone(N_p(S) - v).
Cone nash_polyhedron_tangent_cone(const AffineSemigroup& s, Characteristic p,
                                  const LatticeVector& v);

/// The d Hilbert basis elements are a lattice basis, i.e. S is N^d.
bool is_smooth(const AffineSemigroup& s);

}  // namespace toric
