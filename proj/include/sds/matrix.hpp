#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sds/form.hpp"
#include "sds/rational.hpp"

namespace sds {

enum class Base { Tn, An, Custom };

/// Square matrix of exact rationals, row-major. The substitution alphabet of
/// the whole engine: the averaging matrix tn, the cumulative matrix an, their
/// row permutations, and user-supplied sets.
struct SubstMatrix {
  int n = 0;
  std::vector<Rat> entries;  // n*n, row-major

  SubstMatrix() = default;
  explicit SubstMatrix(int size);

  const Rat& at(int i, int j) const { return entries[std::size_t(i) * n + j]; }
  Rat& at(int i, int j) { return entries[std::size_t(i) * n + j]; }

  bool operator==(const SubstMatrix&) const = default;
};

/// Upper-triangular averaging matrix: entry (i,j) = 1/j for i <= j (1-based),
/// 0 below the diagonal. Column stochastic.
SubstMatrix build_tn(int n);

/// Upper-triangular all-ones matrix. Not column stochastic (column sums
/// 1..n); used by the cumulative-substitution variant.
SubstMatrix build_an(int n);

SubstMatrix identity_matrix(int n);
SubstMatrix permutation_matrix(const Permutation& sigma);

/// P_sigma * tn: the averaging matrix with rows permuted by sigma.
SubstMatrix build_b(const Permutation& sigma, int n);

SubstMatrix multiply(const SubstMatrix& a, const SubstMatrix& b);
SubstMatrix scale(const SubstMatrix& m, const Rat& c);

/// M * p as a column vector.
RatPoint apply(const SubstMatrix& m, const RatPoint& p);

/// g(X) = f(MX), fully expanded and canonical. Degree and homogeneity are
/// preserved (checked). The substitution kernel everything else calls.
Form substitute_linear(const Form& f, const SubstMatrix& m);

/// All entries >= 0 and every column sums to exactly 1.
bool is_column_stochastic(const SubstMatrix& m);

/// Every pair of columns shares a row where both entries are positive.
/// Exactly the matrices that strictly contract the min-max interval of any
/// non-constant nonnegative row vector under right multiplication. Throws if
/// m is not column stochastic.
bool is_stochastic_mean(const SubstMatrix& m);
/// Same predicate, reporting the first failing (0-based) column pair.
bool is_stochastic_mean(const SubstMatrix& m, std::pair<int, int>* failing);

/// Exact worst-case ratio of the row-vector spread after vs before right
/// multiplication: max over nonempty proper subsets S of rows of
/// (max_j sum_{i in S} m[i][j] - min_j sum_{i in S} m[i][j]). The spread
/// function is a max of linear functionals, so the optimum sits at a 0/1
/// vertex and subset enumeration is exact. Always < 1 for stochastic mean
/// input (throws when the predicate fails).
Rat contraction_coefficient(const SubstMatrix& m);

/// All n! permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> permutations_lex(int n);

/// One node of the substitution tree: the word sigma_1 ... sigma_m.
using PermWord = std::vector<Permutation>;

/// Left-to-right product B_{s1} B_{s2} ... B_{sm} (base Tn), or the
/// P_sigma * an analogues (base An). Empty word gives the identity.
SubstMatrix word_matrix(const PermWord& w, Base base);

/// max_j row[j] - min_j row[j] of row i.
Rat row_spread(const SubstMatrix& m, int i);

/// n affinely independent points of the standard simplex (coordinates >= 0,
/// each summing to 1). Vertex order matters for subdivision.
struct Simplex {
  std::vector<RatPoint> vertices;

  Simplex() = default;
  /// Validates the invariants; throws std::invalid_argument on a degenerate
  /// or off-simplex vertex set.
  explicit Simplex(std::vector<RatPoint> verts);

  int dim() const { return int(vertices.size()); }
};

Simplex standard_simplex(int n);

/// The n! barycentric children [P1..Pn] * B_sigma, in lexicographic sigma
/// order. Their union is the parent.
std::vector<Simplex> subdivide(const Simplex& s);

/// Exact membership: p is a convex combination of the vertices.
bool contains(const Simplex& s, const RatPoint& p);
/// Membership with all barycentric coordinates strictly positive.
bool contains_interior(const Simplex& s, const RatPoint& p);

/// Max pairwise Euclidean vertex distance. Floating point: feeds test
/// assertions only, never verdicts.
double diameter(const Simplex& s);

/// Random-point spot check of the cover condition union_i [P..] R_i = [P..]
/// required of custom substitution sets. Returns a point of the standard
/// simplex not covered by any matrix image, if one is found.
std::optional<RatPoint> find_uncovered_point(const std::vector<SubstMatrix>& mats,
                                             int trials, unsigned seed);

}  // namespace sds
