#pragma once

// Exact root systems of the simple complex Lie algebras, built from their
// Cartan matrices, plus the E6 diagram foldings.
//
// Conventions:
//   * Nodes follow Bourbaki numbering. Node i of the public API is 1-based
//     where it is a *node label* (FoldingSpec orbits) and 0-based where it is
//     an index into a vector or matrix.
//   * cartan_matrix[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).
//     Hence for B_n the short simple root alpha_n has row n-1 entry -2 at
//     column n-2, and G2 (short root first) is [[2,-3],[-1,2]].
//   * Roots are integer coefficient vectors over the simple roots.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcoh::rootsys {

using IntMatrix = std::vector<std::vector<int>>;
using RootVector = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type. make() normalizes the low-rank coincidences
/// C2 -> B2 and D3 -> A3, so two equal diagrams always compare equal.
class CartanType {
 public:
  static CartanType make(Family family, int rank);
  /// Parses "E6", "A1", "D8" ...
  static CartanType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  CartanType(Family family, int rank) : family_(family), rank_(rank) {}

  Family family_;
  int rank_;
};

IntMatrix cartan_matrix(const CartanType& type);

/// Number of roots, from the classification (used to cap the closure).
std::size_t expected_root_count(const CartanType& type);

/// Complex dimension of the simple Lie algebra of the given type.
int algebra_dimension(const CartanType& type);

/// Closes the simple roots of a Cartan matrix under the simple reflections.
/// Throws ClosureLimitExceeded once more than `cap` roots have been found,
/// which is what happens for matrices that are not of finite type.
std::vector<RootVector> generate_roots(const IntMatrix& cartan, std::size_t cap);

class RootSystem {
 public:
  RootSystem(CartanType type, IntMatrix cartan, std::vector<RootVector> roots);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank(); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  std::vector<RootVector> simple_roots() const;
  /// All roots, sorted lexicographically.
  const std::vector<RootVector>& roots() const { return roots_; }
  std::vector<RootVector> positive_roots() const;
  const RootVector& highest_root() const { return highest_; }

  bool is_root(const RootVector& v) const;
  /// Squared-length weights d_i with d_i * C[i][j] == d_j * C[j][i], minimal positive integers.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  /// Invariant form (beta, gamma) in units fixed by symmetrizer().
  long inner_product(const RootVector& beta, const RootVector& gamma) const;
  /// <beta, gamma^vee> = 2 (beta, gamma) / (gamma, gamma). gamma must be nonzero.
  int pairing(const RootVector& beta, const RootVector& gamma) const;
  /// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, i 0-based.
  RootVector reflect(std::size_t i, const RootVector& beta) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<RootVector> roots_;
  std::vector<int> symmetrizer_;
  RootVector highest_;
};

RootSystem build_root_system(const CartanType& type);

int height(const RootVector& v);

/// The unique dominant root that dominates every root in the root order.
RootVector highest_root(const RootSystem& rs);

/// B_e = B u {alpha_0}; alpha_0 is appended last, at index rank().
struct ExtendedBasis {
  RootVector alpha_0;
  std::vector<RootVector> nodes;
  std::size_t alpha_0_index = 0;
};

ExtendedBasis extended_basis(const RootSystem& rs);

/// Cartan matrix of the extended basis, same convention as cartan_matrix().
IntMatrix extended_cartan_matrix(const RootSystem& rs);

enum class FoldingConvention {
  /// Collapse the automorphism orbits of B, summing each row over the target orbit.
  kOrbitSum,
  /// Collapse the orbits of B_e (the automorphism fixes alpha_0), then
  /// restrict to the complement of the orbit of node 1.
  kOrbitRestriction,
};

std::string to_string(FoldingConvention c);
FoldingConvention parse_folding_convention(std::string_view text);

struct FoldingSpec {
  CartanType source = CartanType::make(Family::E, 6);
  /// Partition of the Bourbaki node labels 1..6.
  std::vector<std::vector<int>> node_orbits;
  FoldingConvention convention = FoldingConvention::kOrbitSum;

  /// {{1,6},{3,5},{2},{4}}: the orbits of the nontrivial diagram automorphism.
  static FoldingSpec standard(FoldingConvention convention);
  /// Six singleton orbits.
  static FoldingSpec identity(FoldingConvention convention);
};

/// Collapses node orbits (0-based indices into `cartan`). Entry (I, J) is
/// sum_{j in J} cartan[i][j] for a representative i in I; `transpose` returns
/// the transposed assembly. Throws InvalidFolding if the orbits do not
/// partition the nodes or the entry depends on the choice of representative.
IntMatrix folded_cartan_matrix(const IntMatrix& cartan,
                               const std::vector<std::vector<std::size_t>>& orbits,
                               bool transpose = false);

CartanType fold_e6(const FoldingSpec& spec);

/// Identifies a finite-type indecomposable Cartan matrix up to node permutation.
CartanType identify_cartan_type(const IntMatrix& matrix);

}  // namespace orbitcoh::rootsys
