#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossdef/gaussian.hpp"

namespace crossdef {

/// Residue tuple (one entry per cyclic factor).
using GroupTuple = std::vector<int>;

/// Finite abelian group Z/m1 x ... x Z/mr.  Elements are addressed either
/// as residue tuples or by their mixed-radix rank (first factor most
/// significant); the identity has rank 0.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);

  int size() const { return size_; }
  const std::vector<int>& factors() const { return factors_; }

  int rank_of(const GroupTuple& t) const;
  GroupTuple tuple_of(int rank) const;

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * size_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }

 private:
  std::vector<int> factors_;
  int size_ = 1;
  std::vector<int> add_;  // size x size rank table
  std::vector<int> inv_;
};

/// Diagonal action of an abelian group on polynomial variables.  Each
/// variable is an eigenvector of every group element; the eigenvalue is a
/// 4th root of unity stored as the exponent k of i^k.
class DiagonalAction {
 public:
  DiagonalAction() = default;
  /// char_pows[v][g] = k with v(sigma_g) = i^k.  Validates that every
  /// column map is a character (multiplicative, 1 at the identity).
  DiagonalAction(const AbelianGroup& group, std::vector<std::vector<int>> char_pows);

  int nvars() const { return static_cast<int>(char_pows_.size()); }

  /// Exponent k of i^k by which sigma scales variable var.
  int char_pow(int var, int sigma) const { return char_pows_[var][sigma]; }
  GaussRational char_value(int var, int sigma) const {
    return GaussRational::root_of_unity_pow(char_pows_[var][sigma]);
  }

 private:
  std::vector<std::vector<int>> char_pows_;
};

/// Scalar-valued 2-cocycle on G, normalized (alpha(1,s) = alpha(s,1) = 1),
/// with values in 4th roots of unity stored as i-exponents.
class Cocycle {
 public:
  Cocycle() = default;
  /// pows[s][t] = k with alpha(sigma_s, sigma_t) = i^k.  Checks
  /// normalization; the 2-cocycle identity is checked by validate().
  Cocycle(const AbelianGroup& group, std::vector<std::vector<int>> pows);

  int pow(int s, int t) const { return pows_[s][t]; }
  GaussRational value(int s, int t) const {
    return GaussRational::root_of_unity_pow(pows_[s][t]);
  }

  struct Violation {
    int rho, sigma, tau;
  };
  /// Checks alpha(s,t) alpha(r,st) = alpha(r,s) alpha(rs,t) over all |G|^3
  /// triples; returns the first failing triple if any.
  std::optional<Violation> validate(const AbelianGroup& group) const;

 private:
  std::vector<std::vector<int>> pows_;
};

/// A group with a diagonal action and a cocycle: everything needed to
/// twist a polynomial ring into a crossed product.
struct GroupData {
  AbelianGroup group;
  DiagonalAction action;
  Cocycle cocycle;
  std::vector<std::string> variable_names;  // size nvars
  std::vector<std::string> element_names;   // size |G|, index order
  std::string name;                         // preset name, may be empty

  int element_by_name(const std::string& s) const;  // -1 if unknown
};

/// Klein four-group acting on C[x,y,z] by pairwise sign flips, with the
/// trivial cocycle ("klein-trivial") or the discrete-torsion cocycle
/// ("klein-dt") whose off-diagonal values are +-i.
GroupData make_klein_preset(bool discrete_torsion);

/// Looks up "klein-trivial" / "klein-dt"; throws std::invalid_argument on
/// unknown names.
GroupData make_preset(const std::string& name);

}  // namespace crossdef
