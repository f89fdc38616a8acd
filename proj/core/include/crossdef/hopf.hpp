#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossdef/gaussian.hpp"

namespace crossdef {

/// The 8-dimensional bialgebra generated by D, D', beta with
///   D^2 = 0 = D'^2,  DD' = D'D,  D beta = -beta D,  D' beta = -beta D',
///   beta^2 = 1,
/// comultiplication  D -> D (x) beta + 1 (x) D,  D' -> D' (x) 1 + beta (x) D',
/// beta -> beta (x) beta,  and counit (D, D', beta) -> (0, 0, 1).
///
/// Basis: ordered words D^a D'^b beta^c addressed by the bit pattern
/// a | b<<1 | c<<2.
namespace h1 {

inline constexpr int kDim = 8;
inline constexpr std::uint8_t kOne = 0;
inline constexpr std::uint8_t kD = 1;
inline constexpr std::uint8_t kDp = 2;
inline constexpr std::uint8_t kBeta = 4;

struct BasisProduct {
  bool zero = false;
  int sign = 1;  // +1 or -1
  std::uint8_t idx = 0;
};
BasisProduct mul_basis(std::uint8_t x, std::uint8_t y);

/// epsilon on a basis word: 1 when no D / D' letters, else 0.
int counit_basis(std::uint8_t x);

std::string basis_name(std::uint8_t x);

}  // namespace h1

/// Element of (H1^{(x) slots})[t]: a t-polynomial over tuples of H1 basis
/// words with Gaussian-rational coefficients.  Multiplication is
/// slot-wise (ordinary tensor product of algebras, no sign rule beyond
/// the H1 relations) and t-degrees add.
class HopfTensor {
 public:
  using BasisTuple = std::vector<std::uint8_t>;

  explicit HopfTensor(int slots) : slots_(slots) {}
  static HopfTensor zero(int slots) { return HopfTensor(slots); }
  static HopfTensor unit(int slots);
  /// Basis word in one slot, identity elsewhere.
  static HopfTensor generator(int slots, int slot, std::uint8_t word);

  int slots() const { return slots_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, BasisTuple>, GaussRational>& terms() const { return terms_; }

  void add_term(int tdeg, const BasisTuple& basis, const GaussRational& c);

  HopfTensor operator+(const HopfTensor& o) const;
  HopfTensor operator-(const HopfTensor& o) const;
  HopfTensor operator*(const HopfTensor& o) const;
  HopfTensor operator*(const GaussRational& c) const;
  HopfTensor shifted_t(int dt) const;

  /// Concatenates slot blocks (t-degrees add).
  HopfTensor tensor(const HopfTensor& o) const;

  /// Applies the comultiplication to the width-r block starting at pos;
  /// the block doubles in place, everything else rides along.
  HopfTensor coproduct_block(int pos, int r) const;
  /// Applies the counit to the width-r block starting at pos (block
  /// removed).
  HopfTensor counit_block(int pos, int r) const;
  /// Swaps the two width-r halves (slots must equal 2r).
  HopfTensor flip_halves() const;

  bool operator==(const HopfTensor& o) const = default;

 private:
  int slots_;
  std::map<std::pair<int, BasisTuple>, GaussRational> terms_;
};

/// F_i = 1 (x) 1 + t D_i (x) D_i' over H = H1^{(x) width}; index i selects
/// the slot.  With width 1 this is the single-factor formula; width 3
/// builds the factors of the triple product.
HopfTensor udf_factor(int width, int index);

/// Verifies the two universal-deformation-formula identities for
/// F in (H (x) H)[t], H = H1^{(x) width}: the counit laws and
/// [(Delta (x) id)(F)] (F (x) 1) == [(id (x) Delta)(F)] (1 (x) F).
/// Returns the failing axiom label, if any: "counit-left",
/// "counit-right", "coassociativity-pentagon".
std::optional<std::string> udf_check(const HopfTensor& F, int width);

struct NoncocommutativityWitness {
  std::uint8_t element;   // basis word whose coproduct is not symmetric
  HopfTensor coproduct;   // Delta(element)
  HopfTensor flipped;     // flip of the above, differs from it
};

/// Exhibits D as an element with Delta(D) != flip(Delta(D)).
NoncocommutativityWitness noncocommutativity_witness();

/// Bialgebra axioms for H1 verified exactly over the basis:
/// coassociativity, counit laws, and Delta / epsilon being algebra maps.
/// Returns the failing axiom label, if any.
std::optional<std::string> h1_bialgebra_check();

}  // namespace crossdef
