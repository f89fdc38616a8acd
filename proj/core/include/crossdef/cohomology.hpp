#pragma once

#include <vector>

#include "crossdef/koszul.hpp"

namespace crossdef {

/// One graded piece of HH^n: a sigma-component slice at a fixed effective
/// multidegree together with its dimension and chosen representatives.
///
/// The differentials add one variable step per matrix entry, so the
/// complex splits over the "effective" multidegree: the multidegree of a
/// component's monomial minus the component's variable mask.  Entries of
/// the effective multidegree can be -1.
struct HHClassRow {
  int n = 0;               // cohomological degree
  int sigma = 0;           // group element rank
  Exponents effective;     // effective multidegree of the slice
  int total_degree = 0;    // polynomial degree of the representative monomials
  int dim = 0;
  std::vector<Cochain> basis;  // dim representatives, deterministic order
};

/// Computes ker/im of the Koszul cochain complex with coefficients in A,
/// slice by slice, for all representative monomial degrees <= d_max.
/// With invariants_only the complex is first restricted to G-invariants
/// (equivalently, projected by the Reynolds operator).  Rows with dim 0
/// are omitted; rows are ordered by (total_degree, sigma, effective).
/// Requires a 3-variable context.  HH^n vanishes for n > 3.
std::vector<HHClassRow> hh_graded(const CrossedContext& ctx, int n, int d_max,
                                  bool invariants_only);

/// Sum of dims over sigma at fixed representative degree.
int hh_total_dim(const std::vector<HHClassRow>& rows, int d);
/// Sum of dims at fixed (sigma, degree).
int hh_sigma_dim(const std::vector<HHClassRow>& rows, int sigma, int d);

}  // namespace crossdef
