#pragma once

#include "crossdef/crossed.hpp"

namespace crossdef {

/// Monomial-counting oracle for the closed-form descriptions of the Klein
/// crossed-product cohomology.  Everything here is direct enumeration of
/// exponent parities and single-variable families: it shares no code with
/// the slice/linear-algebra computation and serves as its independent
/// cross-check.
///
/// Group element ranks follow make_klein_preset: 0 = 1, 1 = a, 2 = b,
/// 3 = c, with a fixing y, b fixing z, c fixing x.

/// dim of the degree-d part of the sigma-component of HH^n(R, A).  The
/// R-bimodule structure ignores the cocycle, so there is no preset flag.
int klein_hh_rA_dim(int n, int sigma, int d);

/// dim of the degree-d part of the sigma-component of HH^n(A), i.e. the
/// G-invariants, which do depend on whether the cocycle is twisted.
int klein_hh_A_dim(bool discrete_torsion, int n, int sigma, int d);

}  // namespace crossdef
