#include "crossdef/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossdef {

namespace {

using Vec = std::vector<GaussRational>;
using Mat = std::vector<Vec>;  // row-major

// Incremental row space kept in reduced echelon form; add() reports
// whether the vector enlarged the span.
struct RowSpan {
  std::vector<Vec> rows;
  std::vector<int> pivots;

  bool add(Vec v) {
    reduce(v);
    int p = pivot_of(v);
    if (p < 0) return false;
    GaussRational inv = v[p].inv();
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r][p].is_zero()) {
        GaussRational f = rows[r][p];
        for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= v[j] * f;
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  bool contains(Vec v) {
    reduce(v);
    return pivot_of(v) < 0;
  }

  int rank() const { return static_cast<int>(rows.size()); }

 private:
  static int pivot_of(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  void reduce(Vec& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      int p = pivots[r];
      if (!v[p].is_zero()) {
        GaussRational f = v[p];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= rows[r][j] * f;
      }
    }
  }
};

// Null space basis of the (nrows x ncols) matrix, with free coordinates
// chosen in column order.
std::vector<Vec> kernel_basis(Mat m, int ncols) {
  int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int sel = -1;
    for (int r = row; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    GaussRational inv = m[row][col].inv();
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r != row && !m[r][col].is_zero()) {
        GaussRational f = m[r][col];
        for (int j = 0; j < ncols; ++j) m[r][j] -= m[row][j] * f;
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, GaussRational::zero());
    v[free] = GaussRational::one();
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// A slice basis element: Koszul component index; the actual monomial is
// effective + mask.
struct SliceBasis {
  std::vector<int> comps;        // component indices present (ordered)
  std::vector<Exponents> monos;  // matching monomials
};

bool mask_fits(const Exponents& eff, const Exponents& mask) {
  for (size_t i = 0; i < eff.size(); ++i)
    if (eff[i] + mask[i] < 0) return false;
  return true;
}

// Eigencharacter exponent of the basis element (level, comp) of the slice
// under g_action(tau); the element is an eigenvector for every tau.
int eigen_pow(const CrossedContext& ctx, int tau, int sigma, const Exponents& mask,
              const Exponents& mono) {
  int tau_inv = ctx.group().inverse(tau);
  int k = ctx.monomial_char_pow(mask, tau_inv) + ctx.conjugation_pow(tau, sigma) +
          ctx.monomial_char_pow(mono, tau);
  return ((k % 4) + 4) % 4;
}

bool is_invariant(const CrossedContext& ctx, int sigma, const Exponents& mask,
                  const Exponents& mono) {
  for (int tau = 0; tau < ctx.group_size(); ++tau)
    if (eigen_pow(ctx, tau, sigma, mask, mono) != 0) return false;
  return true;
}

SliceBasis slice_basis(const CrossedContext& ctx, int sigma, const Exponents& eff, int level,
                       bool invariants_only) {
  SliceBasis b;
  if (level < 0 || level > 3) return b;
  const auto& masks = koszul_component_masks(level);
  // Order components by (grevlex monomial, index) for deterministic
  // reporting.
  std::vector<int> order(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    return grevlex_less(exp_add(eff, masks[a]), exp_add(eff, masks[c]));
  });
  for (int i : order) {
    if (!mask_fits(eff, masks[i])) continue;
    Exponents mono = exp_add(eff, masks[i]);
    if (invariants_only && !is_invariant(ctx, sigma, masks[i], mono)) continue;
    b.comps.push_back(i);
    b.monos.push_back(std::move(mono));
  }
  return b;
}

// Matrix entry of the transposed Koszul differential from component `from`
// at `level` to component `to` at level+1, with lam[v] = 1 - v(sigma).
GaussRational matrix_entry(int level, int to, int from, const std::array<GaussRational, 3>& lam) {
  auto L = [&](int v) { return lam[v]; };
  if (level == 0) {
    // column (f, g, h)
    return L(to);
  }
  if (level == 1) {
    // rows over (x,y,z) sources: xz: (-h, 0, f); yz: (0, -h, g); xy: (-g, f, 0)
    static constexpr int kVar[3][3] = {{2, -1, 0}, {-1, 2, 1}, {1, 0, -1}};
    static constexpr int kSign[3][3] = {{-1, 0, 1}, {0, -1, 1}, {-1, 1, 0}};
    int v = kVar[to][from];
    if (v < 0) return GaussRational::zero();
    return kSign[to][from] < 0 ? -L(v) : L(v);
  }
  if (level == 2) {
    // row (-g, f, h) over (xz, yz, xy) sources
    static constexpr int kVar[3] = {1, 0, 2};
    static constexpr int kSign[3] = {-1, 1, 1};
    return kSign[from] < 0 ? -L(kVar[from]) : L(kVar[from]);
  }
  return GaussRational::zero();
}

Mat build_matrix(int level, const SliceBasis& from, const SliceBasis& to,
                 const std::array<GaussRational, 3>& lam) {
  Mat m(to.comps.size(), Vec(from.comps.size(), GaussRational::zero()));
  for (size_t r = 0; r < to.comps.size(); ++r)
    for (size_t c = 0; c < from.comps.size(); ++c)
      m[r][c] = matrix_entry(level, to.comps[r], from.comps[c], lam);
  return m;
}

}  // namespace

std::vector<HHClassRow> hh_graded(const CrossedContext& ctx, int n, int d_max,
                                  bool invariants_only) {
  if (ctx.nvars() != 3)
    throw std::domain_error("hh_graded requires exactly three variables");
  if (n < 0) throw std::domain_error("hh_graded: negative degree");
  std::vector<HHClassRow> rows;
  if (n > 3) return rows;  // the complex stops at degree 3

  for (int d = 0; d <= d_max; ++d) {
    int eff_total = d - n;
    if (eff_total < -3) continue;
    // Effective multidegrees with entries >= -1 summing to eff_total.
    for (const auto& shifted : monomials_of_degree(3, eff_total + 3)) {
      Exponents eff = {shifted[0] - 1, shifted[1] - 1, shifted[2] - 1};
      for (int sigma = 0; sigma < ctx.group_size(); ++sigma) {
        std::array<GaussRational, 3> lam;
        for (int v = 0; v < 3; ++v)
          lam[v] = GaussRational::one() - ctx.data().action.char_value(v, sigma);

        SliceBasis here = slice_basis(ctx, sigma, eff, n, invariants_only);
        if (here.comps.empty()) continue;
        SliceBasis below = slice_basis(ctx, sigma, eff, n - 1, invariants_only);
        SliceBasis above = slice_basis(ctx, sigma, eff, n + 1, invariants_only);

        int ncols = static_cast<int>(here.comps.size());
        Mat out = n < 3 ? build_matrix(n, here, above, lam) : Mat{};
        Mat in = n > 0 ? build_matrix(n - 1, below, here, lam) : Mat{};

        std::vector<Vec> ker = kernel_basis(out, ncols);

        RowSpan span;
        int rank_im = 0;
        for (size_t c = 0; c < below.comps.size(); ++c) {
          Vec img(ncols);
          for (int r = 0; r < ncols; ++r) img[r] = in[r][c];
          if (span.add(img)) ++rank_im;
        }

        int dim = static_cast<int>(ker.size()) - rank_im;
        if (dim < 0) throw std::logic_error("hh_graded: image not contained in kernel");
        if (dim == 0) continue;

        // Representatives: prefer pure basis vectors (slice order = grevlex
        // on monomials), fall back to general kernel vectors.
        RowSpan ker_span;
        for (const auto& v : ker) ker_span.add(v);
        std::vector<Cochain> reps;
        auto try_add = [&](const Vec& v) {
          if (static_cast<int>(reps.size()) == dim) return;
          Vec probe = v;
          if (!ker_span.contains(probe) || !span.add(v)) return;
          Cochain c = Cochain::zero(n);
          for (int idx = 0; idx < ncols; ++idx) {
            if (v[idx].is_zero()) continue;
            c.components[here.comps[idx]] +=
                CrossedElement::basis(here.monos[idx], sigma, v[idx]);
          }
          reps.push_back(std::move(c));
        };
        for (int idx = 0; idx < ncols; ++idx) {
          Vec unit(ncols, GaussRational::zero());
          unit[idx] = GaussRational::one();
          try_add(unit);
        }
        for (const auto& v : ker) try_add(v);
        if (static_cast<int>(reps.size()) != dim)
          throw std::logic_error("hh_graded: representative completion failed");

        rows.push_back({n, sigma, eff, d, dim, std::move(reps)});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const HHClassRow& a, const HHClassRow& b) {
    return std::tie(a.total_degree, a.sigma, a.effective) <
           std::tie(b.total_degree, b.sigma, b.effective);
  });
  return rows;
}

int hh_total_dim(const std::vector<HHClassRow>& rows, int d) {
  int s = 0;
  for (const auto& r : rows)
    if (r.total_degree == d) s += r.dim;
  return s;
}

int hh_sigma_dim(const std::vector<HHClassRow>& rows, int sigma, int d) {
  int s = 0;
  for (const auto& r : rows)
    if (r.sigma == sigma && r.total_degree == d) s += r.dim;
  return s;
}

}  // namespace crossdef
