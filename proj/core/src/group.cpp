#include "crossdef/group.hpp"

#include <stdexcept>

namespace crossdef {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int m : factors_) {
    if (m < 1) throw std::invalid_argument("AbelianGroup: cyclic orders must be >= 1");
    size_ *= m;
  }
  add_.resize(static_cast<size_t>(size_) * size_);
  inv_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    GroupTuple ta = tuple_of(a);
    GroupTuple neg(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) neg[i] = (factors_[i] - ta[i]) % factors_[i];
    inv_[a] = rank_of(neg);
    for (int b = 0; b < size_; ++b) {
      GroupTuple tb = tuple_of(b);
      GroupTuple sum(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i) sum[i] = (ta[i] + tb[i]) % factors_[i];
      add_[static_cast<size_t>(a) * size_ + b] = rank_of(sum);
    }
  }
}

int AbelianGroup::rank_of(const GroupTuple& t) const {
  if (t.size() != factors_.size()) throw std::invalid_argument("group tuple arity mismatch");
  int r = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int v = t[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r = r * factors_[i] + v;
  }
  return r;
}

GroupTuple AbelianGroup::tuple_of(int rank) const {
  GroupTuple t(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    t[i] = rank % factors_[i];
    rank /= factors_[i];
  }
  return t;
}

DiagonalAction::DiagonalAction(const AbelianGroup& group,
                               std::vector<std::vector<int>> char_pows)
    : char_pows_(std::move(char_pows)) {
  for (auto& col : char_pows_) {
    if (static_cast<int>(col.size()) != group.size())
      throw std::invalid_argument("DiagonalAction: character table size mismatch");
    for (int& k : col) k = ((k % 4) + 4) % 4;
    if (col[AbelianGroup::identity()] != 0)
      throw std::invalid_argument("DiagonalAction: character not 1 at identity");
    for (int a = 0; a < group.size(); ++a)
      for (int b = 0; b < group.size(); ++b)
        if ((col[a] + col[b]) % 4 != col[group.add(a, b)])
          throw std::invalid_argument("DiagonalAction: map is not a character");
  }
}

Cocycle::Cocycle(const AbelianGroup& group, std::vector<std::vector<int>> pows)
    : pows_(std::move(pows)) {
  if (static_cast<int>(pows_.size()) != group.size())
    throw std::invalid_argument("Cocycle: table size mismatch");
  for (auto& row : pows_) {
    if (static_cast<int>(row.size()) != group.size())
      throw std::invalid_argument("Cocycle: table size mismatch");
    for (int& k : row) k = ((k % 4) + 4) % 4;
  }
  for (int s = 0; s < group.size(); ++s)
    if (pows_[0][s] != 0 || pows_[s][0] != 0)
      throw std::invalid_argument("Cocycle: not normalized at the identity");
}

std::optional<Cocycle::Violation> Cocycle::validate(const AbelianGroup& group) const {
  const int n = group.size();
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        int lhs = pows_[s][t] + pows_[r][group.add(s, t)];
        int rhs = pows_[r][s] + pows_[group.add(r, s)][t];
        if ((lhs - rhs) % 4 != 0) return Violation{r, s, t};
      }
  return std::nullopt;
}

int GroupData::element_by_name(const std::string& s) const {
  for (size_t i = 0; i < element_names.size(); ++i)
    if (element_names[i] == s) return static_cast<int>(i);
  return -1;
}

GroupData make_klein_preset(bool discrete_torsion) {
  AbelianGroup g({2, 2});
  // Element ranks: 0 = identity, 1 = a = (0,1), 2 = b = (1,0), 3 = c = ab.
  // a negates x and z, b negates x and y, c negates y and z.
  std::vector<std::vector<int>> chars = {
      {0, 2, 2, 0},  // x
      {0, 0, 2, 2},  // y
      {0, 2, 0, 2},  // z
  };
  std::vector<std::vector<int>> alpha(4, std::vector<int>(4, 0));
  if (discrete_torsion) {
    // alpha(a,b) = i = -alpha(b,a), alpha(b,c) = i = -alpha(c,b),
    // alpha(c,a) = i = -alpha(a,c); diagonal and identity rows are 1.
    alpha[1][2] = 1; alpha[2][1] = 3;
    alpha[2][3] = 1; alpha[3][2] = 3;
    alpha[3][1] = 1; alpha[1][3] = 3;
  }
  GroupData data{g, DiagonalAction(g, chars), Cocycle(g, alpha),
                 {"x", "y", "z"},
                 {"1", "a", "b", "c"},
                 discrete_torsion ? "klein-dt" : "klein-trivial"};
  return data;
}

GroupData make_preset(const std::string& name) {
  if (name == "klein-dt") return make_klein_preset(true);
  if (name == "klein-trivial") return make_klein_preset(false);
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace crossdef
