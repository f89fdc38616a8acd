#include "crossdef/hopf.hpp"

#include <stdexcept>

namespace crossdef {

namespace h1 {

BasisProduct mul_basis(std::uint8_t x, std::uint8_t y) {
  const int a1 = x & 1, b1 = (x >> 1) & 1, c1 = (x >> 2) & 1;
  const int a2 = y & 1, b2 = (y >> 1) & 1, c2 = (y >> 2) & 1;
  if ((a1 & a2) || (b1 & b2)) return {true, 1, 0};
  // Move D^a2 D'^b2 left through beta^c1; each crossing flips the sign.
  int sign = (c1 == 1 && (a2 + b2) % 2 == 1) ? -1 : 1;
  std::uint8_t idx = static_cast<std::uint8_t>((a1 | a2) | ((b1 | b2) << 1) | ((c1 ^ c2) << 2));
  return {false, sign, idx};
}

int counit_basis(std::uint8_t x) { return (x & 3) == 0 ? 1 : 0; }

std::string basis_name(std::uint8_t x) {
  std::string s;
  if (x & kD) s += "D";
  if (x & kDp) s += "D'";
  if (x & kBeta) s += "b";
  return s.empty() ? "1" : s;
}

}  // namespace h1

HopfTensor HopfTensor::unit(int slots) {
  HopfTensor t(slots);
  t.add_term(0, BasisTuple(slots, h1::kOne), GaussRational::one());
  return t;
}

HopfTensor HopfTensor::generator(int slots, int slot, std::uint8_t word) {
  HopfTensor t(slots);
  BasisTuple basis(slots, h1::kOne);
  basis.at(slot) = word;
  t.add_term(0, basis, GaussRational::one());
  return t;
}

void HopfTensor::add_term(int tdeg, const BasisTuple& basis, const GaussRational& c) {
  if (static_cast<int>(basis.size()) != slots_)
    throw std::invalid_argument("HopfTensor: slot count mismatch");
  if (c.is_zero()) return;
  auto key = std::make_pair(tdeg, basis);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HopfTensor HopfTensor::operator+(const HopfTensor& o) const {
  if (slots_ != o.slots_) throw std::invalid_argument("HopfTensor: slot mismatch");
  HopfTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

HopfTensor HopfTensor::operator-(const HopfTensor& o) const {
  if (slots_ != o.slots_) throw std::invalid_argument("HopfTensor: slot mismatch");
  HopfTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

HopfTensor HopfTensor::operator*(const HopfTensor& o) const {
  if (slots_ != o.slots_) throw std::invalid_argument("HopfTensor: slot mismatch");
  HopfTensor r(slots_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      BasisTuple prod(slots_);
      int sign = 1;
      bool zero = false;
      for (int s = 0; s < slots_ && !zero; ++s) {
        auto p = h1::mul_basis(k1.second[s], k2.second[s]);
        zero = p.zero;
        sign *= p.sign;
        prod[s] = p.idx;
      }
      if (zero) continue;
      r.add_term(k1.first + k2.first, prod, c1 * c2 * GaussRational(sign));
    }
  }
  return r;
}

HopfTensor HopfTensor::operator*(const GaussRational& c) const {
  HopfTensor r(slots_);
  if (c.is_zero()) return r;
  for (const auto& [k, c0] : terms_) r.add_term(k.first, k.second, c0 * c);
  return r;
}

HopfTensor HopfTensor::shifted_t(int dt) const {
  HopfTensor r(slots_);
  for (const auto& [k, c] : terms_) r.add_term(k.first + dt, k.second, c);
  return r;
}

HopfTensor HopfTensor::tensor(const HopfTensor& o) const {
  HopfTensor r(slots_ + o.slots_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      BasisTuple basis = k1.second;
      basis.insert(basis.end(), k2.second.begin(), k2.second.end());
      r.add_term(k1.first + k2.first, basis, c1 * c2);
    }
  }
  return r;
}

namespace {

// Coproduct of a single H1 basis word as (left, right, coeff) summands,
// computed once by multiplying the generator coproducts in H1 (x) H1.
const std::vector<std::tuple<std::uint8_t, std::uint8_t, GaussRational>>& word_coproduct(
    std::uint8_t word) {
  static const auto table = [] {
    std::vector<std::vector<std::tuple<std::uint8_t, std::uint8_t, GaussRational>>> t(h1::kDim);
    for (int w = 0; w < h1::kDim; ++w) {
      HopfTensor delta = HopfTensor::unit(2);
      auto pair2 = [](std::uint8_t l, std::uint8_t r) {
        HopfTensor t2(2);
        t2.add_term(0, {l, r}, GaussRational::one());
        return t2;
      };
      if (w & h1::kD) delta = delta * (pair2(h1::kD, h1::kBeta) + pair2(h1::kOne, h1::kD));
      if (w & h1::kDp) delta = delta * (pair2(h1::kDp, h1::kOne) + pair2(h1::kBeta, h1::kDp));
      if (w & h1::kBeta) delta = delta * pair2(h1::kBeta, h1::kBeta);
      for (const auto& [k, c] : delta.terms())
        t[w].emplace_back(k.second[0], k.second[1], c);
    }
    return t;
  }();
  return table[word];
}

}  // namespace

HopfTensor HopfTensor::coproduct_block(int pos, int r) const {
  if (pos < 0 || r <= 0 || pos + r > slots_)
    throw std::invalid_argument("coproduct_block: bad block");
  HopfTensor out(slots_ + r);
  for (const auto& [k, c] : terms_) {
    // Expand each slot of the block; combine lefts then rights in order.
    std::vector<std::pair<BasisTuple, GaussRational>> partial = {
        {BasisTuple{}, GaussRational::one()}};
    for (int s = 0; s < r; ++s) {
      std::vector<std::pair<BasisTuple, GaussRational>> next;
      for (const auto& [halves, coeff] : partial) {
        for (const auto& [l, rgt, c2] : word_coproduct(k.second[pos + s])) {
          BasisTuple h = halves;
          h.push_back(l);
          h.push_back(rgt);
          next.emplace_back(std::move(h), coeff * c2);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [halves, coeff] : partial) {
      BasisTuple basis;
      basis.reserve(slots_ + r);
      basis.insert(basis.end(), k.second.begin(), k.second.begin() + pos);
      for (int s = 0; s < r; ++s) basis.push_back(halves[2 * s]);      // left halves
      for (int s = 0; s < r; ++s) basis.push_back(halves[2 * s + 1]);  // right halves
      basis.insert(basis.end(), k.second.begin() + pos + r, k.second.end());
      out.add_term(k.first, basis, c * coeff);
    }
  }
  return out;
}

HopfTensor HopfTensor::counit_block(int pos, int r) const {
  if (pos < 0 || r <= 0 || pos + r > slots_)
    throw std::invalid_argument("counit_block: bad block");
  HopfTensor out(slots_ - r);
  for (const auto& [k, c] : terms_) {
    int eps = 1;
    for (int s = 0; s < r; ++s) eps *= h1::counit_basis(k.second[pos + s]);
    if (eps == 0) continue;
    BasisTuple basis;
    basis.reserve(slots_ - r);
    basis.insert(basis.end(), k.second.begin(), k.second.begin() + pos);
    basis.insert(basis.end(), k.second.begin() + pos + r, k.second.end());
    out.add_term(k.first, basis, c);
  }
  return out;
}

HopfTensor HopfTensor::flip_halves() const {
  if (slots_ % 2 != 0) throw std::invalid_argument("flip_halves: odd slot count");
  const int r = slots_ / 2;
  HopfTensor out(slots_);
  for (const auto& [k, c] : terms_) {
    BasisTuple basis(k.second.begin() + r, k.second.end());
    basis.insert(basis.end(), k.second.begin(), k.second.begin() + r);
    out.add_term(k.first, basis, c);
  }
  return out;
}

HopfTensor udf_factor(int width, int index) {
  if (index < 0 || index >= width) throw std::invalid_argument("udf_factor: bad index");
  HopfTensor d = HopfTensor::generator(width, index, h1::kD);
  HopfTensor dp = HopfTensor::generator(width, index, h1::kDp);
  return HopfTensor::unit(2 * width) + d.tensor(dp).shifted_t(1);
}

std::optional<std::string> udf_check(const HopfTensor& F, int width) {
  if (F.slots() != 2 * width) throw std::invalid_argument("udf_check: slot count mismatch");
  HopfTensor unit_h = HopfTensor::unit(width);
  if (!(F.counit_block(0, width) == unit_h)) return "counit-left";
  if (!(F.counit_block(width, width) == unit_h)) return "counit-right";
  HopfTensor lhs = F.coproduct_block(0, width) * F.tensor(unit_h);
  HopfTensor rhs = F.coproduct_block(width, width) * unit_h.tensor(F);
  if (!(lhs == rhs)) return "coassociativity-pentagon";
  return std::nullopt;
}

NoncocommutativityWitness noncocommutativity_witness() {
  HopfTensor delta = HopfTensor::generator(1, 0, h1::kD).coproduct_block(0, 1);
  return {h1::kD, delta, delta.flip_halves()};
}

std::optional<std::string> h1_bialgebra_check() {
  auto delta = [](std::uint8_t w) {
    HopfTensor t = HopfTensor::generator(1, 0, w);
    return t.coproduct_block(0, 1);
  };
  auto eps = [](std::uint8_t w) { return h1::counit_basis(w); };

  for (int w = 0; w < h1::kDim; ++w) {
    HopfTensor d = delta(static_cast<std::uint8_t>(w));
    // Coassociativity.
    if (!(d.coproduct_block(0, 1) == d.coproduct_block(1, 1)))
      return "coassociativity";
    // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
    HopfTensor self = HopfTensor::generator(1, 0, static_cast<std::uint8_t>(w));
    if (!(d.counit_block(0, 1) == self) || !(d.counit_block(1, 1) == self))
      return "counit-law";
  }
  // Delta and epsilon are algebra maps.
  for (int x = 0; x < h1::kDim; ++x) {
    for (int y = 0; y < h1::kDim; ++y) {
      auto p = h1::mul_basis(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y));
      HopfTensor dx = delta(static_cast<std::uint8_t>(x));
      HopfTensor dy = delta(static_cast<std::uint8_t>(y));
      HopfTensor lhs = p.zero ? HopfTensor::zero(2)
                              : delta(p.idx) * GaussRational(p.sign);
      if (!(dx * dy == lhs)) return "delta-not-algebra-map";
      int el = p.zero ? 0 : p.sign * eps(p.idx);
      if (eps(static_cast<std::uint8_t>(x)) * eps(static_cast<std::uint8_t>(y)) != el)
        return "counit-not-algebra-map";
    }
  }
  return std::nullopt;
}

}  // namespace crossdef
