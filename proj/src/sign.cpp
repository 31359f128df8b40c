#include "qtrend/sign.hpp"

#include <bit>

#include "qtrend/error.hpp"

namespace qtrend {

char to_char(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Zero: return '0';
    case Sign::Minus: return '-';
  }
  return '?';
}

std::optional<Sign> sign_from_char(char c) noexcept {
  switch (c) {
    case '+': return Sign::Plus;
    case '0': return Sign::Zero;
    case '-': return Sign::Minus;
    default: return std::nullopt;
  }
}

SignSet SignSet::from_mask(std::uint8_t mask) {
  if (mask == 0 || mask > kFullMask) {
    throw Error(ErrorCode::InvalidArgument, "sign set mask must be a nonempty subset of {+,0,-}");
  }
  SignSet s;
  s.mask_ = mask;
  return s;
}

std::optional<SignSet> SignSet::parse(std::string_view text) noexcept {
  if (text == "*") return full();
  if (text.empty()) return std::nullopt;
  std::uint8_t mask = 0;
  for (char c : text) {
    auto s = sign_from_char(c);
    if (!s) return std::nullopt;
    mask |= bit(*s);
  }
  SignSet out;
  out.mask_ = mask;
  return out;
}

int SignSet::size() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }

SignSet SignSet::operator|(SignSet other) const noexcept {
  SignSet out;
  out.mask_ = mask_ | other.mask_;
  return out;
}

std::string SignSet::to_string() const {
  if (is_full()) return "*";
  std::string out;
  for (Sign s : kAllSigns) {
    if (contains(s)) out.push_back(to_char(s));
  }
  return out;
}

Sign qneg(Sign a) noexcept {
  switch (a) {
    case Sign::Plus: return Sign::Minus;
    case Sign::Minus: return Sign::Plus;
    case Sign::Zero: return Sign::Zero;
  }
  return Sign::Zero;
}

Sign qmul(Sign a, Sign b) noexcept {
  if (a == Sign::Zero || b == Sign::Zero) return Sign::Zero;
  return a == b ? Sign::Plus : Sign::Minus;
}

SignSet qadd(Sign a, Sign b) noexcept {
  if (b == Sign::Zero || a == b) return SignSet{a};
  if (a == Sign::Zero) return SignSet{b};
  return SignSet::full();
}

Sign qsquare(Sign a) noexcept { return a == Sign::Zero ? Sign::Zero : Sign::Plus; }

std::optional<Triplet> Triplet::parse(std::string_view text) noexcept {
  if (text.size() != 3) return std::nullopt;
  auto v = sign_from_char(text[0]);
  auto d1 = sign_from_char(text[1]);
  auto d2 = sign_from_char(text[2]);
  if (!v || !d1 || !d2) return std::nullopt;
  return Triplet{*v, *d1, *d2};
}

std::string Triplet::to_string() const {
  return {to_char(value), to_char(d1), to_char(d2)};
}

}  // namespace qtrend
