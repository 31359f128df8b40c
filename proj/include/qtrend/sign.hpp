#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qtrend {

// Enumerator order is the display order (+, 0, -) used by every table.
enum class Sign : std::uint8_t { Plus = 0, Zero = 1, Minus = 2 };

inline constexpr std::array<Sign, 3> kAllSigns = {Sign::Plus, Sign::Zero, Sign::Minus};

constexpr int index_of(Sign s) noexcept { return static_cast<int>(s); }

char to_char(Sign s) noexcept;
std::optional<Sign> sign_from_char(char c) noexcept;

/// Nonempty subset of {+, 0, -} stored as a 3-bit mask. The full set is the
/// "unrestricted" value and renders as "*".
class SignSet {
 public:
  static constexpr std::uint8_t kFullMask = 0b111;

  constexpr SignSet() noexcept : mask_(kFullMask) {}
  constexpr SignSet(Sign s) noexcept : mask_(bit(s)) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(InvalidArgument) for an empty or out-of-range mask.
  static SignSet from_mask(std::uint8_t mask);
  static constexpr SignSet full() noexcept { return SignSet{}; }

  /// Accepts "*" or any combination of '+', '0', '-' (e.g. "+0").
  static std::optional<SignSet> parse(std::string_view text) noexcept;

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr bool contains(Sign s) const noexcept { return (mask_ & bit(s)) != 0; }
  constexpr bool is_full() const noexcept { return mask_ == kFullMask; }
  constexpr bool is_singleton() const noexcept {
    return mask_ == 1 || mask_ == 2 || mask_ == 4;
  }
  int size() const noexcept;

  SignSet operator|(SignSet other) const noexcept;

  /// "*" for the full set, otherwise the members in display order.
  std::string to_string() const;

  friend constexpr bool operator==(SignSet, SignSet) noexcept = default;

 private:
  static constexpr std::uint8_t bit(Sign s) noexcept {
    return static_cast<std::uint8_t>(1u << index_of(s));
  }
  std::uint8_t mask_;
};

Sign qneg(Sign a) noexcept;
Sign qmul(Sign a, Sign b) noexcept;
/// Qualitative sum; opposite nonzero signs are unresolvable and give {+,0,-}.
SignSet qadd(Sign a, Sign b) noexcept;
/// PLUS unless the argument is ZERO: the sign of a square.
Sign qsquare(Sign a) noexcept;

/// Qualitative state of one variable: signs of the value and of its first
/// and second time derivatives.
struct Triplet {
  Sign value = Sign::Plus;
  Sign d1 = Sign::Zero;
  Sign d2 = Sign::Zero;

  static constexpr int kCount = 27;

  /// Position in canonical order, 0..26.
  constexpr int index() const noexcept {
    return index_of(value) * 9 + index_of(d1) * 3 + index_of(d2);
  }
  static constexpr Triplet from_index(int i) noexcept {
    return Triplet{static_cast<Sign>(i / 9), static_cast<Sign>((i / 3) % 3),
                   static_cast<Sign>(i % 3)};
  }
  /// Three sign characters, e.g. "++-".
  static std::optional<Triplet> parse(std::string_view text) noexcept;
  std::string to_string() const;

  friend constexpr auto operator<=>(const Triplet&, const Triplet&) = default;
};

}  // namespace qtrend
