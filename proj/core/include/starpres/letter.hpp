#pragma once

#include <compare>
#include <cstdint>

namespace starpres {

// A signed generator x_g^{+-1}. The encoding 2*g + (sign < 0) makes the
// natural letter order x < x^-1 < y < y^-1 < z < z^-1 the integer order on
// codes, which every lexicographic comparison in the library relies on.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, int sign)
      : code_(2 * generator + (sign < 0 ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t generator() const { return code_ / 2; }
  constexpr int sign() const { return (code_ & 1u) ? -1 : 1; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

}  // namespace starpres
