#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "starpres/letter.hpp"
#include "starpres/word.hpp"

namespace starpres {

// Automorphism of the free group sending each generator to a signed
// generator (a bijection on generators composed with inversions).
class SignedPermutation {
 public:
  static SignedPermutation identity(std::uint32_t rank);
  // images[g] is the image letter of generator g; must be a bijection on
  // generators.
  static SignedPermutation from_images(std::vector<Letter> images);

  std::uint32_t rank() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  Letter apply(Letter l) const {
    Letter im = images_[l.generator()];
    return l.negative() ? im.inverse() : im;
  }
  const std::vector<Letter>& images() const { return images_; }

  // Left-to-right composition: (a.then(b))(w) == b(a(w)).
  SignedPermutation then(const SignedPermutation& next) const;
  SignedPermutation inverse() const;

  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<Letter> images_;
};

Word apply(const SignedPermutation& s, const Word& w);

// The rank-3 star symmetries: fix_and_swap(t) fixes generator t and swaps
// the other two; invert_generator(t) inverts t and fixes the rest.
SignedPermutation fix_and_swap(std::uint32_t fixed);
SignedPermutation invert_generator(std::uint32_t g, std::uint32_t rank);

}  // namespace starpres
