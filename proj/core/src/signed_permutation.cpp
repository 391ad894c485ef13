#include "starpres/signed_permutation.hpp"

#include <stdexcept>

namespace starpres {

SignedPermutation SignedPermutation::identity(std::uint32_t rank) {
  std::vector<Letter> images;
  images.reserve(rank);
  for (std::uint32_t g = 0; g < rank; ++g) images.emplace_back(g, 1);
  SignedPermutation s;
  s.images_ = std::move(images);
  return s;
}

SignedPermutation SignedPermutation::from_images(std::vector<Letter> images) {
  std::vector<bool> seen(images.size(), false);
  for (Letter l : images) {
    if (l.generator() >= images.size() || seen[l.generator()]) {
      throw std::invalid_argument(
          "signed permutation images are not a bijection on generators");
    }
    seen[l.generator()] = true;
  }
  SignedPermutation s;
  s.images_ = std::move(images);
  return s;
}

SignedPermutation SignedPermutation::then(const SignedPermutation& next) const {
  if (rank() != next.rank()) {
    throw std::invalid_argument("signed permutation rank mismatch");
  }
  std::vector<Letter> images;
  images.reserve(rank());
  for (std::uint32_t g = 0; g < rank(); ++g) {
    images.push_back(next.apply(images_[g]));
  }
  return from_images(std::move(images));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<Letter> images(rank());
  for (std::uint32_t g = 0; g < rank(); ++g) {
    Letter im = images_[g];
    images[im.generator()] = Letter(g, im.sign());
  }
  return from_images(std::move(images));
}

Word apply(const SignedPermutation& s, const Word& w) {
  if (s.rank() != w.rank()) {
    throw std::invalid_argument("apply: rank mismatch");
  }
  LetterSeq out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(s.apply(l));
  return Word::reduced(std::move(out), w.rank());
}

SignedPermutation fix_and_swap(std::uint32_t fixed) {
  if (fixed >= 3) throw std::invalid_argument("fix_and_swap: rank-3 only");
  std::vector<Letter> images;
  for (std::uint32_t g = 0; g < 3; ++g) {
    std::uint32_t target = g == fixed ? g : 3 - fixed - g;
    images.emplace_back(target, 1);
  }
  return SignedPermutation::from_images(std::move(images));
}

SignedPermutation invert_generator(std::uint32_t g, std::uint32_t rank) {
  std::vector<Letter> images;
  for (std::uint32_t h = 0; h < rank; ++h) {
    images.emplace_back(h, h == g ? -1 : 1);
  }
  return SignedPermutation::from_images(std::move(images));
}

}  // namespace starpres
