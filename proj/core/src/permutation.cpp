#include "sdsirs/permutation.hpp"

namespace sdsirs {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (const std::uint32_t v : images) {
    require(v < images.size() && !seen[v], Errc::invalid_argument,
            "images are not a bijection");
    seen[v] = true;
  }
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::canonical(const CycleType& t) {
  const std::size_t degree = t.degree();
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::size_t pos = 0;
  for (const auto& [length, mult] : t.parts()) {  // longest first
    if (length == 1) continue;
    for (std::uint64_t c = 0; c < mult; ++c) {
      for (std::uint64_t i = 0; i + 1 < length; ++i)
        images[pos + i] = static_cast<std::uint32_t>(pos + i + 1);
      images[pos + length - 1] = static_cast<std::uint32_t>(pos);
      pos += length;
    }
  }
  return Permutation(Unchecked{}, std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), Errc::degree_mismatch,
          "composing permutations of different degrees");
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p.images_[q.images_[x]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[images_[x]] = static_cast<std::uint32_t>(x);
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::conjugated_by(const Permutation& s) const {
  require(degree() == s.degree(), Errc::degree_mismatch,
          "conjugating across degrees");
  std::vector<std::uint32_t> images(degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[s.images_[x]] = s.images_[images_[x]];
  return Permutation(Unchecked{}, std::move(images));
}

CycleType Permutation::cycle_type() const {
  require(degree() >= 1, Errc::invalid_argument, "degree-0 permutation has no type");
  CycleType::Parts parts;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = images_[x];
      ++length;
    }
    ++parts[length];
  }
  return CycleType(std::move(parts));
}

std::uint64_t Permutation::fixed_points() const noexcept {
  std::uint64_t f = 0;
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] == x) ++f;
  return f;
}

bool Permutation::is_identity() const noexcept {
  return fixed_points() == degree();
}

int Permutation::sign() const {
  std::size_t cycles = 0;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return ((degree() - cycles) % 2 == 0) ? +1 : -1;
}

Permutation random_permutation(std::size_t degree, Philox& rng) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t i = degree; i > 1; --i) {
    const std::uint64_t j = rng.below(i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

}  // namespace sdsirs
