#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "intaut/error.hpp"

namespace intaut {

/// A bijection on {0, ..., size-1}; images[k] is the image of k.
/// Permutations act on the right: compose(g, h) applies g first.
class PointPermutation {
 public:
  PointPermutation() = default;
  /// Validates bijectivity; throws NotABijection.
  explicit PointPermutation(std::vector<std::uint32_t> images);

  static PointPermutation identity(std::uint32_t size);
  static PointPermutation unchecked(std::vector<std::uint32_t> images) {
    PointPermutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t k) const noexcept { return images_[k]; }
  std::uint32_t operator[](std::uint32_t k) const noexcept { return images_[k]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  PointPermutation inverse() const;
  std::uint64_t order() const;
  std::uint32_t fixed_points() const noexcept;

  friend bool operator==(const PointPermutation&, const PointPermutation&) = default;
  friend auto operator<=>(const PointPermutation&, const PointPermutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// g then h.
PointPermutation compose(const PointPermutation& g, const PointPermutation& h);

struct PermutationHash {
  std::size_t operator()(const PointPermutation& p) const noexcept;
};

/// Every element of the group generated by `generators`, sorted. Throws
/// TooLarge once more than `max_elements` elements have been produced.
std::vector<PointPermutation> generate_group(std::span<const PointPermutation> generators,
                                             std::uint32_t size, std::uint64_t max_elements);

/// Closure under composition and inverse, by exhaustive product check.
bool is_closed_group(std::span<const PointPermutation> elements);

/// One line of space-separated images, preceded by optional '#' comment lines.
void write_permutation(std::ostream& out, const PointPermutation& perm,
                       const std::string& comment = {});
/// Parses the format above. Throws ParseError on malformed input,
/// SizeMismatch when the entry count differs from expected_size, and
/// NotABijection on repeated images.
PointPermutation read_permutation(std::istream& in, std::uint32_t expected_size);

}  // namespace intaut
