#include "intaut/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace intaut {

PointPermutation::PointPermutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<std::uint8_t> seen(images_.size(), 0);
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const auto v = images_[k];
    if (v >= images_.size())
      throw Error(ErrorCode::NotABijection, "image " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error(ErrorCode::NotABijection, "repeated image " + std::to_string(v));
    seen[v] = 1;
  }
}

PointPermutation PointPermutation::identity(std::uint32_t size) {
  std::vector<std::uint32_t> images(size);
  std::iota(images.begin(), images.end(), 0u);
  return unchecked(std::move(images));
}

bool PointPermutation::is_identity() const noexcept {
  for (std::uint32_t k = 0; k < size(); ++k)
    if (images_[k] != k) return false;
  return true;
}

PointPermutation PointPermutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t k = 0; k < size(); ++k) inv[images_[k]] = k;
  return unchecked(std::move(inv));
}

std::uint64_t PointPermutation::order() const {
  std::vector<std::uint8_t> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t k = start; !seen[k]; k = images_[k]) {
      seen[k] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::uint32_t PointPermutation::fixed_points() const noexcept {
  std::uint32_t count = 0;
  for (std::uint32_t k = 0; k < size(); ++k) count += images_[k] == k;
  return count;
}

PointPermutation compose(const PointPermutation& g, const PointPermutation& h) {
  if (g.size() != h.size()) throw Error(ErrorCode::SizeMismatch, "composing permutations of different degree");
  std::vector<std::uint32_t> out(g.size());
  for (std::uint32_t k = 0; k < g.size(); ++k) out[k] = h[g[k]];
  return PointPermutation::unchecked(std::move(out));
}

std::size_t PermutationHash::operator()(const PointPermutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<PointPermutation> generate_group(std::span<const PointPermutation> generators,
                                             std::uint32_t size, std::uint64_t max_elements) {
  for (const auto& g : generators)
    if (g.size() != size) throw Error(ErrorCode::SizeMismatch, "generator degree differs from size");
  std::unordered_set<PointPermutation, PermutationHash> seen;
  std::vector<PointPermutation> queue{PointPermutation::identity(size)};
  seen.insert(queue.front());
  // A finite set closed under right multiplication by generators is a group.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      PointPermutation next = compose(queue[head], g);
      if (seen.insert(next).second) {
        if (seen.size() > max_elements)
          throw Error(ErrorCode::TooLarge, "group exceeds " + std::to_string(max_elements) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_closed_group(std::span<const PointPermutation> elements) {
  if (elements.empty()) return false;
  std::unordered_set<PointPermutation, PermutationHash> members(elements.begin(), elements.end());
  for (const auto& g : elements) {
    if (!members.contains(g.inverse())) return false;
    for (const auto& h : elements)
      if (!members.contains(compose(g, h))) return false;
  }
  return true;
}

void write_permutation(std::ostream& out, const PointPermutation& perm, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  }
  for (std::uint32_t k = 0; k < perm.size(); ++k) {
    if (k) out << ' ';
    out << perm[k];
  }
  out << '\n';
}

PointPermutation read_permutation(std::istream& in, std::uint32_t expected_size) {
  std::vector<std::uint32_t> images;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    for (std::string tok; tokens >> tok;) {
      std::uint64_t v = 0;
      if (tok.size() > 10 || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      v = std::stoull(tok);
      if (v > UINT32_MAX) throw Error(ErrorCode::ParseError, "image out of range: " + tok);
      images.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (images.size() != expected_size)
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(expected_size) + " images, got " +
                                             std::to_string(images.size()));
  return PointPermutation(std::move(images));
}

}  // namespace intaut
