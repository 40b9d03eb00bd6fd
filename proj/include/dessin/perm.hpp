#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessin {

using point = std::uint32_t;

// Multiset of cycle lengths, fixed points included, sorted descending.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t degree() const;
  std::string to_string() const;

  auto operator<=>(CycleType const &) const = default;
};

/**
 * A bijection on {0..d-1}. Points are 0-based inside the library; every
 * textual form (cycle notation, files) is 1-based.
 *
 * Products compose left to right: (p * q)(e) = q(p(e)), i.e. p acts first.
 */
class Permutation {
public:
  // Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  // images[i] is the image of i (0-based). Throws validation_error if the
  // sequence is not a bijection.
  static Permutation from_images(std::vector<point> images);

  // Cycles over {1..degree}; omitted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  point operator[](point i) const { return images_[i]; }
  point operator()(point i) const { return images_[i]; }
  std::span<point const> images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  bool is_even() const;

  // Cycles of length >= 2, 0-based, each starting at its least point,
  // ordered by least point.
  std::vector<std::vector<point>> cycles() const;
  std::size_t cycle_count() const; // fixed points included
  CycleType cycle_type() const;
  std::uint64_t order() const;

  // Least moved point, or degree() for the identity.
  point first_moved() const;

  friend Permutation operator*(Permutation const &p, Permutation const &q);
  Permutation &operator*=(Permutation const &q);

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<point> images_;
};

// (p * q)(e) = q(p(e)).
Permutation product_lr(Permutation const &p, Permutation const &q);

// g^-1 * p * g: relabels every point i of p's cycles as g(i).
Permutation conjugate(Permutation const &p, Permutation const &g);

// Parses "(1 2 3)(4 5)" style notation over {1..degree}.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Cycle notation, 1-based, fixed points omitted; identity prints as "".
std::string print_cycles(Permutation const &p);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace dessin
