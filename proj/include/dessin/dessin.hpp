#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dessin/perm.hpp"

namespace dessin {

// Cycle types at the 0-vertices, 1-vertices and faces.
struct ValencyList {
  CycleType at0;
  CycleType at1;
  CycleType at_inf;

  auto operator<=>(ValencyList const &) const = default;
  std::string to_string() const;
};

/**
 * Permutation of the three ramification roles 0, 1 and infinity, i.e. one of
 * the six Moebius maps t, 1-t, 1/t, t/(t-1), 1/(1-t), (t-1)/t.
 *
 * source[r] is the old role whose generator takes role r after relabeling
 * (0 = x, 1 = y, 2 = z).
 */
struct RolePermutation {
  std::array<std::uint8_t, 3> source{0, 1, 2};

  static RolePermutation identity() { return {{0, 1, 2}}; }
  static RolePermutation swap01() { return {{1, 0, 2}}; }   // 1-t
  static RolePermutation swap0inf() { return {{2, 1, 0}}; } // 1/t
  static RolePermutation swap1inf() { return {{0, 2, 1}}; } // t/(t-1)
  static RolePermutation rotate() { return {{1, 2, 0}}; }   // (t-1)/t
  static RolePermutation rotate2() { return {{2, 0, 1}}; }  // 1/(1-t)

  static std::array<RolePermutation, 6> all();
  // Accepts the names printed by name(); throws validation_error otherwise.
  static RolePermutation parse(std::string_view name);

  bool is_valid() const;
  std::string name() const;

  bool operator==(RolePermutation const &) const = default;
};

struct TransitivityReport {
  bool ok = true;
  std::string message;
  std::vector<std::vector<point>> orbits; // 1-based, for messages
};

/**
 * A dessin d'enfant as a transitive pair (x, y) on its edges {1..d}: x is
 * the rotation at 0-vertices and y the rotation at 1-vertices. The face
 * rotation z = (x * y)^-1 is always derived, never stored.
 */
class Dessin {
public:
  // Throws validation_error unless degrees agree and <x, y> is transitive.
  Dessin(Permutation x, Permutation y);

  static Dessin unit() { return Dessin(Permutation(1), Permutation(1)); }

  std::size_t degree() const { return x_.degree(); }
  Permutation const &x() const { return x_; }
  Permutation const &y() const { return y_; }
  Permutation z() const;

  ValencyList valency_list() const;
  std::size_t genus() const;

  // g^-1 x g, g^-1 y g: the same dessin with edge i renamed g(i).
  Dessin relabel(Permutation const &g) const;
  Dessin relabel_role(RolePermutation const &h) const;

  Dessin canonical_form() const;
  std::vector<Permutation> automorphism_group() const;

  bool operator==(Dessin const &) const = default;

private:
  Permutation x_;
  Permutation y_;
};

Permutation z_perm(Dessin const &d);

// Checks degrees and transitivity without constructing a Dessin.
TransitivityReport validate(Permutation const &x, Permutation const &y);

bool are_isomorphic(Dessin const &a, Dessin const &b);

// Lexicographically least relabeled (x, y) over all start edges, where a
// start edge is relabeled by breadth-first discovery order under the
// generator priority x, x^-1, y, y^-1. Returns the relabeling applied.
Permutation canonical_relabeling(Permutation const &x, Permutation const &y);

// Relabeling that numbers edges in breadth-first discovery order from
// `start` under x, x^-1, y, y^-1. Requires <x, y> transitive.
Permutation bfs_relabeling(Permutation const &x, Permutation const &y,
                           point start);

// Uniform value in [0, bound) from the raw engine output; kept independent
// of std::uniform_int_distribution so seeded runs agree across toolchains.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);
Permutation random_permutation(std::mt19937_64 &rng, std::size_t degree);

// Uniformly random degree in [1, max_degree], then random pairs until one
// is transitive.
Dessin random_dessin(std::mt19937_64 &rng, std::size_t max_degree);
Dessin random_dessin_of_degree(std::mt19937_64 &rng, std::size_t degree);

} // namespace dessin
