#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/perm.hpp"

namespace dessin {

enum class Letter : std::uint8_t { x, x_inv, y, y_inv, z, z_inv };

// Black segments crossed by one monodromy step, in crossing order. A word
// [a, b] evaluates to a * b: the first segment crossed acts first.
using CrossingWord = std::vector<Letter>;

Letter inverse(Letter l);
CrossingWord inverse(CrossingWord const &w);

// Tokens x X y Y z Z (uppercase = inverse); "e" or "" is the empty word.
CrossingWord parse_word(std::string_view text);
std::string word_to_string(CrossingWord const &w);

/**
 * Extending pattern of a Belyi-extending map: the gray dessin (xb, yb) on
 * edges {1..m} together with, for every gray edge b, the crossing words of
 * the x-step and y-step leaving b. Applying it to a dessin with edges
 * {1..d} gives a dessin on {1..d} x {1..m}:
 *
 *   x'(a, b) = (eval(wx[b]) a, xb b),  y'(a, b) = (eval(wy[b]) a, yb b).
 */
struct ExtendingPattern {
  std::string name;
  Permutation xb;
  Permutation yb;
  std::vector<CrossingWord> wx;
  std::vector<CrossingWord> wy;

  std::size_t degree() const { return xb.degree(); }

  bool operator==(ExtendingPattern const &) const = default;
};

// Checks degrees, word counts and transitivity of the gray pair.
ExtendingPattern make_pattern(std::string name, Permutation xb, Permutation yb,
                              std::vector<CrossingWord> wx,
                              std::vector<CrossingWord> wy);

Permutation eval_word(CrossingWord const &w, Dessin const &d);

// Index of the pair (a, b) (0-based) in the output: a * m + b.
inline point pair_index(point a, point b, std::size_t m) {
  return static_cast<point>(a * m + b);
}

// The raw output pair, without the transitivity check of Dessin.
std::pair<Permutation, Permutation> apply_pair(ExtendingPattern const &p,
                                               Dessin const &d);
Dessin apply(ExtendingPattern const &p, Dessin const &d);

// Applies right to left: the last pattern acts on d first.
Dessin apply_sequence(std::span<ExtendingPattern const> patterns,
                      Dessin const &d);

// The pattern of beta o h: substitutes the role-exchanged generators into
// every word, so that apply(compose_role(b, h), d) equals
// apply(b, d.relabel_role(h)) exactly.
ExtendingPattern compose_role(ExtendingPattern const &p,
                              RolePermutation const &h, std::string name);

struct PatternCheck {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

// Randomized consistency check: gray pair transitive, the unit dessin maps
// to the gray dessin, and on `trials` random dessins of degree <= 8 the
// output is transitive, has degree d * m and keeps the genus.
PatternCheck validate_pattern(ExtendingPattern const &p, std::size_t trials,
                              std::uint64_t seed);

// Renames gray edge b to g(b), carrying the words along.
ExtendingPattern relabel_pattern(ExtendingPattern const &p,
                                 Permutation const &g);
ExtendingPattern canonicalize_pattern(ExtendingPattern const &p);
// Same extending pattern up to relabeling of gray edges; names ignored.
bool equivalent(ExtendingPattern const &a, ExtendingPattern const &b);

std::vector<std::string> builtin_names();
bool is_builtin(std::string_view name);
ExtendingPattern builtin(std::string_view name);

// id, alpha, alpha1, alpha2, gamma and its five role composites, xi.
std::vector<std::string> default_pattern_names();

} // namespace dessin
