#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dessin/perm.hpp"

namespace dessin {

using BigInt = boost::multiprecision::cpp_int;

// Coarse but sound discriminator of permutation groups: two groups with
// different fingerprints are not permutation-isomorphic. Equal fingerprints
// prove nothing beyond the listed fields.
struct GroupFingerprint {
  BigInt order = 1;
  std::size_t degree = 1;
  bool transitive = true;
  bool in_alternating = true; // every generator is even
  std::size_t rank = 1;       // orbits on ordered pairs of points

  bool operator==(GroupFingerprint const &) const = default;
  std::string to_string() const;
};

// Names of the fingerprint fields in which a and b differ.
std::vector<std::string> fingerprint_diff(GroupFingerprint const &a,
                                          GroupFingerprint const &b);

/**
 * Permutation group held as a stabilizer chain built by deterministic
 * Schreier-Sims. Base points are the least points moved by the generator
 * that opens each level. Immutable once constructed.
 */
class PermGroup {
public:
  PermGroup(std::vector<Permutation> generators, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }

  std::vector<point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
  BigInt const &order() const { return order_; }

  bool contains(Permutation const &p) const;
  bool is_transitive() const;
  bool is_symmetric() const;   // order == degree!
  bool is_alternating() const; // order == degree!/2, degree >= 2

  // Orbits of the group on {0..d-1}, each sorted, ordered by least point.
  std::vector<std::vector<point>> orbits() const;

  GroupFingerprint fingerprint() const;

private:
  struct Level {
    point base;
    std::vector<Permutation> gens;
    std::vector<point> orbit;
    // transversal[p] maps base to p; inverse_transversal[p] maps p to base.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse_transversal;
  };

  // Residue of p after stripping through levels [from, end) and the level
  // index where stripping stopped.
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t from) const;
  void add_generator(std::size_t level, Permutation const &g);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

BigInt factorial(std::size_t n);

// True iff the S_d-class of this cycle type splits into two A_d-classes,
// i.e. its parts are odd and pairwise distinct (d >= 2).
bool class_splits_in_alternating(CycleType const &t);

enum class Conjugacy { conjugate, not_conjugate, unknown };

std::string to_string(Conjugacy c);

// Decides conjugacy of a and b inside g exactly when g is the full symmetric
// or alternating group; otherwise only a cycle-type mismatch is decisive.
// Throws validation_error if a or b is not in g.
Conjugacy conjugacy_in_group(Permutation const &a, Permutation const &b,
                             PermGroup const &g);

// Some h with conjugate(a, h) == b, assuming equal cycle types.
Permutation relabeling_conjugator(Permutation const &a, Permutation const &b);

} // namespace dessin
