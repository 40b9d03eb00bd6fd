#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/group.hpp"
#include "dessin/pattern.hpp"

namespace dessin {

// Conjugacy class data of one element: its cycle type, refined by the
// A_d-half when the monodromy group is A_d and the type splits there.
struct ClassTag {
  CycleType type;
  int half = 0; // 0 = coarse (type only), +1 / -1 = A_d-class

  auto operator<=>(ClassTag const &) const = default;
};

struct NielsenEntry {
  std::array<ClassTag, 3> classes; // x^k, y^k, z^k

  auto operator<=>(NielsenEntry const &) const = default;
};

/**
 * Computable projection of the rational Nielsen class: for every unit k
 * modulo L = lcm(ord x, ord y, ord z), the classes of (x^k, y^k, z^k),
 * kept as a multiset so that the assignment of tuples to k is forgotten.
 *
 * A_d-halves are taken relative to a standard element of each cycle type
 * and then normalized under a simultaneous flip of every half, which is
 * what an odd relabeling of the edges does; the data is therefore
 * invariant under every relabeling.
 */
struct NielsenData {
  std::uint64_t lcm = 1;
  bool resolved = false; // monodromy group recognized as S_d or A_d
  std::map<NielsenEntry, std::uint64_t> entries;

  bool operator==(NielsenData const &) const = default;
};

enum class Separation { distinguished, indistinguishable };

GroupFingerprint monodromy_fingerprint(Dessin const &d);
GroupFingerprint m_beta(Dessin const &d, ExtendingPattern const &beta);

NielsenData nielsen_data(Dessin const &d);
NielsenData nielsen_data(Dessin const &d, PermGroup const &monodromy);

// Compares halves only when both sides are resolved; otherwise only the
// cycle-type multisets.
Separation nielsen_compare(NielsenData const &a, NielsenData const &b);

struct InvariantReport {
  std::string dessin_id;
  std::size_t degree = 1;
  ValencyList valency;
  std::size_t genus = 0;
  std::size_t aut_order = 1;
  GroupFingerprint monodromy;
  // In the configured pattern order.
  std::vector<std::pair<std::string, GroupFingerprint>> per_pattern;
  NielsenData nielsen;

  bool operator==(InvariantReport const &) const = default;
};

InvariantReport report(Dessin const &d,
                       std::span<ExtendingPattern const> patterns,
                       std::string dessin_id = {});

enum class Comparison { equal, different, unknown };
std::string to_string(Comparison c);

struct InvariantVerdict {
  std::string invariant;
  Comparison status = Comparison::equal;
  std::string detail;
};

// Never claims equal Galois orbits: `separated == false` only means no
// computed invariant tells the two apart.
struct Verdict {
  std::vector<InvariantVerdict> items;
  bool separated = false;

  std::vector<std::string> separators() const;
  std::string summary() const;
};

Verdict compare_reports(InvariantReport const &a, InvariantReport const &b);
Verdict distinguish(Dessin const &a, Dessin const &b,
                    std::span<ExtendingPattern const> patterns);

} // namespace dessin
