#include "dessin/invariants.hpp"

#include <numeric>

namespace dessin {

GroupFingerprint monodromy_fingerprint(Dessin const &d) {
  return PermGroup({d.x(), d.y()}, d.degree()).fingerprint();
}

GroupFingerprint m_beta(Dessin const &d, ExtendingPattern const &beta) {
  return monodromy_fingerprint(apply(beta, d));
}

namespace {

// Cycles of consecutive points, longest first.
Permutation standard_element(CycleType const &t) {
  std::vector<std::vector<point>> cycles;
  point next = 1;
  for (std::size_t part : t.parts) {
    auto &cyc = cycles.emplace_back();
    for (std::size_t i = 0; i < part; ++i)
      cyc.push_back(next++);
  }
  return Permutation::from_cycles(t.degree(), cycles);
}

ClassTag class_of(Permutation const &e, bool alternating) {
  ClassTag tag{e.cycle_type(), 0};
  if (alternating && class_splits_in_alternating(tag.type))
    tag.half =
        relabeling_conjugator(standard_element(tag.type), e).is_even() ? 1
                                                                       : -1;
  return tag;
}

std::map<NielsenEntry, std::uint64_t>
flip_halves(std::map<NielsenEntry, std::uint64_t> const &entries) {
  std::map<NielsenEntry, std::uint64_t> out;
  for (auto const &[key, count] : entries) {
    NielsenEntry entry = key;
    for (auto &c : entry.classes)
      c.half = -c.half;
    out[entry] += count;
  }
  return out;
}

std::map<NielsenEntry, std::uint64_t>
coarse(std::map<NielsenEntry, std::uint64_t> const &entries) {
  std::map<NielsenEntry, std::uint64_t> out;
  for (auto const &[key, count] : entries) {
    NielsenEntry entry = key;
    for (auto &c : entry.classes)
      c.half = 0;
    out[entry] += count;
  }
  return out;
}

} // namespace

NielsenData nielsen_data(Dessin const &d) {
  return nielsen_data(d, PermGroup({d.x(), d.y()}, d.degree()));
}

NielsenData nielsen_data(Dessin const &d, PermGroup const &monodromy) {
  NielsenData data;
  std::array<Permutation, 3> const gens{d.x(), d.y(), d.z()};
  for (auto const &g : gens)
    data.lcm = std::lcm(data.lcm, g.order());
  bool const alternating = monodromy.is_alternating();
  data.resolved = alternating || monodromy.is_symmetric();

  bool any_split = false;
  if (alternating)
    for (auto const &g : gens)
      any_split = any_split || class_splits_in_alternating(g.cycle_type());

  std::uint64_t units = 0;
  for (std::uint64_t k = 1; k <= data.lcm; ++k)
    if (std::gcd(k, data.lcm) == 1)
      ++units;

  if (!any_split) {
    // Powers by units keep the cycle type, so every k gives the same entry.
    NielsenEntry entry;
    for (std::size_t i = 0; i < 3; ++i)
      entry.classes[i] = ClassTag{gens[i].cycle_type(), 0};
    data.entries[entry] = units;
    return data;
  }

  for (std::uint64_t k = 1; k <= data.lcm; ++k) {
    if (std::gcd(k, data.lcm) != 1)
      continue;
    NielsenEntry entry;
    for (std::size_t i = 0; i < 3; ++i)
      entry.classes[i] =
          class_of(gens[i].pow(static_cast<long long>(k % gens[i].order())),
                   alternating);
    ++data.entries[entry];
  }
  auto flipped = flip_halves(data.entries);
  if (flipped < data.entries)
    data.entries = std::move(flipped);
  return data;
}

Separation nielsen_compare(NielsenData const &a, NielsenData const &b) {
  bool same = a.lcm == b.lcm &&
              (a.resolved && b.resolved ? a.entries == b.entries
                                        : coarse(a.entries) == coarse(b.entries));
  return same ? Separation::indistinguishable : Separation::distinguished;
}

InvariantReport report(Dessin const &d,
                       std::span<ExtendingPattern const> patterns,
                       std::string dessin_id) {
  InvariantReport r;
  r.dessin_id = std::move(dessin_id);
  r.degree = d.degree();
  r.valency = d.valency_list();
  r.genus = d.genus();
  r.aut_order = d.automorphism_group().size();
  PermGroup const monodromy({d.x(), d.y()}, d.degree());
  r.monodromy = monodromy.fingerprint();
  for (auto const &beta : patterns)
    r.per_pattern.emplace_back(beta.name, beta.name == "id"
                                              ? r.monodromy
                                              : m_beta(d, beta));
  r.nielsen = nielsen_data(d, monodromy);
  return r;
}

std::string to_string(Comparison c) {
  switch (c) {
  case Comparison::equal:
    return "equal";
  case Comparison::different:
    return "different";
  case Comparison::unknown:
    break;
  }
  return "unknown";
}

std::vector<std::string> Verdict::separators() const {
  std::vector<std::string> out;
  for (auto const &item : items)
    if (item.status == Comparison::different)
      out.push_back(item.invariant);
  return out;
}

std::string Verdict::summary() const {
  if (!separated)
    return "not separated";
  std::string out = "different Galois orbits (separated by: ";
  auto names = separators();
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? ", " : "") + names[i];
  return out + ")";
}

namespace {

InvariantVerdict compare_fingerprints(std::string name,
                                      GroupFingerprint const &a,
                                      GroupFingerprint const &b) {
  auto diff = fingerprint_diff(a, b);
  if (diff.empty())
    return {std::move(name), Comparison::equal, "indistinguishable by fingerprint"};
  std::string detail = "differs in";
  for (auto const &field : diff)
    detail += " " + field;
  detail += " (" + a.to_string() + " vs " + b.to_string() + ")";
  return {std::move(name), Comparison::different, std::move(detail)};
}

template <typename T>
InvariantVerdict compare_values(std::string name, T const &a, T const &b,
                                std::string const &sa, std::string const &sb) {
  if (a == b)
    return {std::move(name), Comparison::equal, sa};
  return {std::move(name), Comparison::different, sa + " vs " + sb};
}

} // namespace

Verdict compare_reports(InvariantReport const &a, InvariantReport const &b) {
  Verdict v;
  v.items.push_back(compare_values("valency", a.valency, b.valency,
                                   a.valency.to_string(),
                                   b.valency.to_string()));
  v.items.push_back(compare_values("genus", a.genus, b.genus,
                                   std::to_string(a.genus),
                                   std::to_string(b.genus)));
  v.items.push_back(compare_values("aut_order", a.aut_order, b.aut_order,
                                   std::to_string(a.aut_order),
                                   std::to_string(b.aut_order)));
  v.items.push_back(compare_fingerprints("monodromy", a.monodromy, b.monodromy));

  for (auto const &[name, fa] : a.per_pattern) {
    if (name == "id")
      continue;
    for (auto const &[other, fb] : b.per_pattern)
      if (other == name) {
        v.items.push_back(compare_fingerprints("M_" + name, fa, fb));
        break;
      }
  }

  InvariantVerdict nielsen{"nielsen", Comparison::equal, "equal class data"};
  if (nielsen_compare(a.nielsen, b.nielsen) == Separation::distinguished) {
    nielsen.status = Comparison::different;
    nielsen.detail = "class data differs";
  } else if (!a.nielsen.resolved || !b.nielsen.resolved) {
    nielsen.status = Comparison::unknown;
    nielsen.detail = "cycle types agree; classes not resolved in this group";
  }
  v.items.push_back(std::move(nielsen));

  for (auto const &item : v.items)
    v.separated = v.separated || item.status == Comparison::different;
  return v;
}

Verdict distinguish(Dessin const &a, Dessin const &b,
                    std::span<ExtendingPattern const> patterns) {
  return compare_reports(report(a, patterns), report(b, patterns));
}

} // namespace dessin
