#include "dessin/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dessin/error.hpp"

namespace dessin {

std::string GroupFingerprint::to_string() const {
  return "order=" + order.str() + " degree=" + std::to_string(degree) +
         " transitive=" + (transitive ? "true" : "false") +
         " in_alternating=" + (in_alternating ? "true" : "false") +
         " rank=" + std::to_string(rank);
}

std::vector<std::string> fingerprint_diff(GroupFingerprint const &a,
                                          GroupFingerprint const &b) {
  std::vector<std::string> out;
  if (a.order != b.order)
    out.push_back("order");
  if (a.degree != b.degree)
    out.push_back("degree");
  if (a.transitive != b.transitive)
    out.push_back("transitive");
  if (a.in_alternating != b.in_alternating)
    out.push_back("in_alternating");
  if (a.rank != b.rank)
    out.push_back("rank");
  return out;
}

PermGroup::PermGroup(std::vector<Permutation> generators, std::size_t degree)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0)
    throw validation_error("group degree must be positive");
  if (generators_.empty())
    throw validation_error("group needs at least one generator");
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw degree_mismatch(degree_, g.degree());

  for (auto const &g : generators_)
    if (!g.is_identity() && !sift(g, 0).first.is_identity())
      add_generator(0, g);

  order_ = 1;
  for (auto const &level : levels_)
    order_ *= level.orbit.size();
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p,
                                                    std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    auto const &level = levels_[i];
    point image = p[level.base];
    if (!level.inverse_transversal[image])
      return {std::move(p), i};
    p *= *level.inverse_transversal[image];
  }
  return {std::move(p), levels_.size()};
}

// Adds g (which fixes every base point above `index`) to the strong
// generators of level `index`, then extends the basic orbit and strips every
// new Schreier generator through the levels below. On return the chain from
// `index` down is complete for the group its generators span.
void PermGroup::add_generator(std::size_t index, Permutation const &g) {
  if (index == levels_.size()) {
    Level fresh;
    fresh.base = g.first_moved();
    fresh.orbit.push_back(fresh.base);
    fresh.transversal.resize(degree_);
    fresh.inverse_transversal.resize(degree_);
    fresh.transversal[fresh.base] = Permutation(degree_);
    fresh.inverse_transversal[fresh.base] = Permutation(degree_);
    levels_.push_back(std::move(fresh));
  }

  levels_[index].gens.push_back(g);
  std::vector<std::pair<point, std::size_t>> work;
  {
    auto const &level = levels_[index];
    std::size_t s = level.gens.size() - 1;
    for (point p : level.orbit)
      work.emplace_back(p, s);
  }

  while (!work.empty()) {
    auto [p, s] = work.back();
    work.pop_back();

    // levels_ may grow inside the recursive call; re-index each time.
    Permutation const &gen = levels_[index].gens[s];
    point q = gen[p];
    if (!levels_[index].transversal[q]) {
      auto &level = levels_[index];
      Permutation t = *level.transversal[p] * gen;
      level.inverse_transversal[q] = t.inverse();
      level.transversal[q] = std::move(t);
      level.orbit.push_back(q);
      for (std::size_t t_idx = 0; t_idx < level.gens.size(); ++t_idx)
        work.emplace_back(q, t_idx);
      continue;
    }

    Permutation schreier = *levels_[index].transversal[p] * gen *
                           *levels_[index].inverse_transversal[q];
    auto [residue, stop] = sift(std::move(schreier), index + 1);
    (void)stop;
    if (!residue.is_identity())
      add_generator(index + 1, residue);
  }
}

std::vector<point> PermGroup::base() const {
  std::vector<point> out;
  for (auto const &level : levels_)
    out.push_back(level.base);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (auto const &level : levels_)
    out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(Permutation const &p) const {
  if (p.degree() != degree_)
    throw degree_mismatch(degree_, p.degree());
  return sift(p, 0).first.is_identity();
}

std::vector<std::vector<point>> PermGroup::orbits() const {
  std::vector<int> label(degree_, -1);
  std::vector<std::vector<point>> out;
  for (point s = 0; s < degree_; ++s) {
    if (label[s] >= 0)
      continue;
    auto &orbit = out.emplace_back();
    label[s] = static_cast<int>(out.size() - 1);
    orbit.push_back(s);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto const &g : generators_) {
        point q = g[orbit[i]];
        if (label[q] < 0) {
          label[q] = label[s];
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_symmetric() const { return order_ == factorial(degree_); }

bool PermGroup::is_alternating() const {
  return degree_ >= 2 && order_ * 2 == factorial(degree_);
}

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

} // namespace

GroupFingerprint PermGroup::fingerprint() const {
  GroupFingerprint fp;
  fp.order = order_;
  fp.degree = degree_;
  fp.transitive = is_transitive();
  fp.in_alternating = std::all_of(generators_.begin(), generators_.end(),
                                  [](auto const &g) { return g.is_even(); });

  // Orbits on ordered pairs (i, j), encoded i * d + j.
  std::size_t const n = degree_;
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::size_t classes = n * n;
  for (auto const &g : generators_)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t a = find_root(parent, i * n + j);
        std::size_t b = find_root(parent, g[i] * n + g[j]);
        if (a != b) {
          parent[a] = b;
          --classes;
        }
      }
  fp.rank = classes;
  return fp;
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

bool class_splits_in_alternating(CycleType const &t) {
  if (t.degree() < 2)
    return false;
  std::set<std::size_t> seen;
  for (std::size_t part : t.parts) {
    if (part % 2 == 0 || !seen.insert(part).second)
      return false;
  }
  return true;
}

std::string to_string(Conjugacy c) {
  switch (c) {
  case Conjugacy::conjugate:
    return "conjugate";
  case Conjugacy::not_conjugate:
    return "not-conjugate";
  case Conjugacy::unknown:
    break;
  }
  return "unknown";
}

Permutation relabeling_conjugator(Permutation const &a, Permutation const &b) {
  if (a.degree() != b.degree())
    throw degree_mismatch(a.degree(), b.degree());
  auto full_cycles = [](Permutation const &p) {
    std::vector<std::vector<point>> out;
    std::vector<bool> seen(p.degree(), false);
    for (point s = 0; s < p.degree(); ++s) {
      if (seen[s])
        continue;
      auto &cyc = out.emplace_back();
      for (point v = s; !seen[v]; v = p[v]) {
        seen[v] = true;
        cyc.push_back(v);
      }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const &l, auto const &r) {
      return l.size() > r.size();
    });
    return out;
  };
  auto ca = full_cycles(a);
  auto cb = full_cycles(b);
  if (ca.size() != cb.size())
    throw validation_error("relabeling requires equal cycle types");
  std::vector<point> img(a.degree());
  for (std::size_t c = 0; c < ca.size(); ++c) {
    if (ca[c].size() != cb[c].size())
      throw validation_error("relabeling requires equal cycle types");
    for (std::size_t i = 0; i < ca[c].size(); ++i)
      img[ca[c][i]] = cb[c][i];
  }
  return Permutation::from_images(std::move(img));
}

Conjugacy conjugacy_in_group(Permutation const &a, Permutation const &b,
                             PermGroup const &g) {
  if (!g.contains(a) || !g.contains(b))
    throw validation_error("conjugacy test needs both elements in the group");
  CycleType ta = a.cycle_type();
  if (ta != b.cycle_type())
    return Conjugacy::not_conjugate;
  if (g.is_symmetric())
    return Conjugacy::conjugate;
  if (g.is_alternating()) {
    // Inside A_d a split class is decided by the parity of any relabeling;
    // the centralizer in S_d is all even, so the parity is well defined.
    if (!class_splits_in_alternating(ta))
      return Conjugacy::conjugate;
    return relabeling_conjugator(a, b).is_even() ? Conjugacy::conjugate
                                                 : Conjugacy::not_conjugate;
  }
  return Conjugacy::unknown;
}

} // namespace dessin
