#include "dessin/dessin.hpp"

#include <algorithm>
#include <deque>

#include "dessin/error.hpp"

namespace dessin {

std::string ValencyList::to_string() const {
  return at0.to_string() + " " + at1.to_string() + " " + at_inf.to_string();
}

std::array<RolePermutation, 6> RolePermutation::all() {
  return {identity(), swap01(), swap0inf(), swap1inf(), rotate(), rotate2()};
}

bool RolePermutation::is_valid() const {
  std::array<bool, 3> seen{};
  for (auto s : source) {
    if (s > 2 || seen[s])
      return false;
    seen[s] = true;
  }
  return true;
}

std::string RolePermutation::name() const {
  if (*this == identity())
    return "t";
  if (*this == swap01())
    return "1-t";
  if (*this == swap0inf())
    return "1/t";
  if (*this == swap1inf())
    return "t/(t-1)";
  if (*this == rotate())
    return "(t-1)/t";
  if (*this == rotate2())
    return "1/(1-t)";
  return "invalid";
}

RolePermutation RolePermutation::parse(std::string_view name) {
  for (auto const &h : all())
    if (h.name() == name)
      return h;
  throw validation_error("unknown role permutation '" + std::string(name) +
                         "'");
}

TransitivityReport validate(Permutation const &x, Permutation const &y) {
  TransitivityReport r;
  if (x.degree() != y.degree()) {
    r.ok = false;
    r.message = "degree mismatch: x has degree " + std::to_string(x.degree()) +
                ", y has degree " + std::to_string(y.degree());
    return r;
  }
  std::size_t const d = x.degree();
  std::vector<int> label(d, -1);
  for (point s = 0; s < d; ++s) {
    if (label[s] >= 0)
      continue;
    int id = static_cast<int>(r.orbits.size());
    std::vector<point> orbit{s};
    label[s] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (point q : {x[orbit[i]], y[orbit[i]]})
        if (label[q] < 0) {
          label[q] = id;
          orbit.push_back(q);
        }
    std::sort(orbit.begin(), orbit.end());
    for (auto &v : orbit)
      ++v;
    r.orbits.push_back(std::move(orbit));
  }
  if (r.orbits.size() > 1) {
    r.ok = false;
    r.message = "not transitive; orbits";
    for (auto const &orbit : r.orbits) {
      r.message += " {";
      for (std::size_t i = 0; i < orbit.size(); ++i)
        r.message += (i ? "," : "") + std::to_string(orbit[i]);
      r.message += "}";
    }
  }
  return r;
}

Dessin::Dessin(Permutation x, Permutation y)
    : x_(std::move(x)), y_(std::move(y)) {
  auto report = validate(x_, y_);
  if (!report.ok)
    throw validation_error(report.message);
}

Permutation Dessin::z() const { return (x_ * y_).inverse(); }

Permutation z_perm(Dessin const &d) { return d.z(); }

ValencyList Dessin::valency_list() const {
  return {x_.cycle_type(), y_.cycle_type(), z().cycle_type()};
}

std::size_t Dessin::genus() const {
  long long twice = static_cast<long long>(degree()) + 2 -
                    static_cast<long long>(x_.cycle_count()) -
                    static_cast<long long>(y_.cycle_count()) -
                    static_cast<long long>(z().cycle_count());
  if (twice < 0 || twice % 2 != 0)
    throw validation_error("invalid dessin: Euler characteristic gives genus " +
                           std::to_string(twice) + "/2");
  return static_cast<std::size_t>(twice / 2);
}

Dessin Dessin::relabel(Permutation const &g) const {
  return Dessin(conjugate(x_, g), conjugate(y_, g));
}

Dessin Dessin::relabel_role(RolePermutation const &h) const {
  if (!h.is_valid())
    throw validation_error("invalid role permutation");
  std::array<Permutation, 3> roles{x_, y_, z()};
  return Dessin(roles[h.source[0]], roles[h.source[1]]);
}

Permutation bfs_relabeling(Permutation const &x, Permutation const &y,
                           point start) {
  std::size_t const d = x.degree();
  Permutation const xi = x.inverse();
  Permutation const yi = y.inverse();
  std::vector<point> label(d, static_cast<point>(d));
  std::vector<point> order;
  order.reserve(d);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    point v = order[i];
    for (point q : {x[v], xi[v], y[v], yi[v]})
      if (label[q] == d) {
        label[q] = static_cast<point>(order.size());
        order.push_back(q);
      }
  }
  if (order.size() != d)
    throw validation_error("relabeling requires a transitive pair");
  return Permutation::from_images(std::move(label));
}

Permutation canonical_relabeling(Permutation const &x, Permutation const &y) {
  std::size_t const d = x.degree();
  std::optional<Permutation> best_g;
  std::vector<point> best;
  std::vector<point> cand(2 * d);
  for (point s = 0; s < d; ++s) {
    Permutation g = bfs_relabeling(x, y, s);
    for (point v = 0; v < d; ++v) {
      cand[g[v]] = g[x[v]];
      cand[d + g[v]] = g[y[v]];
    }
    if (!best_g || cand < best) {
      best = cand;
      best_g = std::move(g);
    }
  }
  return *best_g;
}

Dessin Dessin::canonical_form() const {
  return relabel(canonical_relabeling(x_, y_));
}

bool are_isomorphic(Dessin const &a, Dessin const &b) {
  return a.degree() == b.degree() && a.canonical_form() == b.canonical_form();
}

std::vector<Permutation> Dessin::automorphism_group() const {
  // An automorphism commutes with x and y, so on a transitive pair it is
  // fixed by the image of edge 0.
  std::size_t const d = degree();
  Permutation const xi = x_.inverse();
  Permutation const yi = y_.inverse();
  std::array<Permutation const *, 4> gens{&x_, &xi, &y_, &yi};
  std::vector<Permutation> out;
  std::vector<point> img(d);
  std::vector<bool> used(d);
  std::vector<point> order;
  for (point t = 0; t < d; ++t) {
    std::fill(img.begin(), img.end(), static_cast<point>(d));
    std::fill(used.begin(), used.end(), false);
    order.assign(1, 0);
    img[0] = t;
    used[t] = true;
    bool ok = true;
    for (std::size_t i = 0; ok && i < order.size(); ++i) {
      point v = order[i];
      for (auto const *g : gens) {
        point src = (*g)[v];
        point dst = (*g)[img[v]];
        if (img[src] == d) {
          if (used[dst]) {
            ok = false;
            break;
          }
          img[src] = dst;
          used[dst] = true;
          order.push_back(src);
        } else if (img[src] != dst) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      out.push_back(Permutation::from_images(img));
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  std::uint64_t const limit =
      std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Permutation random_permutation(std::mt19937_64 &rng, std::size_t degree) {
  std::vector<point> img(degree);
  for (point i = 0; i < degree; ++i)
    img[i] = i;
  for (std::size_t i = degree; i > 1; --i)
    std::swap(img[i - 1], img[uniform_below(rng, i)]);
  return Permutation::from_images(std::move(img));
}

Dessin random_dessin_of_degree(std::mt19937_64 &rng, std::size_t degree) {
  for (;;) {
    Permutation x = random_permutation(rng, degree);
    Permutation y = random_permutation(rng, degree);
    if (validate(x, y).ok)
      return Dessin(std::move(x), std::move(y));
  }
}

Dessin random_dessin(std::mt19937_64 &rng, std::size_t max_degree) {
  return random_dessin_of_degree(rng, 1 + uniform_below(rng, max_degree));
}

} // namespace dessin
