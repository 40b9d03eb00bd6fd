#include "dessin/pattern.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>

#include "dessin/error.hpp"

namespace dessin {

Letter inverse(Letter l) {
  switch (l) {
  case Letter::x:
    return Letter::x_inv;
  case Letter::x_inv:
    return Letter::x;
  case Letter::y:
    return Letter::y_inv;
  case Letter::y_inv:
    return Letter::y;
  case Letter::z:
    return Letter::z_inv;
  case Letter::z_inv:
    break;
  }
  return Letter::z;
}

CrossingWord inverse(CrossingWord const &w) {
  CrossingWord out(w.rbegin(), w.rend());
  for (auto &l : out)
    l = inverse(l);
  return out;
}

CrossingWord parse_word(std::string_view text) {
  CrossingWord w;
  if (text == "e")
    return w;
  for (char c : text) {
    switch (c) {
    case 'x':
      w.push_back(Letter::x);
      break;
    case 'X':
      w.push_back(Letter::x_inv);
      break;
    case 'y':
      w.push_back(Letter::y);
      break;
    case 'Y':
      w.push_back(Letter::y_inv);
      break;
    case 'z':
      w.push_back(Letter::z);
      break;
    case 'Z':
      w.push_back(Letter::z_inv);
      break;
    default:
      throw parse_error("bad letter '" + std::string(1, c) + "' in word '" +
                        std::string(text) + "'");
    }
  }
  return w;
}

std::string word_to_string(CrossingWord const &w) {
  if (w.empty())
    return "e";
  static constexpr char letters[] = {'x', 'X', 'y', 'Y', 'z', 'Z'};
  std::string out;
  for (auto l : w)
    out += letters[static_cast<int>(l)];
  return out;
}

ExtendingPattern make_pattern(std::string name, Permutation xb, Permutation yb,
                              std::vector<CrossingWord> wx,
                              std::vector<CrossingWord> wy) {
  std::size_t const m = xb.degree();
  if (yb.degree() != m)
    throw degree_mismatch(m, yb.degree());
  if (wx.size() != m || wy.size() != m)
    throw validation_error("pattern '" + name +
                           "' needs one x-word and one y-word per gray edge");
  auto gray = validate(xb, yb);
  if (!gray.ok)
    throw validation_error("pattern '" + name + "': gray pair " +
                           gray.message);
  return {std::move(name), std::move(xb), std::move(yb), std::move(wx),
          std::move(wy)};
}

namespace {

struct Generators {
  Permutation x, xi, y, yi, z, zi;

  explicit Generators(Dessin const &d)
      : x(d.x()), xi(d.x().inverse()), y(d.y()), yi(d.y().inverse()),
        z(d.z()), zi(d.z().inverse()) {}

  Permutation const &operator[](Letter l) const {
    switch (l) {
    case Letter::x:
      return x;
    case Letter::x_inv:
      return xi;
    case Letter::y:
      return y;
    case Letter::y_inv:
      return yi;
    case Letter::z:
      return z;
    case Letter::z_inv:
      break;
    }
    return zi;
  }
};

Permutation eval_with(CrossingWord const &w, Generators const &gens,
                      std::size_t degree) {
  Permutation r(degree);
  for (auto l : w)
    r *= gens[l];
  return r;
}

} // namespace

Permutation eval_word(CrossingWord const &w, Dessin const &d) {
  return eval_with(w, Generators(d), d.degree());
}

std::pair<Permutation, Permutation> apply_pair(ExtendingPattern const &p,
                                               Dessin const &d) {
  std::size_t const m = p.degree();
  std::size_t const n = d.degree();
  Generators gens(d);
  std::vector<point> xo(n * m), yo(n * m);
  for (point b = 0; b < m; ++b) {
    Permutation const wx = eval_with(p.wx[b], gens, n);
    Permutation const wy = eval_with(p.wy[b], gens, n);
    for (point a = 0; a < n; ++a) {
      xo[pair_index(a, b, m)] = pair_index(wx[a], p.xb[b], m);
      yo[pair_index(a, b, m)] = pair_index(wy[a], p.yb[b], m);
    }
  }
  return {Permutation::from_images(std::move(xo)),
          Permutation::from_images(std::move(yo))};
}

Dessin apply(ExtendingPattern const &p, Dessin const &d) {
  auto [x, y] = apply_pair(p, d);
  return Dessin(std::move(x), std::move(y));
}

Dessin apply_sequence(std::span<ExtendingPattern const> patterns,
                      Dessin const &d) {
  if (patterns.empty())
    throw validation_error("empty pattern sequence");
  Dessin out = d;
  for (auto it = patterns.rbegin(); it != patterns.rend(); ++it)
    out = apply(*it, out);
  return out;
}

ExtendingPattern compose_role(ExtendingPattern const &p,
                              RolePermutation const &h, std::string name) {
  if (!h.is_valid())
    throw validation_error("invalid role permutation");
  static CrossingWord const slot[3] = {{Letter::x}, {Letter::y}, {Letter::z}};
  CrossingWord const nx = slot[h.source[0]];
  CrossingWord const ny = slot[h.source[1]];
  // z' = (x' y')^-1 = y'^-1 x'^-1.
  CrossingWord nz = inverse(ny);
  for (auto l : inverse(nx))
    nz.push_back(l);

  auto substitute = [&](CrossingWord const &w) {
    CrossingWord out;
    for (auto l : w) {
      CrossingWord piece;
      switch (l) {
      case Letter::x:
        piece = nx;
        break;
      case Letter::x_inv:
        piece = inverse(nx);
        break;
      case Letter::y:
        piece = ny;
        break;
      case Letter::y_inv:
        piece = inverse(ny);
        break;
      case Letter::z:
        piece = nz;
        break;
      case Letter::z_inv:
        piece = inverse(nz);
        break;
      }
      for (auto q : piece) {
        if (!out.empty() && out.back() == inverse(q))
          out.pop_back();
        else
          out.push_back(q);
      }
    }
    return out;
  };

  ExtendingPattern out = p;
  out.name = std::move(name);
  for (auto &w : out.wx)
    w = substitute(w);
  for (auto &w : out.wy)
    w = substitute(w);
  return out;
}

PatternCheck validate_pattern(ExtendingPattern const &p, std::size_t trials,
                              std::uint64_t seed) {
  PatternCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };

  std::size_t const m = p.degree();
  if (p.yb.degree() != m) {
    fail("gray pair degree mismatch");
    return check;
  }
  if (p.wx.size() != m || p.wy.size() != m) {
    fail("words missing for some gray edges");
    return check;
  }
  auto gray = validate(p.xb, p.yb);
  if (!gray.ok) {
    fail("gray pair: " + gray.message);
    return check;
  }
  for (point b = 0; b < m; ++b) {
    if (p.wx[b].size() > 2)
      check.warnings.push_back("x-word of edge " + std::to_string(b + 1) +
                               " has length " +
                               std::to_string(p.wx[b].size()));
    if (p.wy[b].size() > 2)
      check.warnings.push_back("y-word of edge " + std::to_string(b + 1) +
                               " has length " +
                               std::to_string(p.wy[b].size()));
  }
  if (std::any_of(p.wy.begin(), p.wy.end(),
                  [](auto const &w) { return !w.empty(); }))
    check.warnings.push_back(
        "nonempty y-words assume the x-step crossing rule around 1-vertices");

  Dessin const gray_dessin(p.xb, p.yb);
  {
    auto [x, y] = apply_pair(p, Dessin::unit());
    if (!validate(x, y).ok ||
        Dessin(x, y).canonical_form() != gray_dessin.canonical_form())
      fail("unit dessin does not map to the gray dessin");
  }
  if (gray_dessin.genus() != 0)
    fail("genus not preserved: gray dessin has genus " +
         std::to_string(gray_dessin.genus()));

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials && check.ok; ++t) {
    Dessin const d = random_dessin(rng, 8);
    auto [x, y] = apply_pair(p, d);
    std::string const where =
        " on trial " + std::to_string(t + 1) + " [" + print_cycles(d.x()) +
        ", " + print_cycles(d.y()) + "] degree " + std::to_string(d.degree());
    if (x.degree() != d.degree() * m) {
      fail("degree not multiplicative" + where);
      break;
    }
    if (!validate(x, y).ok) {
      fail("output not transitive" + where);
      break;
    }
    Dessin const out(std::move(x), std::move(y));
    std::size_t g_out;
    try {
      g_out = out.genus();
    } catch (validation_error const &) {
      fail("genus not preserved (output is not a valid surface)" + where);
      break;
    }
    if (g_out != d.genus())
      fail("genus not preserved: " + std::to_string(d.genus()) + " -> " +
           std::to_string(g_out) + where);
  }
  return check;
}

ExtendingPattern relabel_pattern(ExtendingPattern const &p,
                                 Permutation const &g) {
  ExtendingPattern out = p;
  out.xb = conjugate(p.xb, g);
  out.yb = conjugate(p.yb, g);
  for (point b = 0; b < p.degree(); ++b) {
    out.wx[g[b]] = p.wx[b];
    out.wy[g[b]] = p.wy[b];
  }
  return out;
}

ExtendingPattern canonicalize_pattern(ExtendingPattern const &p) {
  using Key = std::tuple<std::vector<point>, std::vector<point>,
                         std::vector<CrossingWord>, std::vector<CrossingWord>>;
  std::optional<Key> best_key;
  std::optional<ExtendingPattern> best;
  for (point s = 0; s < p.degree(); ++s) {
    ExtendingPattern cand =
        relabel_pattern(p, bfs_relabeling(p.xb, p.yb, s));
    Key key{{cand.xb.images().begin(), cand.xb.images().end()},
            {cand.yb.images().begin(), cand.yb.images().end()},
            cand.wx,
            cand.wy};
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return *best;
}

bool equivalent(ExtendingPattern const &a, ExtendingPattern const &b) {
  if (a.degree() != b.degree())
    return false;
  auto ca = canonicalize_pattern(a);
  auto cb = canonicalize_pattern(b);
  ca.name.clear();
  cb.name.clear();
  return ca == cb;
}

namespace {

std::vector<CrossingWord> words(std::initializer_list<char const *> texts) {
  std::vector<CrossingWord> out;
  for (auto const *t : texts)
    out.push_back(parse_word(t));
  return out;
}

ExtendingPattern alpha_pattern() {
  // 4t(1-t): the gray segment [0,1] splits into [0,1/2] (edge 1, at the
  // black 0-vertex) and [1/2,1] (edge 2, at the black 1-vertex). Turning
  // around 0 crosses the 0-infinity segment from the upper to the lower
  // hemisphere; turning around 1 crosses 1-infinity from lower to upper.
  return make_pattern("alpha", Permutation(2), parse_cycles("(1 2)", 2),
                      words({"x", "y"}), words({"e", "e"}));
}

ExtendingPattern gamma_pattern() {
  return make_pattern("gamma", parse_cycles("(1 2)", 3),
                      parse_cycles("(2 3)", 3), words({"x", "e", "y"}),
                      words({"e", "e", "e"}));
}

ExtendingPattern xi_pattern() {
  // Edges a..f are 1..6.
  return make_pattern("xi", parse_cycles("(1 6)(2 3)(4 5)", 6),
                      parse_cycles("(1 2)(3 4)(5 6)", 6),
                      words({"e", "y", "e", "z", "e", "x"}),
                      words({"e", "e", "e", "e", "e", "e"}));
}

constexpr char const *kGammaSuffixes[] = {"01", "0inf", "1inf", "rot",
                                          "rot2"};

RolePermutation suffix_role(std::string_view suffix) {
  if (suffix == "01")
    return RolePermutation::swap01();
  if (suffix == "0inf")
    return RolePermutation::swap0inf();
  if (suffix == "1inf")
    return RolePermutation::swap1inf();
  if (suffix == "rot")
    return RolePermutation::rotate();
  return RolePermutation::rotate2();
}

} // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"id", "alpha", "alpha1", "alpha2", "gamma"};
  for (auto const *s : kGammaSuffixes)
    names.push_back(std::string("gamma_") + s);
  names.push_back("xi");
  return names;
}

std::vector<std::string> default_pattern_names() { return builtin_names(); }

bool is_builtin(std::string_view name) {
  auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExtendingPattern builtin(std::string_view name) {
  if (name == "id")
    // One gray edge: each step loops once around a black vertex.
    return make_pattern("id", Permutation(1), Permutation(1), words({"x"}),
                        words({"y"}));
  if (name == "alpha")
    return alpha_pattern();
  if (name == "alpha1") // alpha o (1/t)
    return compose_role(alpha_pattern(), RolePermutation::swap0inf(),
                        "alpha1");
  if (name == "alpha2") // alpha o (t/(t-1))
    return compose_role(alpha_pattern(), RolePermutation::swap1inf(),
                        "alpha2");
  if (name == "gamma")
    return gamma_pattern();
  if (name == "xi")
    return xi_pattern();
  if (name.starts_with("gamma_")) {
    auto suffix = name.substr(6);
    for (auto const *s : kGammaSuffixes)
      if (suffix == s)
        return compose_role(gamma_pattern(), suffix_role(suffix),
                            std::string(name));
  }
  throw validation_error("unknown pattern '" + std::string(name) + "'");
}

} // namespace dessin
