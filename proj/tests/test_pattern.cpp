#include "doctest.h"

#include <random>

#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "dessin/pattern.hpp"
#include "oracles.hpp"

using namespace dessin;

namespace {

Dessin delta() {
  return Dessin(parse_cycles("(1 2 3 4)(5 6 7)(8 9)", 10),
                parse_cycles("(1 8 4 7)(2 3 10)(5 6)", 10));
}

Dessin from_vecs(std::pair<oracle::Vec, oracle::Vec> const &p) {
  return Dessin(oracle::perm(p.first), oracle::perm(p.second));
}

} // namespace

TEST_CASE("words") {
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("xYz") ==
        CrossingWord{Letter::x, Letter::y_inv, Letter::z});
  CHECK(word_to_string(parse_word("XyZ")) == "XyZ");
  CHECK(word_to_string({}) == "e");
  CHECK(inverse(parse_word("xYz")) == parse_word("ZyX"));
  CHECK_THROWS_AS(parse_word("xq"), parse_error);
}

TEST_CASE("eval_word") {
  auto d = delta();
  CHECK(eval_word({}, d).is_identity());
  CHECK(eval_word({Letter::x}, d) == d.x());
  CHECK(eval_word({Letter::z}, d) ==
        parse_cycles("(1 6 7 3)(2 10)(4 9 8)", 10));
  CHECK(eval_word(parse_word("xy"), d) == d.x() * d.y());
  CHECK(eval_word(parse_word("xyz"), d).is_identity());
  CHECK(eval_word(parse_word("xX"), d).is_identity());
}

TEST_CASE("make_pattern checks its inputs") {
  CHECK_THROWS_AS(make_pattern("bad", Permutation(2), Permutation(3),
                               {{}, {}}, {{}, {}}),
                  degree_mismatch);
  CHECK_THROWS_AS(make_pattern("bad", Permutation(2), parse_cycles("(1 2)", 2),
                               {{}}, {{}, {}}),
                  validation_error);
  CHECK_THROWS_AS(make_pattern("bad", Permutation(2), Permutation(2),
                               {{}, {}}, {{}, {}}),
                  validation_error);
}

TEST_CASE("builtins") {
  auto names = builtin_names();
  CHECK(names == std::vector<std::string>{"id", "alpha", "alpha1", "alpha2",
                                          "gamma", "gamma_01", "gamma_0inf",
                                          "gamma_1inf", "gamma_rot",
                                          "gamma_rot2", "xi"});
  CHECK(default_pattern_names() == names);
  for (auto const &n : names) {
    CHECK(is_builtin(n));
    CHECK(builtin(n).name == n);
  }
  CHECK_FALSE(is_builtin("beta2"));
  CHECK_THROWS_AS(builtin("beta2"), validation_error);
  CHECK_THROWS_AS(builtin("gamma_x"), validation_error);
  CHECK(builtin("gamma").degree() == 3);
  CHECK(builtin("xi").degree() == 6);
  CHECK(builtin("alpha").degree() == 2);
}

TEST_CASE("unit dessin is a fixed point") {
  auto g = apply(builtin("gamma"), Dessin::unit());
  CHECK(g == Dessin(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)));
  auto a = apply(builtin("alpha"), Dessin::unit());
  CHECK(are_isomorphic(a, Dessin(Permutation(2), parse_cycles("(1 2)", 2))));
  for (auto const &n : builtin_names()) {
    auto p = builtin(n);
    CHECK(are_isomorphic(apply(p, Dessin::unit()), Dessin(p.xb, p.yb)));
  }
}

TEST_CASE("id is the identity") {
  std::mt19937_64 rng(12);
  auto id = builtin("id");
  CHECK(apply(id, delta()) == delta());
  for (int t = 0; t < 100; ++t) {
    auto d = random_dessin(rng, 9);
    CHECK(apply(id, d) == d);
  }
}

TEST_CASE("gamma and xi match their cycle formulas") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    auto d = random_dessin(rng, 8);
    auto x = oracle::vec(d.x());
    auto y = oracle::vec(d.y());
    CHECK(apply(builtin("gamma"), d) ==
          from_vecs(oracle::gamma_by_formula(x, y)));
    CHECK(apply(builtin("xi"), d) == from_vecs(oracle::xi_by_formula(x, y)));
  }
}

TEST_CASE("alpha agrees with the Walsh map") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    auto d = random_dessin(rng, 8);
    auto walsh = from_vecs(oracle::walsh_map(oracle::vec(d.x()),
                                             oracle::vec(d.y())));
    CHECK(are_isomorphic(apply(builtin("alpha"), d), walsh));
  }
}

TEST_CASE("apply postconditions for every builtin") {
  std::mt19937_64 rng(15);
  for (auto const &n : builtin_names()) {
    auto p = builtin(n);
    for (int t = 0; t < 40; ++t) {
      auto d = random_dessin(rng, 8);
      auto [x, y] = apply_pair(p, d);
      INFO(n << " on [" << print_cycles(d.x()) << ", " << print_cycles(d.y())
             << "]");
      REQUIRE(validate(x, y).ok);
      Dessin out(x, y);
      CHECK(out.degree() == d.degree() * p.degree());
      CHECK(out.genus() == d.genus());
      CHECK(out.genus() == static_cast<std::size_t>(
                               oracle::genus_by_triangulation(
                                   oracle::vec(x), oracle::vec(y))));
    }
  }
}

TEST_CASE("validate_pattern") {
  for (auto const &n : builtin_names()) {
    auto check = validate_pattern(builtin(n), 50, 1);
    INFO(n);
    CHECK(check.ok);
    CHECK(check.failures.empty());
  }

  auto corrupted = builtin("gamma");
  corrupted.wx[0] = parse_word("y");
  auto check = validate_pattern(corrupted, 50, 1);
  CHECK_FALSE(check.ok);
  REQUIRE_FALSE(check.failures.empty());

  auto inverse_alpha = builtin("alpha");
  inverse_alpha.wx[1] = parse_word("Y");
  CHECK_FALSE(validate_pattern(inverse_alpha, 50, 1).ok);
  // the smallest witness: x = y = (1 2 3)
  Dessin torus(parse_cycles("(1 2 3)", 3), parse_cycles("(1 2 3)", 3));
  auto out = apply_pair(inverse_alpha, torus);
  auto twice_genus = 18 + 2 - static_cast<long long>(out.first.cycle_count()) -
                     static_cast<long long>(out.second.cycle_count()) -
                     static_cast<long long>(
                         (out.first * out.second).inverse().cycle_count());
  CHECK(twice_genus != 2);

  auto non_planar = make_pattern("torus", parse_cycles("(1 2 3)", 3),
                                 parse_cycles("(1 2 3)", 3),
                                 {{}, {}, {}}, {{}, {}, {}});
  auto np = validate_pattern(non_planar, 5, 1);
  CHECK_FALSE(np.ok);
  CHECK(np.failures.front().find("genus not preserved") != std::string::npos);

  auto long_word = builtin("gamma");
  long_word.wx[1] = parse_word("xyz");
  auto lw = validate_pattern(long_word, 5, 1);
  CHECK_FALSE(lw.warnings.empty());

  auto with_y = builtin("id");
  CHECK_FALSE(validate_pattern(with_y, 5, 1).warnings.empty());

  auto broken = builtin("gamma");
  broken.wx.pop_back();
  CHECK_FALSE(validate_pattern(broken, 5, 1).ok);
}

TEST_CASE("validate_pattern is deterministic") {
  auto corrupted = builtin("gamma");
  corrupted.wx[0] = parse_word("y");
  auto a = validate_pattern(corrupted, 20, 99);
  auto b = validate_pattern(corrupted, 20, 99);
  CHECK(a.failures == b.failures);
}

TEST_CASE("apply_sequence") {
  std::vector<ExtendingPattern> ids{builtin("id"), builtin("id")};
  CHECK(are_isomorphic(apply_sequence(ids, delta()), delta()));

  std::vector<ExtendingPattern> gg{builtin("gamma"), builtin("gamma")};
  auto out = apply_sequence(gg, Dessin::unit());
  CHECK(out.degree() == 9);
  CHECK(out.genus() == 0);

  std::vector<ExtendingPattern> mixed{builtin("alpha"), builtin("gamma")};
  auto d = Dessin(parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3));
  auto seq = apply_sequence(mixed, d);
  CHECK(seq == apply(builtin("alpha"), apply(builtin("gamma"), d)));
  CHECK(seq.degree() == 3 * 2 * 3);
  CHECK_THROWS_AS(apply_sequence(std::vector<ExtendingPattern>{}, d),
                  validation_error);
}

TEST_CASE("compose_role matches role relabeling") {
  std::mt19937_64 rng(16);
  for (auto base : {builtin("alpha"), builtin("gamma"), builtin("xi")}) {
    for (auto h : RolePermutation::all()) {
      auto composed = compose_role(base, h, "c");
      for (int t = 0; t < 10; ++t) {
        auto d = random_dessin(rng, 7);
        CHECK(apply(composed, d) == apply(base, d.relabel_role(h)));
      }
    }
  }
  CHECK(compose_role(builtin("gamma"), RolePermutation::identity(), "gamma") ==
        builtin("gamma"));
  CHECK_THROWS_AS(
      compose_role(builtin("gamma"), RolePermutation{{1, 1, 1}}, "x"),
      validation_error);
}

TEST_CASE("builtin role composites") {
  std::mt19937_64 rng(18);
  auto d = random_dessin(rng, 7);
  CHECK(apply(builtin("alpha1"), d) ==
        apply(builtin("alpha"), d.relabel_role(RolePermutation::swap0inf())));
  CHECK(apply(builtin("alpha2"), d) ==
        apply(builtin("alpha"), d.relabel_role(RolePermutation::swap1inf())));
  CHECK(apply(builtin("gamma_01"), d) ==
        apply(builtin("gamma"), d.relabel_role(RolePermutation::swap01())));
  CHECK(apply(builtin("gamma_rot2"), d) ==
        apply(builtin("gamma"), d.relabel_role(RolePermutation::rotate2())));
}

TEST_CASE("canonicalize_pattern") {
  std::mt19937_64 rng(19);
  for (auto const &n : builtin_names()) {
    auto p = builtin(n);
    auto c = canonicalize_pattern(p);
    CHECK(canonicalize_pattern(c) == c);
    for (int t = 0; t < 10; ++t) {
      auto g = random_permutation(rng, p.degree());
      auto r = relabel_pattern(p, g);
      CHECK(canonicalize_pattern(r) == c);
      CHECK(equivalent(r, p));
      // relabeled patterns give isomorphic outputs
      auto d = random_dessin(rng, 5);
      CHECK(are_isomorphic(apply(r, d), apply(p, d)));
    }
  }
  CHECK_FALSE(equivalent(builtin("gamma"), builtin("xi")));
  CHECK_FALSE(equivalent(builtin("gamma"), builtin("gamma_01")));
  auto renamed = builtin("gamma");
  renamed.name = "other";
  CHECK(equivalent(renamed, builtin("gamma")));
}
