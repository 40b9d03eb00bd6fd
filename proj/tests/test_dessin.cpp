#include "doctest.h"

#include <random>

#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "oracles.hpp"

using namespace dessin;

namespace {

Dessin delta() {
  return Dessin(parse_cycles("(1 2 3 4)(5 6 7)(8 9)", 10),
                parse_cycles("(1 8 4 7)(2 3 10)(5 6)", 10));
}
Dessin omega() {
  return Dessin(parse_cycles("(1 2 3 4)(5 6 7)(8 9)", 10),
                parse_cycles("(1 3 8 9)(2 10)(4 5 6)", 10));
}

} // namespace

TEST_CASE("z is (xy)^-1") {
  CHECK(z_perm(delta()) == parse_cycles("(1 6 7 3)(2 10)(4 9 8)", 10));
  CHECK(z_perm(omega()) == parse_cycles("(1 8 2 10)(6 7)(3 4 5)", 10));
  CHECK(Dessin::unit().z().is_identity());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto d = random_dessin(rng, 9);
    CHECK((d.x() * d.y() * d.z()).is_identity());
  }
}

TEST_CASE("validate") {
  CHECK(validate(delta().x(), delta().y()).ok);
  CHECK(validate(Permutation(1), Permutation(1)).ok);
  auto bad = validate(parse_cycles("(1 2)", 4), Permutation(4));
  CHECK_FALSE(bad.ok);
  CHECK(bad.orbits ==
        std::vector<std::vector<point>>{{1, 2}, {3}, {4}});
  CHECK(bad.message == "not transitive; orbits {1,2} {3} {4}");
  CHECK_FALSE(validate(Permutation(3), Permutation(4)).ok);
  CHECK_THROWS_AS(Dessin(parse_cycles("(1 2)", 4), Permutation(4)),
                  validation_error);
}

TEST_CASE("valency lists") {
  ValencyList expected{{{4, 3, 2, 1}}, {{4, 3, 2, 1}}, {{4, 3, 2, 1}}};
  CHECK(delta().valency_list() == expected);
  CHECK(omega().valency_list() == expected);
  CHECK(Dessin::unit().valency_list() == ValencyList{{{1}}, {{1}}, {{1}}});
}

TEST_CASE("genus") {
  CHECK(delta().genus() == 0);
  CHECK(omega().genus() == 0);
  CHECK(Dessin::unit().genus() == 0);
  Dessin torus(parse_cycles("(1 2 3)", 3), parse_cycles("(1 2 3)", 3));
  CHECK(oracle::genus_by_triangulation(oracle::vec(torus.x()),
                                       oracle::vec(torus.y())) == 1);
  CHECK(torus.genus() == 1);
}

TEST_CASE("genus agrees with the triangulation oracle") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    auto d = random_dessin(rng, 12);
    CHECK(d.genus() == static_cast<std::size_t>(oracle::genus_by_triangulation(
                           oracle::vec(d.x()), oracle::vec(d.y()))));
  }
}

TEST_CASE("canonical form") {
  CHECK(Dessin::unit().canonical_form() == Dessin::unit());
  CHECK_FALSE(delta().canonical_form() == omega().canonical_form());
  CHECK_FALSE(are_isomorphic(delta(), omega()));
  CHECK_FALSE(are_isomorphic(delta(), Dessin::unit()));

  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto d = random_dessin(rng, 10);
    auto g = random_permutation(rng, d.degree());
    auto r = d.relabel(g);
    CHECK(r.canonical_form() == d.canonical_form());
    CHECK(are_isomorphic(d, r));
    CHECK(d.canonical_form().canonical_form() == d.canonical_form());
  }
}

TEST_CASE("bfs relabeling numbers the start edge first") {
  auto g = bfs_relabeling(delta().x(), delta().y(), 4);
  CHECK(g[4] == 0);
  CHECK_THROWS_AS(bfs_relabeling(parse_cycles("(1 2)", 3), Permutation(3), 0),
                  validation_error);
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + uniform_below(rng, 6);
    auto a = random_dessin_of_degree(rng, n);
    auto b = uniform_below(rng, 3) == 0
                 ? a.relabel(random_permutation(rng, n))
                 : random_dessin_of_degree(rng, n);
    CHECK(are_isomorphic(a, b) ==
          oracle::isomorphic(oracle::vec(a.x()), oracle::vec(a.y()),
                             oracle::vec(b.x()), oracle::vec(b.y())));
  }
}

TEST_CASE("automorphism groups") {
  CHECK(delta().automorphism_group().size() == 1);
  CHECK(omega().automorphism_group().size() == 1);
  CHECK(delta().automorphism_group().front().is_identity());
  Dessin edge(parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 2));
  CHECK(edge.automorphism_group().size() == 2);
  CHECK(oracle::automorphisms(oracle::vec(edge.x()), oracle::vec(edge.y()))
            .size() == 2);

  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<point> img(n);
    for (point i = 0; i < n; ++i)
      img[i] = (i + 1) % n;
    auto c = Permutation::from_images(img);
    for (long long j = 0; j < static_cast<long long>(n); ++j) {
      Dessin cyclic(c, c.pow(j));
      CHECK(cyclic.automorphism_group().size() == n);
    }
  }

  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    auto d = random_dessin(rng, 7);
    auto aut = d.automorphism_group();
    CHECK(d.degree() % aut.size() == 0);
    std::set<oracle::Vec> got;
    for (auto const &g : aut)
      got.insert(oracle::vec(g));
    auto brute = oracle::automorphisms(oracle::vec(d.x()), oracle::vec(d.y()));
    CHECK(got == std::set<oracle::Vec>(brute.begin(), brute.end()));
  }
}

TEST_CASE("role permutations") {
  CHECK(RolePermutation::all().size() == 6);
  for (auto h : RolePermutation::all()) {
    CHECK(h.is_valid());
    CHECK(RolePermutation::parse(h.name()) == h);
  }
  CHECK(RolePermutation::swap01().name() == "1-t");
  CHECK(RolePermutation::swap0inf().name() == "1/t");
  CHECK(RolePermutation::swap1inf().name() == "t/(t-1)");
  CHECK_THROWS_AS(RolePermutation::parse("2t"), validation_error);
  RolePermutation bad{{0, 0, 1}};
  CHECK_FALSE(bad.is_valid());
  CHECK_THROWS_AS(delta().relabel_role(bad), validation_error);
}

TEST_CASE("relabel_role") {
  CHECK(delta().relabel_role(RolePermutation::identity()) == delta());
  auto swapped = delta().relabel_role(RolePermutation::swap01());
  CHECK(swapped.x() == delta().y());
  CHECK(swapped.y() == delta().x());
  CHECK(swapped.z().cycle_type() == delta().z().cycle_type());
  CHECK(swapped.valency_list() == delta().valency_list());

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto d = random_dessin(rng, 9);
    std::array<CycleType, 3> types{d.x().cycle_type(), d.y().cycle_type(),
                                   d.z().cycle_type()};
    for (auto h : RolePermutation::all()) {
      auto r = d.relabel_role(h);
      CHECK((r.x() * r.y() * r.z()).is_identity());
      CHECK(r.genus() == d.genus());
      CHECK(r.x().cycle_type() == types[h.source[0]]);
      CHECK(r.y().cycle_type() == types[h.source[1]]);
      CHECK(r.z().cycle_type() == types[h.source[2]]);
    }
  }
}

TEST_CASE("random dessins") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    auto d = random_dessin(rng, 8);
    CHECK(d.degree() >= 1);
    CHECK(d.degree() <= 8);
    CHECK(random_dessin_of_degree(rng, 5).degree() == 5);
  }
  std::mt19937_64 a(42), b(42);
  CHECK(random_dessin(a, 8) == random_dessin(b, 8));
  for (int t = 0; t < 1000; ++t)
    CHECK(uniform_below(a, 7) < 7);
}
