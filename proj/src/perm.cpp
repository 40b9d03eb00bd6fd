#include "dessin/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dessin/error.hpp"

namespace dessin {

std::size_t CycleType::degree() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::string CycleType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts[i]);
  }
  return out + "}";
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), point{0});
}

Permutation Permutation::from_images(std::vector<point> images) {
  std::vector<bool> seen(images.size(), false);
  for (point v : images) {
    if (v >= images.size() || seen[v])
      throw validation_error("image sequence is not a bijection");
    seen[v] = true;
  }
  Permutation p(0);
  p.images_ = std::move(images);
  return p;
}

Permutation
Permutation::from_cycles(std::size_t degree,
                         std::vector<std::vector<point>> const &cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (point v : cycle) {
      if (v < 1 || v > degree)
        throw validation_error("point " + std::to_string(v) +
                               " outside 1.." + std::to_string(degree));
      if (used[v - 1])
        throw validation_error("repeated point " + std::to_string(v));
      used[v - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (point i = 0; i < degree(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::pow(long long k) const {
  // Walk each cycle once; k is reduced per cycle length.
  Permutation r(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<point> cyc;
  for (point s = 0; s < degree(); ++s) {
    if (seen[s])
      continue;
    cyc.clear();
    for (point v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cyc.push_back(v);
    }
    long long len = static_cast<long long>(cyc.size());
    long long shift = ((k % len) + len) % len;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      r.images_[cyc[i]] = cyc[(i + shift) % cyc.size()];
  }
  return r;
}

bool Permutation::is_identity() const {
  for (point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

bool Permutation::is_even() const {
  return (degree() - cycle_count()) % 2 == 0;
}

std::vector<std::vector<point>> Permutation::cycles() const {
  std::vector<std::vector<point>> out;
  std::vector<bool> seen(degree(), false);
  for (point s = 0; s < degree(); ++s) {
    if (seen[s] || images_[s] == s)
      continue;
    auto &cyc = out.emplace_back();
    for (point v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cyc.push_back(v);
    }
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(degree(), false);
  for (point s = 0; s < degree(); ++s) {
    if (seen[s])
      continue;
    ++count;
    for (point v = s; !seen[v]; v = images_[v])
      seen[v] = true;
  }
  return count;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  std::vector<bool> seen(degree(), false);
  for (point s = 0; s < degree(); ++s) {
    if (seen[s])
      continue;
    std::size_t len = 0;
    for (point v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      ++len;
    }
    t.parts.push_back(len);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (std::size_t part : cycle_type().parts)
    l = std::lcm(l, static_cast<std::uint64_t>(part));
  return l;
}

point Permutation::first_moved() const {
  for (point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return i;
  return static_cast<point>(degree());
}

Permutation operator*(Permutation const &p, Permutation const &q) {
  if (p.degree() != q.degree())
    throw degree_mismatch(p.degree(), q.degree());
  Permutation r(0);
  r.images_.resize(p.degree());
  for (point i = 0; i < p.degree(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation &Permutation::operator*=(Permutation const &q) {
  if (degree() != q.degree())
    throw degree_mismatch(degree(), q.degree());
  for (auto &v : images_)
    v = q.images_[v];
  return *this;
}

Permutation product_lr(Permutation const &p, Permutation const &q) {
  return p * q;
}

Permutation conjugate(Permutation const &p, Permutation const &g) {
  if (p.degree() != g.degree())
    throw degree_mismatch(p.degree(), g.degree());
  std::vector<point> img(p.degree());
  for (point i = 0; i < p.degree(); ++i)
    img[g[i]] = g[p[i]];
  return Permutation::from_images(std::move(img));
}

namespace {

std::string token_at(std::string_view text, std::size_t pos) {
  std::size_t end = pos + 1;
  if (std::isdigit(static_cast<unsigned char>(text[pos])))
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
  return "'" + std::string(text.substr(pos, end - pos)) + "' at column " +
         std::to_string(pos + 1);
}

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw parse_error("degree must be positive");
  std::vector<std::vector<point>> cycles;
  std::vector<bool> used(degree, false);
  bool open = false;
  std::size_t open_pos = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (open)
        throw parse_error("nested parenthesis " + token_at(text, i));
      open = true;
      open_pos = i;
      cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open)
        throw parse_error("unmatched parenthesis " + token_at(text, i));
      if (cycles.back().empty())
        throw parse_error("empty cycle " + token_at(text, open_pos));
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open)
        throw parse_error("point outside a cycle " + token_at(text, i));
      std::size_t start = i;
      unsigned long long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > degree + 1)
          v = degree + 1; // saturate; reported below
        ++i;
      }
      if (v == 0 || v > degree)
        throw parse_error("point " + token_at(text, start) +
                          " outside 1.." + std::to_string(degree));
      if (used[v - 1])
        throw parse_error("repeated point " + token_at(text, start));
      used[v - 1] = true;
      cycles.back().push_back(static_cast<point>(v));
    } else {
      throw parse_error("unexpected character " + token_at(text, i));
    }
  }
  if (open)
    throw parse_error("unclosed parenthesis " + token_at(text, open_pos));
  return Permutation::from_cycles(degree, cycles);
}

std::string print_cycles(Permutation const &p) {
  std::string out;
  for (auto const &cyc : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p) {
  os << print_cycles(p);
  if (p.is_identity())
    os << "()";
  return os;
}

} // namespace dessin
