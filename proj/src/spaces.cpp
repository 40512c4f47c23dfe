#include "fracchern/spaces.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "fracchern/errors.hpp"

namespace fracchern {

namespace {

constexpr std::array<std::pair<Space, std::string_view>, 21> kNames{{
    {Space::BU1, "BU1"},
    {Space::BU1xBUn, "BU1xBUn"},
    {Space::BUn, "BUn"},
    {Space::BUnQ, "BUnQ"},
    {Space::BUn_l, "BUn_l"},
    {Space::BSUnQ, "BSUnQ"},
    {Space::BU6n_l, "BU6n_l"},
    {Space::BU6nQ, "BU6nQ"},
    {Space::BLU1, "BLU1"},
    {Space::BLU1xBLUn, "BLU1xBLUn"},
    {Space::BLUn, "BLUn"},
    {Space::BLUnQ, "BLUnQ"},
    {Space::BLUbar_n_l, "BLUbar_n_l"},
    {Space::BL0UnQ, "BL0UnQ"},
    {Space::BLUn_l, "BLUn_l"},
    {Space::BLSUnQ, "BLSUnQ"},
    {Space::BhatLSUn_l, "BhatLSUn_l"},
    {Space::BhatLSUnQ, "BhatLSUnQ"},
    {Space::BSpinc, "BSpinc"},
    {Space::BLSpinc, "BLSpinc"},
    {Space::S1, "S1"},
}};

using Gens = std::vector<Generator>;

std::string num(int k) { return std::to_string(k); }

// c_from..c_n with an optional suffix
void chern(Gens& out, int from, int n, const std::string& suffix = "") {
  for (int k = from; k <= n; ++k) out.push_back({"c" + num(k) + suffix, 2 * k});
}

// Low-degree loop classes z1, c1, z2, c2 interleaved as in the loop rings,
// then the remaining c_k.
void loop_chern(Gens& out, int n, const std::string& suffix = "") {
  out.push_back({"z1" + suffix, 1});
  out.push_back({"c1" + suffix, 2});
  if (n >= 2) {
    out.push_back({"z2" + suffix, 3});
    out.push_back({"c2" + suffix, 4});
  }
  chern(out, 3, n, suffix);
}

}  // namespace

const std::vector<Space>& all_spaces() {
  static const std::vector<Space> spaces = [] {
    std::vector<Space> v;
    for (const auto& [s, name] : kNames) v.push_back(s);
    return v;
  }();
  return spaces;
}

std::string_view to_string(Space space) {
  for (const auto& [s, name] : kNames)
    if (s == space) return name;
  throw InternalError("unnamed space");
}

Space parse_space(std::string_view name) {
  for (const auto& [s, n] : kNames)
    if (n == name) return s;
  throw ParseError("unknown space '" + std::string(name) + "'");
}

int effective_cap(int n, int l, int degree_cap) {
  if (n < 1 || l < 1) throw PreconditionError("n and l must be positive");
  if (n % l != 0) throw PreconditionError("l = " + num(l) + " does not divide n = " + num(n));
  return std::max({degree_cap, 2 * n, 4});
}

Ring space_ring(Space space, int n, int degree_cap) {
  if (n < 1) throw PreconditionError("rank n must be positive");
  Gens g;
  switch (space) {
    case Space::BU1:
      g = {{"g", 2}};
      break;
    case Space::BU1xBUn:
      g = {{"g", 2}};
      chern(g, 1, n);
      break;
    case Space::BUn:
      chern(g, 1, n);
      break;
    case Space::BUnQ:
      chern(g, 1, n, "Q");
      break;
    case Space::BUn_l:
      g = {{"cb1", 2}};
      chern(g, 2, n);
      break;
    case Space::BSUnQ:
      chern(g, 2, n, "Q");
      break;
    case Space::BU6n_l:
      g = {{"cb1", 2}};
      chern(g, 3, n);
      break;
    case Space::BU6nQ:
      chern(g, 3, n, "Q");
      break;
    case Space::BLU1:
      g = {{"g", 2}, {"h", 1}};
      break;
    case Space::BLU1xBLUn:
      g = {{"g", 2}, {"h", 1}};
      loop_chern(g, n);
      break;
    case Space::BLUn:
      loop_chern(g, n);
      break;
    case Space::BLUnQ:
      loop_chern(g, n, "Q");
      break;
    case Space::BLUbar_n_l:
      g = {{"g", 2}, {"zb1", 1}, {"c1", 2}};
      if (n >= 2) g.insert(g.end(), {{"z2", 3}, {"c2", 4}});
      chern(g, 3, n);
      break;
    case Space::BL0UnQ:
      g = {{"c1Q", 2}};
      if (n >= 2) g.insert(g.end(), {{"z2Q", 3}, {"c2Q", 4}});
      chern(g, 3, n, "Q");
      break;
    case Space::BLUn_l:
      g = {{"zb1", 1}, {"cb1", 2}};
      if (n >= 2) g.insert(g.end(), {{"z2", 3}, {"c2", 4}});
      chern(g, 3, n);
      break;
    case Space::BLSUnQ:
      if (n >= 2) g = {{"z2Q", 3}, {"c2Q", 4}};
      chern(g, 3, n, "Q");
      break;
    case Space::BhatLSUn_l:
      g = {{"zb1", 1}, {"cb1", 2}};
      chern(g, 2, n);
      break;
    case Space::BhatLSUnQ:
      chern(g, 2, n, "Q");
      break;
    case Space::BSpinc:
      g = {{"t", 2}, {"q1", 4}};
      break;
    case Space::BLSpinc:
      g = {{"sp1", 1}, {"t", 2}, {"mu", 3}, {"q1", 4}};
      break;
    case Space::S1:
      g = {{"h", 1}};
      break;
  }
  return make_ring(std::move(g), degree_cap);
}

}  // namespace fracchern
