#pragma once

// Truncated cohomology rings of the classifying spaces in the towers.

#include <string_view>
#include <vector>

#include "fracchern/gcring.hpp"

namespace fracchern {

enum class Space {
  BU1,
  BU1xBUn,
  BUn,
  BUnQ,
  BUn_l,
  BSUnQ,
  BU6n_l,
  BU6nQ,
  BLU1,
  BLU1xBLUn,
  BLUn,
  BLUnQ,
  BLUbar_n_l,  // BU(1) x B(LU-bar)(n)_l
  BL0UnQ,
  BLUn_l,
  BLSUnQ,
  BhatLSUn_l,
  BhatLSUnQ,
  BSpinc,
  BLSpinc,
  S1,  // target of the loop-level determinant class
};

const std::vector<Space>& all_spaces();
std::string_view to_string(Space space);
// Throws ParseError for unknown names.
Space parse_space(std::string_view name);

// Checks l | n and returns the cap actually used: max(cap, 2n, 4), so that
// every c_k and the degree-4 Spin^c class fit.
int effective_cap(int n, int l, int degree_cap);

// Ring of the space for rank n; the cap is taken as given.
Ring space_ring(Space space, int n, int degree_cap);

}  // namespace fracchern
