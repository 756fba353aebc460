#pragma once

namespace nlft {

struct Tolerances {
  double eps_f = 1e-9;        // frequency merge distance
  double eps_c = 1e-12;       // coefficient prune threshold
  double eps_peel = 1e-8;     // minimum |a_0| accepted by a delta-comb peel
  double eps_member = 1e-7;   // identity / reproduction residual for membership
};

}  // namespace nlft
