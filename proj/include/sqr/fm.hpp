#ifndef SQR_FM_HPP
#define SQR_FM_HPP

#include <cstddef>

#include "sqr/lp.hpp"

namespace sqr {

enum class FmVerdict { Feasible, Infeasible };

// Independent feasibility oracle: Fourier-Motzkin variable elimination over
// exact rationals. Shares no code with the simplex solver. Intended for
// small systems (n <= 6); throws TooLarge when the intermediate inequality
// count exceeds row_budget.
FmVerdict fm_oracle(const LinearSystem& sys, std::size_t row_budget = 200000);

}  // namespace sqr

#endif
