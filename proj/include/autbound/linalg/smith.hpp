#pragma once

#include "autbound/linalg/dense.hpp"

#include <vector>

namespace autbound {

struct SmithForm {
    /// min(rows, cols) diagonal entries d_1 | d_2 | ..., all >= 0; zeros last.
    std::vector<Integer> diagonal;
    int rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

}  // namespace autbound
