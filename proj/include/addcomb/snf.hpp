#pragma once

#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

// Row-major integer matrix.
using IntMat = std::vector<std::vector<Integer>>;

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& A, const IntMat& B);

// Smith normal form: D = U * M * V with U, V unimodular and D diagonal,
// nonnegative, each diagonal entry dividing the next.
struct SmithForm {
    IntMat U, D, V;
    std::size_t rows = 0, cols = 0;
};

SmithForm smith_normal_form(IntMat M);

// Does M z = e have an integer solution z? Empty matrices are handled:
// with zero columns only e = 0 is solvable.
bool lattice_contains(const SmithForm& snf, const std::vector<Integer>& e);
bool lattice_contains(const IntMat& M, const std::vector<Integer>& e);

}  // namespace addcomb
