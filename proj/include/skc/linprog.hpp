#pragma once

#include <string>
#include <vector>

#include "skc/errors.hpp"
#include "skc/value.hpp"

namespace skc {

// Minimization LP over nonnegative variables:
//   minimize c'x  subject to  row_k' x >= rhs_k for every k,  x >= 0.
// Entries are Values; float entries are lifted to scaled rationals before
// solving, so the optimum is always an exact rational of the (possibly
// lifted) data.
struct LinearProgram {
    std::size_t vars = 0;
    std::vector<std::vector<Value>> rows;
    std::vector<Value> rhs;
    std::vector<Value> objective;

    void add_row(std::vector<Value> coefficients, Value bound);
};

class LpInfeasible : public std::runtime_error {
public:
    LpInfeasible() : std::runtime_error("linear program is infeasible") {}
};

class LpUnbounded : public std::runtime_error {
public:
    LpUnbounded() : std::runtime_error("linear program is unbounded") {}
};

struct SimplexSolution {
    Value optimum;              // exact rational
    std::vector<Value> witness; // feasible point attaining the optimum
};

// Two-phase dense tableau simplex with Bland's anti-cycling rule, exact
// rational arithmetic throughout. The witness is re-verified against every
// constraint row before returning.
SimplexSolution simplex_min(const LinearProgram& lp);

} // namespace skc
