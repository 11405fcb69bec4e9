#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubekit/descent.hpp"

namespace cubekit {

/**
 * One row of the embedded numerical-examples regression table.  h and
 * r_al come from full class-group and rank computations and are echoed
 * as display-only; the h₃ cells and the rank-0 verdicts are recomputed.
 */
struct Table1Row {
    Family family;
    uint64_t ell;
    int r_al;             // echo only
    long h;               // echo only (class number of the h3 field, or of 4ℓ/2ℓ for l/l2)
    std::optional<int> expected_h3;  // checked when present
    bool check_verdict;              // rank-0 rows in the 2l/2l2/3l/3l2 blocks
};

const std::vector<Table1Row>& table1_rows();

struct Table1Result {
    Table1Row row;
    std::optional<int> computed_h3;
    std::optional<Outcome> computed_verdict;
    bool checked = false;  // false = echo-only row
    bool pass = true;
};

std::vector<Table1Result> run_table1();

}  // namespace cubekit
