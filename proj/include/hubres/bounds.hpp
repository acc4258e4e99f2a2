#pragma once

#include <string>
#include <vector>

namespace hubres {

// One evaluated two-sided inequality lower <= value <= upper. One-sided
// bounds use +/-infinity for the missing side. pass/tight are judged at
// 1e-9 relative tolerance.
struct BoundRow {
    std::string id;
    double lower;
    double value;
    double upper;
    bool pass;
    bool tight;
};

BoundRow make_bound_row(std::string id, double lower, double value, double upper);

// Header "bound_id,lhs,value,rhs,pass,tight"; floats at 12 significant
// digits, infinities as "inf"/"-inf".
std::string bounds_to_csv(const std::vector<BoundRow>& rows);

int count_bound_violations(const std::vector<BoundRow>& rows);

}  // namespace hubres
