#pragma once

// Integer coefficient vectors (low-to-high) and their fast product.

#include "orbcol/numbers.hpp"

#include <vector>

namespace orbcol::detail {

using ZVec = std::vector<Integer>;

void zvec_trim(ZVec& a);
/// Product by Kronecker substitution for large inputs, schoolbook otherwise.
ZVec zvec_mul(const ZVec& a, const ZVec& b);
ZVec zvec_mul_schoolbook(const ZVec& a, const ZVec& b);
/// a += s * b (no trimming).
void zvec_addmul(ZVec& a, const ZVec& b, const Integer& s);
/// gcd of all entries together with `seed`.
Integer zvec_content(const ZVec& a, Integer seed = 0);
std::size_t zvec_max_bits(const ZVec& a);

}  // namespace orbcol::detail
