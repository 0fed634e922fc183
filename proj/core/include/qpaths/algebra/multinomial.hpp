#pragma once

#include <gmpxx.h>

#include <vector>

namespace qp {

// n! / (k_1! ... k_s! (n - k_1 - ... - k_s)!).
//
// Outside the usual range the value is 0, except for n = -1 with one part
// (the remainder included) equal to -1 and all others 0, where it is 1.
mpz_class multinomial(long n, const std::vector<long>& parts);

}  // namespace qp
