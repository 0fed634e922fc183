#include "qpaths/algebra/multinomial.hpp"

#include <algorithm>

namespace qp {

mpz_class multinomial(long n, const std::vector<long>& parts) {
    std::vector<long> all = parts;
    long rest = n;
    for (long k : parts) rest -= k;
    all.push_back(rest);
    if (std::all_of(all.begin(), all.end(), [](long k) { return k >= 0; })) {
        mpz_class v;
        mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(n));
        for (long k : all) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
            v /= f;
        }
        return v;
    }
    if (n == -1 && std::count(all.begin(), all.end(), -1L) == 1 &&
        std::count(all.begin(), all.end(), 0L) == static_cast<long>(all.size()) - 1)
        return 1;
    return 0;
}

}  // namespace qp
