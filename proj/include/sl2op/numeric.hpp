#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sl2op {

using Int = mpz_class; // arbitrary-precision integer
using Rat = mpq_class; // exact rational, always canonical

// Thrown when a request would exceed the configured size guards
// (tensor-space construction or dense linear algebra).
class SizeGuardError : public std::runtime_error {
  public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Construction guard: spaces larger than this are refused outright.
inline constexpr long kConstructionGuard = 1'000'000;
// Dense guard: anything that materializes an N x N rational matrix.
inline constexpr long kDenseSolveGuard = 4096;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace sl2op
