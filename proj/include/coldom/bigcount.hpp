#ifndef COLDOM_BIGCOUNT_HPP
#define COLDOM_BIGCOUNT_HPP

#include <string>

#include <gmpxx.h>

namespace coldom {

/// Arbitrary-precision nonnegative count.  Serialized as a decimal string.
using BigCount = mpz_class;

inline BigCount pow2(unsigned long e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline std::string to_decimal(const BigCount& n) { return n.get_str(); }

} // namespace coldom

#endif
