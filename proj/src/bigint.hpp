#ifndef KC_BIGINT_HPP
#define KC_BIGINT_HPP

/* Arbitrary-precision integer support. All coefficient arithmetic in the
 * library goes through mpz_class so that no sweep can silently overflow. */

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace kc {

using Int = mpz_class;

/* Raised when an internal consistency check fails (non-exact division in a
 * character sum, a negative coefficient, a cache disagreement).  These are
 * library bugs, never user errors. */
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/* Exact division that throws instead of truncating. */
inline Int divide_exact(const Int& a, const Int& b, const char* what) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw internal_error(std::string("non-exact division in ") + what);
    return q;
}

} // namespace kc

#endif
