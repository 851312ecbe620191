#ifndef KC_CHARACTERS_HPP
#define KC_CHARACTERS_HPP

/* Symmetric group character values by the Murnaghan-Nakayama border-strip
 * recursion, plus conjugacy class bookkeeping.  Values are memoized for the
 * lifetime of the process behind a mutex, so concurrent evaluation is safe. */

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

/* χ^λ(μ).  Both partitions must have the same size. */
Int character(const Partition& lambda, const Partition& mu);

/* Number of standard Young tableaux of shape λ (hook length formula). */
Int dimension(const Partition& lambda);

/* z_μ = prod_j j^{m_j} m_j!  and the class size n!/z_μ. */
Int z_order(const Partition& mu);
Int class_size(const Partition& mu);

/* (−1)^{n−ℓ(μ)}, the sign character on the class of μ. */
int sign_of_class(const Partition& mu);

/* Test hooks: plant a wrong value in the memo table / reset it.  Used by the
 * fault-injection test to prove the verification harness actually detects a
 * corrupted character table; never called in production paths. */
void debug_inject_character(const Partition& lambda, const Partition& mu,
                            const Int& value);
void clear_character_cache();

} // namespace kc

#endif
