#ifndef KC_REDUCED_HPP
#define KC_REDUCED_HPP

/* Reduced Kronecker coefficients by two independent routes (an exact
 * finite identity and the stabilizing-limit definition), plus the triple
 * constructors that translate ordinary Kronecker evaluations into reduced
 * ones and back. */

#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

struct Triple {
    Partition first, second, third;
};

/* Raised when the stabilizing sequence never settles inside the configured
 * level ceiling. */
class no_plateau_error : public std::runtime_error {
public:
    explicit no_plateau_error(const std::string& what)
        : std::runtime_error(what) {}
};

/* Raised when the two independent routes disagree; always a bug. */
class disagreement_error : public internal_error {
public:
    explicit disagreement_error(const std::string& what)
        : internal_error(what) {}
};

/* Smallest n at which all three components can be padded: each needs
 * n - |p| >= p_1. */
long long min_pad_level(const Partition& alpha, const Partition& beta,
                        const Partition& gamma);

/* ((n-|alpha|, alpha), (n-|beta|, beta), (n-|gamma|, gamma)); n below the
 * minimum level is an argument error naming that minimum. */
Triple pad(const Partition& alpha, const Partition& beta,
           const Partition& gamma, long long n);

struct StabilizationResult {
    Int value;
    long long first_level;  /* n where the returned plateau begins */
    long long last_level;   /* last n examined */
    int window;             /* consecutive equal levels required */
};

/* Evaluates the padded Kronecker coefficient at increasing levels until it
 * repeats across `window` consecutive levels; gives up past the ceiling
 * (default: total size + the largest first row + 8).  Heuristic by nature:
 * the plateau onset has no formula here, hence the window. */
StabilizationResult reduced_by_stabilization(const Partition& alpha,
                                             const Partition& beta,
                                             const Partition& gamma,
                                             int window = 3,
                                             long long ceiling = -1);

/* Exact finite sum: with roles chosen so the component of largest size
 * plays nu (cheapest valid split), sum over l = l1 + 2*l2 of
 * LR-coefficient products against an inner ordinary Kronecker coefficient.
 * A negative l means the size triangle fails, and the value is 0. */
Int reduced_by_bdo(const Partition& alpha, const Partition& beta,
                   const Partition& gamma);

/* Primary evaluator (the exact finite sum). */
Int reduced(const Partition& alpha, const Partition& beta,
            const Partition& gamma);

/* Both routes; disagreement_error if they differ. */
Int reduced_checked(const Partition& alpha, const Partition& beta,
                    const Partition& gamma, int window = 3);

/* Smallest rendered "a|b|c" over the 6 orderings (the reduced coefficient
 * is symmetric in its arguments but not transpose-invariant). */
std::string reduced_canonical_key(const Partition& alpha, const Partition& beta,
                                  const Partition& gamma);

/* k(lambda,mu,nu) = reduced(first, second, third) of this triple. */
Triple theorem1_triple(const Partition& lambda, const Partition& mu,
                       const Partition& nu);

/* The parametrized strengthening: (c^l+lambda, c^m+mu, c^(l+m) diamond nu)
 * for l >= len(lambda), m >= len(mu), c >= nu_1. */
Triple theorem1_general_triple(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int l, int m, int c);

/* k-preserving shift: (m^l+lambda, l^m+mu, 1^(lm)+nu). */
Triple shift_triple(const Partition& lambda, const Partition& mu,
                    const Partition& nu, int l, int m);

/* k-preserving walls: ((d) diamond (c^l+lambda), (e) diamond (c^m+mu),
 * c^(l+m+1) diamond nu) with d=(m+1)c, e=(l+1)c. */
Triple walls_triple(const Partition& lambda, const Partition& mu,
                    const Partition& nu, int l, int m, int c);

} // namespace kc

#endif
