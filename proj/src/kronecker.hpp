#ifndef KC_KRONECKER_HPP
#define KC_KRONECKER_HPP

/* Kronecker coefficients by three independent exact algorithms, the k'
 * variant, and a dispatching front end with a canonical-key memo.  All
 * evaluators treat size-mismatched triples as 0. */

#include <optional>
#include <string>

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

enum class KronAlgorithm { char_sum, multi_lr_sum, contingency_sum, dvir_zero };

const char* algorithm_name(KronAlgorithm a);

/* Accepts both the short CLI spellings (char, mlr, ct) and the full tag
 * names; nullopt for anything else ("auto" included, the caller decides). */
std::optional<KronAlgorithm> parse_algorithm(const std::string& name);

struct CoefficientResult {
    Int value;
    KronAlgorithm algorithm; /* route that actually produced the value */
    Partition lambda, mu, nu;
};

/* Class-grouped character sum: (1/n!) sum_rho |K_rho| chi chi chi.  The
 * division must come out exact and nonnegative; anything else is reported
 * as an internal error. */
CoefficientResult kron_char_sum(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

/* Alternating sum over permutations of len(lambda): each permutation sigma
 * assigns block sizes lambda_i - i + sigma_i, and the inner sum runs over
 * tuples of partitions of those sizes weighted by the product of the two
 * multi-LR coefficients of mu and nu against the tuple.  Candidate blocks
 * are restricted to the intersection profile of mu and nu, and partial
 * first-row/column totals prune tuples that cannot cover either shape. */
CoefficientResult kron_multi_lr(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

/* Alternating sum of binary contingency-array counts over the three
 * permutation groups of sizes len(lambda), len(mu), nu_1, with marginal
 * vectors shifted by sigma - id; negative entries make a marginal invalid
 * and contribute 0. */
CoefficientResult kron_contingency(const Partition& lambda, const Partition& mu,
                                   const Partition& nu);

/* Front end.  The length-bound vanishing test (some length exceeding the
 * product of the other two) short-circuits to 0 first.  An explicitly
 * requested algorithm then runs as-is, bypassing the memo.  The automatic
 * route uses the character sum for small sizes and otherwise picks, among
 * the 24 value-preserving relabelings of the triple (6 orderings times the
 * even transposition patterns), the cheapest driver for the multi-LR sum;
 * automatic results are memoized under the canonical key. */
CoefficientResult kron(const Partition& lambda, const Partition& mu,
                       const Partition& nu,
                       std::optional<KronAlgorithm> algorithm = std::nullopt);

Int kron_value(const Partition& lambda, const Partition& mu,
               const Partition& nu);

/* k' transposes one argument (canonically the third). */
CoefficientResult kron_prime(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

/* Smallest rendered "lambda|mu|nu" over the 24 relabelings that preserve
 * the coefficient; equal keys imply equal values, which the cache layers
 * rely on. */
std::string kron_canonical_key(const Partition& lambda, const Partition& mu,
                               const Partition& nu);

void clear_kron_cache();

} // namespace kc

#endif
