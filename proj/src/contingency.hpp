#ifndef KC_CONTINGENCY_HPP
#define KC_CONTINGENCY_HPP

/* Binary three-dimensional contingency arrays: finite point sets in N^3 with
 * prescribed plane marginals.  Provides an exact layer-by-layer counting DP,
 * a streaming enumerator, and the forced-structure checker for marginals
 * that pin the tail layers to a single line. */

#include <array>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

/* Marginal vectors may arrive from alternating sums with negative entries;
 * those are carried with valid == false and count as zero arrays. */
struct Marginals3D {
    std::vector<int> x, y, z;
    bool valid;
};

Marginals3D make_marginals(std::vector<int> x, std::vector<int> y,
                           std::vector<int> z);

/* Number of 0/1 arrays with the given marginals; 0 for invalid input.
 * Memoized process-wide on the sorted marginals (axis permutations act by
 * bijections on the arrays). */
Int count_arrays(const Marginals3D& m);

/* One array is the sorted list of its points, 1-based coordinates. */
using ContingencyArray = std::vector<std::array<int, 3>>;

std::vector<ContingencyArray> enumerate_arrays(const Marginals3D& m);

/* Debug format: one "i j k" line per point, lexicographically sorted. */
std::string dump_array(const ContingencyArray& q);

struct ForcedStructureReport {
    Int array_count;
    bool forced_contained;  /* every array contains the three forced slabs */
    bool tail_exact;        /* layers c+1..c+h meet every array in the line only */
    bool derived_hold;      /* the shape equalities implied when nonempty */
    std::vector<std::string> failures;
    bool passed() const {
        return forced_contained && tail_exact && derived_hold;
    }
};

/* Hypotheses: a >= len(alpha), b >= len(beta), c+h >= len(gamma),
 * sum_{i>c} gamma_i <= h, alpha_1 >= b*c+h, beta_1 >= a*c+h.  A violated
 * hypothesis raises std::invalid_argument naming it.  The derived equalities
 * (a = len(alpha), b = len(beta), gamma_i = 1 on the tail, alpha_1 = b*c+h,
 * beta_1 = a*c+h, alpha_2 <= b*c, beta_2 <= a*c) are checked whenever some
 * array exists; the first two only for c >= 1, where the forced slabs are
 * nonempty. */
ForcedStructureReport check_forced_structure(const Partition& alpha,
                                             const Partition& beta,
                                             const Partition& gamma, int a,
                                             int b, int c, int h);

void clear_contingency_cache();

} // namespace kc

#endif
