#ifndef KC_TABLEAUX_HPP
#define KC_TABLEAUX_HPP

/* Skew tableaux, reading words, the ballot condition, Littlewood-Richardson
 * coefficients by direct enumeration of LR tableaux, and multi-LR
 * coefficients (one shape, several content blocks) both by the iterated LR
 * sum and by direct enumeration of band-ballot tableaux. */

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

struct SkewShape {
    Partition outer;
    Partition inner; /* must be contained in outer */
};

/* rows[i] holds the entries of row i left to right; row i has
 * outer_i - inner_i cells starting at absolute column inner_i. */
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;
};

/* Rows top to bottom, each row read right to left. */
std::vector<int> reading_word(const Tableau& t);

/* Every prefix contains at least as many i as i+1, for every i >= 1. */
bool is_ballot(const std::vector<int>& word);

/* Rows weakly increase, columns strictly increase, entries >= 1, and the
 * row lengths match the shape. */
bool is_ssyt(const Tableau& t);

/* Multiplicity vector of the entries (index v-1 counts value v). */
Composition type_vector(const Tableau& t);

/* Number of LR tableaux of shape outer/inner with content nu: semistandard,
 * type nu, ballot reading word.  Returns 0 when the sizes do not match or
 * inner is not contained in outer.  Memoized process-wide. */
Int lr_coefficient(const Partition& outer, const Partition& inner,
                   const Partition& nu);

/* A straight shape together with the content blocks of a multi-LR
 * coefficient.  Block r occupies the value band starting after the lengths
 * of the previous blocks. */
struct MultiLRSpec {
    Partition shape;
    std::vector<Partition> blocks;
};

/* Iterated LR sum over intermediate shapes.  Empty blocks are ignored; the
 * coefficient is symmetric in the blocks, which the implementation uses to
 * normalize its memo key. */
Int multi_lr(const MultiLRSpec& spec);

/* True when t is semistandard of the spec's straight shape, each value band
 * carries exactly the content of its block, and every band's reading word,
 * shifted to start at 1, is ballot. */
bool is_multi_lr_tableau(const MultiLRSpec& spec, const Tableau& t);

/* Direct enumeration of the tableaux described above; the count agrees with
 * multi_lr (this is the oracle pairing for the iterated sum). */
Int count_multi_lr_direct(const MultiLRSpec& spec);
std::vector<Tableau> enumerate_multi_lr_tableaux(const MultiLRSpec& spec);

void clear_tableau_caches();

} // namespace kc

#endif
