#ifndef KC_PARTITION_HPP
#define KC_PARTITION_HPP

/* Integer partitions and the shape arithmetic used throughout the library:
 * transpose, row-wise addition, the diamond product (transpose-add-transpose),
 * rectangles, containment, parsing/rendering of the bracket syntax, and
 * deterministic generators for partitions and signed permutations. */

#include <functional>
#include <string>
#include <vector>

namespace kc {

/* A partition is stored canonically: weakly decreasing positive parts, no
 * trailing zeros.  The empty partition is the default value. */
class Partition {
public:
    Partition() = default;

    /* Accepts weakly decreasing parts with optional trailing zeros; anything
     * else (negative entries, an increase, interior zeros) is rejected with
     * std::invalid_argument. */
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* 0-based row access; rows past the end read as 0. */
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    int first() const { return part(0); }

    long long size() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    /* Lexicographic on the part vectors; used only for deterministic maps. */
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/* λ'_j = number of rows of length >= j. */
Partition transpose(const Partition& p);

/* (λ+μ)_i = λ_i + μ_i, shorter argument padded with zeros. */
Partition add_rows(const Partition& a, const Partition& b);

/* λ⋄μ = (λ' + μ')', equivalently the parts of λ and μ merged and sorted. */
Partition diamond(const Partition& a, const Partition& b);

/* a^b: b rows of length a.  Requires a, b >= 1. */
Partition rectangle(int a, int b);

/* inner_i <= outer_i for every row. */
bool contains(const Partition& outer, const Partition& inner);

/* Componentwise minimum of the two row profiles (diagram intersection). */
Partition min_profile(const Partition& a, const Partition& b);

/* Bracket syntax: "[4,2,1]", empty partition "[]".  parse accepts interior
 * whitespace and trailing zero parts; render emits the canonical form, and
 * parse(render(p)) == p exactly.  parse rejects partitions whose size
 * exceeds the configured input limit. */
Partition parse_partition(const std::string& text);
std::string render_partition(const Partition& p);

/* Input size ceiling applied by parse_partition and the sweep generators so
 * runaway requests fail fast.  Internally constructed partitions (padded or
 * rectangle-extended shapes) are not subject to it. */
int max_input_size();
void set_max_input_size(int limit);

/* Weak compositions appear as tableau types and marginal vectors. */
using Composition = std::vector<int>;
long long composition_size(const Composition& c);
/* Sorts a nonnegative vector into a partition; rejects negative entries. */
Partition sorted_to_partition(const Composition& c);

/* Enumeration of the partitions of n in reverse-lexicographic order, (n)
 * first and (1^n) last.  max_length / max_part of -1 mean unbounded.  The
 * bounded forms are the workhorse of every coefficient sum: with both bounds
 * tight the cost is proportional to the number of partitions emitted. */
void for_each_partition(long long n, int max_length, int max_part,
                        const std::function<void(const std::vector<int>&)>& f);
std::vector<Partition> partitions_of(long long n, int max_length = -1,
                                     int max_part = -1);

/* Permutations of {1..k} in lexicographic order with running sign.  The
 * prefix predicate sees (position, value) for each tentative assignment and
 * can cut the whole subtree; both callbacks may assume 0-based positions and
 * 1-based values. */
void for_each_permutation(
    int k, const std::function<bool(int, int)>& prefix_ok,
    const std::function<void(const std::vector<int>&, int)>& emit);

} // namespace kc

#endif
