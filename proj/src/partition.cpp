#include "partition.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <stdexcept>

namespace kc {

static std::atomic<int> g_max_input_size{64};

int max_input_size() { return g_max_input_size.load(); }

void set_max_input_size(int limit) {
    if (limit < 0) throw std::invalid_argument("input size limit must be >= 0");
    g_max_input_size.store(limit);
}

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); i++) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

long long Partition::size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    t.reserve(static_cast<size_t>(p.first()));
    for (int j = 1; j <= p.first(); j++) {
        int rows = 0;
        for (int part : p.parts()) {
            if (part >= j) rows++;
            else break;
        }
        t.push_back(rows);
    }
    return Partition(std::move(t));
}

Partition add_rows(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> sum(static_cast<size_t>(len));
    for (int i = 0; i < len; i++) sum[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    return Partition(std::move(sum));
}

Partition diamond(const Partition& a, const Partition& b) {
    /* (λ'+μ')' is the multiset union of the rows; a merge is cheaper than
     * two transposes and an addition. */
    std::vector<int> merged;
    merged.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
               b.parts().end(), std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

Partition rectangle(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("rectangle requires positive side lengths");
    return Partition(std::vector<int>(static_cast<size_t>(b), a));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); i++)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Partition min_profile(const Partition& a, const Partition& b) {
    int len = std::min(a.length(), b.length());
    std::vector<int> m(static_cast<size_t>(len));
    for (int i = 0; i < len; i++)
        m[static_cast<size_t>(i)] = std::min(a.part(i), b.part(i));
    return Partition(std::move(m));
}

Partition parse_partition(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("bad partition '" + text + "': " + why);
    };

    skip_ws();
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    i++;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        i++;
    } else {
        for (;;) {
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected a nonnegative integer part");
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) fail("part out of range");
                i++;
            }
            parts.push_back(static_cast<int>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') { i++; continue; }
            if (i < text.size() && text[i] == ']') { i++; break; }
            fail("expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != text.size()) fail("trailing characters");

    Partition p(std::move(parts)); /* throws on non-monotone input */
    if (p.size() > max_input_size())
        throw std::invalid_argument("partition size " + std::to_string(p.size()) +
                                    " exceeds the input limit of " +
                                    std::to_string(max_input_size()));
    return p;
}

std::string render_partition(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); i++) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    s += ']';
    return s;
}

long long composition_size(const Composition& c) {
    long long s = 0;
    for (int v : c) s += v;
    return s;
}

Partition sorted_to_partition(const Composition& c) {
    std::vector<int> v(c);
    for (int x : v)
        if (x < 0) throw std::invalid_argument("composition entries must be nonnegative");
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

namespace {

void partition_rec(long long n, int max_length, int max_part,
                   std::vector<int>& prefix,
                   const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(prefix);
        return;
    }
    if (max_length == 0) return;
    int hi = static_cast<int>(std::min<long long>(n, max_part));
    /* Parts cannot be smaller than n/max_length on any completion. */
    for (int p = hi; p >= 1; p--) {
        if (static_cast<long long>(p) * max_length < n) break;
        prefix.push_back(p);
        partition_rec(n - p, max_length - 1, p, prefix, f);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(long long n, int max_length, int max_part,
                        const std::function<void(const std::vector<int>&)>& f) {
    if (n < 0) return;
    if (max_length < 0) max_length = (n > 0) ? static_cast<int>(n) : 0;
    if (max_part < 0) max_part = (n > 0) ? static_cast<int>(n) : 0;
    std::vector<int> prefix;
    partition_rec(n, max_length, max_part, prefix, f);
}

std::vector<Partition> partitions_of(long long n, int max_length, int max_part) {
    std::vector<Partition> out;
    for_each_partition(n, max_length, max_part,
                       [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

namespace {

void permutation_rec(int k, std::vector<int>& img, std::vector<bool>& used,
                     int inversions,
                     const std::function<bool(int, int)>& prefix_ok,
                     const std::function<void(const std::vector<int>&, int)>& emit) {
    int pos = static_cast<int>(img.size());
    if (pos == k) {
        emit(img, (inversions % 2 == 0) ? 1 : -1);
        return;
    }
    for (int v = 1; v <= k; v++) {
        if (used[static_cast<size_t>(v)]) continue;
        if (!prefix_ok(pos, v)) continue;
        int added = 0;
        for (int prev : img)
            if (prev > v) added++;
        used[static_cast<size_t>(v)] = true;
        img.push_back(v);
        permutation_rec(k, img, used, inversions + added, prefix_ok, emit);
        img.pop_back();
        used[static_cast<size_t>(v)] = false;
    }
}

} // namespace

void for_each_permutation(
    int k, const std::function<bool(int, int)>& prefix_ok,
    const std::function<void(const std::vector<int>&, int)>& emit) {
    std::vector<int> img;
    std::vector<bool> used(static_cast<size_t>(k) + 1, false);
    img.reserve(static_cast<size_t>(k));
    permutation_rec(k, img, used, 0, prefix_ok, emit);
}

} // namespace kc
