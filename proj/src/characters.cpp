#include "characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kc {

namespace {

std::mutex g_char_mutex;
std::unordered_map<std::string, Int> g_char_cache;

std::string char_key(const Partition& lambda, const Partition& mu) {
    return render_partition(lambda) + "|" + render_partition(mu);
}

/* Partition from a strictly decreasing beta-set (first-column hook lengths).
 * Entry i (0-based, sorted descending) becomes part b_i - (len-1-i). */
Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; i++)
        parts[static_cast<size_t>(i)] = beta[static_cast<size_t>(i)] - (len - 1 - i);
    return Partition(std::move(parts));
}

/* μ is consumed from index idx onward; parts are canonical (descending), so
 * the expensive large strips are removed first and the all-ones tail is
 * collapsed by the hook length formula. */
Int character_rec(const Partition& lambda, const Partition& mu, int idx);

Int character_memo(const Partition& lambda, const Partition& mu_suffix) {
    std::string key = char_key(lambda, mu_suffix);
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_cache.find(key);
        if (it != g_char_cache.end()) return it->second;
    }
    Int value = character_rec(lambda, mu_suffix, 0);
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_cache.emplace(std::move(key), value);
    return value;
}

Int character_rec(const Partition& lambda, const Partition& mu, int idx) {
    if (idx >= mu.length()) return lambda.empty() ? Int(1) : Int(0);
    if (mu.part(idx) == 1) return dimension(lambda); /* all-ones tail */

    int t = mu.part(idx);
    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; i++)
        beta[static_cast<size_t>(i)] = lambda.part(i) + (len - 1 - i);

    Int sum = 0;
    for (int i = 0; i < len; i++) {
        int b = beta[static_cast<size_t>(i)];
        if (b < t) break; /* beta is descending */
        int target = b - t;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < len; j++) {
            if (j == i) continue;
            int c = beta[static_cast<size_t>(j)];
            if (c == target) { occupied = true; break; }
            if (c > target && c < b) height++;
        }
        if (occupied) continue;

        std::vector<int> nb(beta);
        nb[static_cast<size_t>(i)] = target;
        Partition rest = partition_from_beta(std::move(nb));
        std::vector<int> tail(mu.parts().begin() + idx + 1, mu.parts().end());
        Int sub = character_memo(rest, Partition(std::move(tail)));
        if (height % 2 == 0) sum += sub;
        else sum -= sub;
    }
    return sum;
}

} // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character requires |lambda| == |mu|");
    return character_memo(lambda, mu);
}

Int dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Partition t = transpose(lambda);
    Int denom = 1;
    for (int i = 0; i < lambda.length(); i++)
        for (int j = 0; j < lambda.part(i); j++)
            denom *= lambda.part(i) - (j + 1) + t.part(j) - (i + 1) + 1;
    return divide_exact(factorial(lambda.size()), denom, "hook length formula");
}

Int z_order(const Partition& mu) {
    Int z = 1;
    int i = 0;
    while (i < mu.length()) {
        int part = mu.part(i);
        int mult = 0;
        while (i < mu.length() && mu.part(i) == part) { mult++; i++; }
        for (int k = 0; k < mult; k++) z *= part;
        z *= factorial(mult);
    }
    return z;
}

Int class_size(const Partition& mu) {
    return divide_exact(factorial(mu.size()), z_order(mu), "class size");
}

int sign_of_class(const Partition& mu) {
    return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

void debug_inject_character(const Partition& lambda, const Partition& mu,
                            const Int& value) {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_cache[char_key(lambda, mu)] = value;
}

void clear_character_cache() {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_cache.clear();
}

} // namespace kc
