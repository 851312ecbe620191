#include "reduced.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "kronecker.hpp"
#include "tableaux.hpp"

namespace kc {

namespace {

Partition rect_or_empty(int width, int rows) {
    if (width < 1 || rows < 1) return Partition();
    return rectangle(width, rows);
}

Partition prepend_row(const Partition& p, long long width) {
    if (width < p.first())
        throw std::invalid_argument("padded first row shorter than the rest");
    std::vector<int> parts;
    parts.reserve(p.parts().size() + 1);
    parts.push_back(static_cast<int>(width));
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    return Partition(std::move(parts));
}

/* Partitions of n that fit inside the given profile. */
std::vector<Partition> partitions_inside(long long n, const Partition& box) {
    std::vector<Partition> out;
    for_each_partition(n, box.length(), box.first(),
                       [&](const std::vector<int>& parts) {
                           Partition p(parts);
                           if (contains(box, p)) out.push_back(std::move(p));
                       });
    return out;
}

std::vector<std::pair<Partition, Int>> weighted_blocks(
    const Partition& shape, const Partition& fixed1, const Partition& fixed2,
    long long free_size) {
    std::vector<std::pair<Partition, Int>> out;
    for (Partition& p : partitions_inside(free_size, shape)) {
        Int w = multi_lr({shape, {fixed1, fixed2, p}});
        if (w != 0) out.emplace_back(std::move(p), std::move(w));
    }
    return out;
}

} // namespace

long long min_pad_level(const Partition& alpha, const Partition& beta,
                        const Partition& gamma) {
    long long level = 0;
    for (const Partition* p : {&alpha, &beta, &gamma})
        level = std::max(level, p->size() + p->first());
    return level;
}

Triple pad(const Partition& alpha, const Partition& beta,
           const Partition& gamma, long long n) {
    long long least = min_pad_level(alpha, beta, gamma);
    if (n < least)
        throw std::invalid_argument("padding level " + std::to_string(n) +
                                    " too small; the least valid level is " +
                                    std::to_string(least));
    return {prepend_row(alpha, n - alpha.size()),
            prepend_row(beta, n - beta.size()),
            prepend_row(gamma, n - gamma.size())};
}

StabilizationResult reduced_by_stabilization(const Partition& alpha,
                                             const Partition& beta,
                                             const Partition& gamma, int window,
                                             long long ceiling) {
    if (window < 1)
        throw std::invalid_argument("stabilization window must be >= 1");
    long long start = std::max<long long>(min_pad_level(alpha, beta, gamma), 1);
    if (ceiling < 0) {
        ceiling = alpha.size() + beta.size() + gamma.size() +
                  std::max({alpha.first(), beta.first(), gamma.first()}) + 8;
        ceiling = std::max(ceiling, start + window);
    }

    std::deque<Int> recent;
    for (long long n = start; n <= ceiling; n++) {
        Triple t = pad(alpha, beta, gamma, n);
        Int value = kron_value(t.first, t.second, t.third);
        if (!recent.empty() && recent.back() != value) recent.clear();
        recent.push_back(value);
        if (static_cast<int>(recent.size()) >= window)
            return {value, n - window + 1, n, window};
    }
    std::ostringstream os;
    os << "no plateau of width " << window << " for (" << render_partition(alpha)
       << ", " << render_partition(beta) << ", " << render_partition(gamma)
       << ") at levels " << start << ".." << ceiling;
    throw no_plateau_error(os.str());
}

Int reduced_by_bdo(const Partition& alpha, const Partition& beta,
                   const Partition& gamma) {
    /* The identity needs |nu| <= |lambda| + |mu|; putting the largest
     * component in the nu role makes l smallest, and if even that is
     * negative the size triangle fails and the coefficient vanishes. */
    const Partition* in[3] = {&alpha, &beta, &gamma};
    int nu_slot = 0;
    for (int i = 1; i < 3; i++)
        if (in[i]->size() > in[nu_slot]->size()) nu_slot = i;
    const Partition& nu = *in[nu_slot];
    const Partition* rest[2];
    int w = 0;
    for (int i = 0; i < 3; i++)
        if (i != nu_slot) rest[w++] = in[i];
    const Partition& lambda = *rest[0];
    const Partition& mu = *rest[1];

    long long r = lambda.size(), s = mu.size();
    long long l = r + s - nu.size();
    if (l < 0) return 0;

    Partition alpha_box = min_profile(nu, lambda);
    Partition beta_box = min_profile(nu, mu);
    Partition gamma_box = min_profile(lambda, mu);

    Int total = 0;
    for (long long l2 = 0; 2 * l2 <= l; l2++) {
        long long l1 = l - 2 * l2;
        long long ra = r - l1 - l2, sb = s - l1 - l2;
        if (ra < 0 || sb < 0) continue;
        for (const Partition& a : partitions_inside(ra, alpha_box))
            for (const Partition& b : partitions_inside(sb, beta_box)) {
                auto pis = weighted_blocks(nu, a, b, l1);
                if (pis.empty()) continue;
                for (const Partition& g : partitions_inside(l2, gamma_box)) {
                    auto rhos = weighted_blocks(lambda, a, g, l1);
                    if (rhos.empty()) continue;
                    auto sigmas = weighted_blocks(mu, g, b, l1);
                    if (sigmas.empty()) continue;
                    for (const auto& [pi, cpi] : pis)
                        for (const auto& [rho, crho] : rhos) {
                            Int pair = cpi * crho;
                            for (const auto& [sigma, csig] : sigmas) {
                                Int k = kron_value(pi, rho, sigma);
                                if (k != 0) total += pair * csig * k;
                            }
                        }
                }
            }
    }
    return total;
}

Int reduced(const Partition& alpha, const Partition& beta,
            const Partition& gamma) {
    return reduced_by_bdo(alpha, beta, gamma);
}

Int reduced_checked(const Partition& alpha, const Partition& beta,
                    const Partition& gamma, int window) {
    Int exact = reduced_by_bdo(alpha, beta, gamma);
    StabilizationResult stab =
        reduced_by_stabilization(alpha, beta, gamma, window);
    if (exact != stab.value) {
        std::ostringstream os;
        os << "reduced-coefficient routes disagree on ("
           << render_partition(alpha) << ", " << render_partition(beta) << ", "
           << render_partition(gamma) << "): exact sum " << exact.get_str()
           << ", stabilization " << stab.value.get_str() << " (levels "
           << stab.first_level << ".." << stab.last_level << ")";
        throw disagreement_error(os.str());
    }
    return exact;
}

std::string reduced_canonical_key(const Partition& alpha, const Partition& beta,
                                  const Partition& gamma) {
    std::string r[3] = {render_partition(alpha), render_partition(beta),
                        render_partition(gamma)};
    std::sort(r, r + 3);
    return r[0] + "|" + r[1] + "|" + r[2];
}

Triple theorem1_triple(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("the three partitions must have equal size");
    int c = nu.first();
    return {add_rows(rect_or_empty(c, lambda.length()), lambda),
            add_rows(rect_or_empty(c, mu.length()), mu),
            diamond(rect_or_empty(c, lambda.length() + mu.length()), nu)};
}

Triple theorem1_general_triple(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int l, int m, int c) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("the three partitions must have equal size");
    if (l < 1 || m < 1 || c < 1)
        throw std::invalid_argument("l, m, c must be positive");
    if (l < lambda.length() || m < mu.length() || c < nu.first())
        throw std::invalid_argument(
            "need l >= len(lambda), m >= len(mu), c >= nu_1");
    return {add_rows(rectangle(c, l), lambda), add_rows(rectangle(c, m), mu),
            diamond(rectangle(c, l + m), nu)};
}

Triple shift_triple(const Partition& lambda, const Partition& mu,
                    const Partition& nu, int l, int m) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("the three partitions must have equal size");
    if (l < 1 || m < 1) throw std::invalid_argument("l, m must be positive");
    if (l < lambda.length() || m < mu.length())
        throw std::invalid_argument("need l >= len(lambda), m >= len(mu)");
    return {add_rows(rectangle(m, l), lambda), add_rows(rectangle(l, m), mu),
            add_rows(rectangle(1, l * m), nu)};
}

Triple walls_triple(const Partition& lambda, const Partition& mu,
                    const Partition& nu, int l, int m, int c) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("the three partitions must have equal size");
    if (l < 1 || m < 1 || c < 1)
        throw std::invalid_argument("l, m, c must be positive");
    if (l < lambda.length() || m < mu.length() || c < nu.first())
        throw std::invalid_argument(
            "need l >= len(lambda), m >= len(mu), c >= nu_1");
    int d = (m + 1) * c, e = (l + 1) * c;
    return {diamond(Partition(std::vector<int>{d}),
                    add_rows(rectangle(c, l), lambda)),
            diamond(Partition(std::vector<int>{e}),
                    add_rows(rectangle(c, m), mu)),
            diamond(rectangle(c, l + m + 1), nu)};
}

} // namespace kc
