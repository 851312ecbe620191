#include "contingency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kc {

namespace {

std::mutex g_count_mutex;
std::unordered_map<std::string, Int> g_count_cache;

std::string vec_key(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

/* Number of 0/1 matrices with row sums r and column sums cols.  Rows are
 * consumed in order; the state is the multiplicity vector of the remaining
 * column budgets, so columns with equal budgets are never distinguished. */
Int binary_matrix_count(const std::vector<int>& rows, std::vector<int> cols) {
    int maxcol = 0;
    for (int c : cols) maxcol = std::max(maxcol, c);
    std::vector<int> mult(static_cast<size_t>(maxcol) + 1, 0);
    for (int c : cols) mult[static_cast<size_t>(c)]++;

    std::map<std::pair<size_t, std::vector<int>>, Int> memo;

    std::function<Int(size_t, std::vector<int>&)> rec =
        [&](size_t row, std::vector<int>& m) -> Int {
        if (row == rows.size()) {
            for (size_t v = 1; v < m.size(); v++)
                if (m[v] > 0) return 0;
            return 1;
        }
        auto key = std::make_pair(row, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        int need = rows[row];
        Int total = 0;
        /* Distribute the row's picks over the budget classes v >= 1. */
        std::function<void(size_t, int, Int)> distribute =
            [&](size_t v, int left, Int ways) {
            if (left == 0) {
                total += ways * rec(row + 1, m);
                return;
            }
            if (v >= m.size()) return;
            int avail = m[v];
            for (int k = 0; k <= std::min(avail, left); k++) {
                Int w = ways * binomial(avail, k);
                m[v] -= k;
                m[v - 1] += k;
                distribute(v + 1, left - k, w);
                m[v] += k;
                m[v - 1] -= k;
            }
        };
        if (need == 0) total = rec(row + 1, m);
        else distribute(1, need, 1);

        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(0, mult);
}

std::vector<int> sorted_desc_nonzero(const std::vector<int>& v) {
    std::vector<int> s;
    for (int x : v)
        if (x != 0) s.push_back(x);
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

/* Enumerate the row-sum vectors of one z-layer: sum(r) == total with
 * 0 <= r_i <= min(budget_i, cap). */
void layer_vectors(const std::vector<int>& budget, int cap, int total,
                   const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> r(budget.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == budget.size()) {
            if (left == 0) f(r);
            return;
        }
        int slack = 0; /* what the remaining rows could still absorb */
        for (size_t j = i + 1; j < budget.size(); j++)
            slack += std::min(budget[j], cap);
        int hi = std::min({budget[i], cap, left});
        int lo = std::max(0, left - slack);
        for (int v = lo; v <= hi; v++) {
            r[i] = v;
            rec(i + 1, left - v);
        }
        r[i] = 0;
    };
    rec(0, total);
}

Int count_rec(std::vector<int> xb, std::vector<int> yb,
              const std::vector<int>& z, size_t layer) {
    xb = sorted_desc_nonzero(xb);
    yb = sorted_desc_nonzero(yb);
    if (layer == z.size()) {
        return (xb.empty() && yb.empty()) ? 1 : 0;
    }

    std::string key = vec_key(xb) + "|" + vec_key(yb) + "|" +
                      std::to_string(z.size() - layer) + "|" +
                      vec_key(std::vector<int>(z.begin() + static_cast<long>(layer), z.end()));
    {
        std::lock_guard<std::mutex> lock(g_count_mutex);
        auto it = g_count_cache.find(key);
        if (it != g_count_cache.end()) return it->second;
    }

    int total = z[layer];
    Int sum = 0;
    layer_vectors(xb, static_cast<int>(yb.size()), total, [&](const std::vector<int>& r) {
        layer_vectors(yb, static_cast<int>(xb.size()), total, [&](const std::vector<int>& c) {
            Int w = binary_matrix_count(r, c);
            if (w == 0) return;
            std::vector<int> nx(xb), ny(yb);
            for (size_t i = 0; i < nx.size(); i++) nx[i] -= r[i];
            for (size_t j = 0; j < ny.size(); j++) ny[j] -= c[j];
            Int tail = count_rec(std::move(nx), std::move(ny), z, layer + 1);
            if (tail != 0) sum += w * tail;
        });
    });

    std::lock_guard<std::mutex> lock(g_count_mutex);
    g_count_cache.emplace(std::move(key), sum);
    return sum;
}

} // namespace

Marginals3D make_marginals(std::vector<int> x, std::vector<int> y,
                           std::vector<int> z) {
    Marginals3D m{std::move(x), std::move(y), std::move(z), true};
    long long sx = 0, sy = 0, sz = 0;
    for (int v : m.x) { if (v < 0) m.valid = false; sx += v; }
    for (int v : m.y) { if (v < 0) m.valid = false; sy += v; }
    for (int v : m.z) { if (v < 0) m.valid = false; sz += v; }
    if (sx != sy || sy != sz) m.valid = false;
    return m;
}

Int count_arrays(const Marginals3D& m) {
    if (!m.valid) return 0;
    /* Process z-layers largest first; sorting is a bijection on arrays. */
    std::vector<int> z = sorted_desc_nonzero(m.z);
    return count_rec(m.x, m.y, z, 0);
}

std::vector<ContingencyArray> enumerate_arrays(const Marginals3D& m) {
    std::vector<ContingencyArray> out;
    if (!m.valid) return out;

    int a = static_cast<int>(m.x.size());
    int b = static_cast<int>(m.y.size());
    int c = static_cast<int>(m.z.size());
    std::vector<int> xb(m.x), yb(m.y), zb(m.z);

    /* Capacity left in each slice as the cell cursor sweeps in x-major
     * lexicographic order. */
    std::vector<int> xcap(m.x.size()), ycap(m.y.size()), zcap(m.z.size());
    for (int i = 0; i < a; i++) xcap[static_cast<size_t>(i)] = b * c;
    for (int j = 0; j < b; j++) ycap[static_cast<size_t>(j)] = a * c;
    for (int k = 0; k < c; k++) zcap[static_cast<size_t>(k)] = a * b;

    ContingencyArray points;
    std::function<void(int)> rec = [&](int cell) {
        if (cell == a * b * c) {
            bool done = true;
            for (int v : xb) if (v != 0) done = false;
            for (int v : yb) if (v != 0) done = false;
            for (int v : zb) if (v != 0) done = false;
            if (done) out.push_back(points);
            return;
        }
        int i = cell / (b * c), rest = cell % (b * c);
        int j = rest / c, k = rest % c;
        size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j),
               sk = static_cast<size_t>(k);

        xcap[si]--; ycap[sj]--; zcap[sk]--;
        /* Skip the cell if the budgets can still be met. */
        if (xb[si] <= xcap[si] && yb[sj] <= ycap[sj] && zb[sk] <= zcap[sk])
            rec(cell + 1);
        /* Take the cell. */
        if (xb[si] > 0 && yb[sj] > 0 && zb[sk] > 0) {
            xb[si]--; yb[sj]--; zb[sk]--;
            points.push_back({i + 1, j + 1, k + 1});
            rec(cell + 1);
            points.pop_back();
            xb[si]++; yb[sj]++; zb[sk]++;
        }
        xcap[si]++; ycap[sj]++; zcap[sk]++;
    };
    if (a > 0 && b > 0 && c > 0) rec(0);
    else if (composition_size(m.x) == 0) out.push_back({});
    return out;
}

std::string dump_array(const ContingencyArray& q) {
    ContingencyArray s(q);
    std::sort(s.begin(), s.end());
    std::ostringstream os;
    for (const auto& p : s) os << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    return os.str();
}

ForcedStructureReport check_forced_structure(const Partition& alpha,
                                             const Partition& beta,
                                             const Partition& gamma, int a,
                                             int b, int c, int h) {
    auto hyp = [&](bool ok, const std::string& name) {
        if (!ok)
            throw std::invalid_argument("forced-structure hypothesis violated: " + name);
    };
    hyp(a >= alpha.length(), "a >= len(alpha)");
    hyp(b >= beta.length(), "b >= len(beta)");
    hyp(c + h >= gamma.length(), "c+h >= len(gamma)");
    long long tail = 0;
    for (int i = c; i < gamma.length(); i++) tail += gamma.part(i);
    hyp(tail <= h, "sum_{i>c} gamma_i <= h");
    hyp(alpha.first() >= b * c + h, "alpha_1 >= b*c+h");
    hyp(beta.first() >= a * c + h, "beta_1 >= a*c+h");

    /* Enumerate over the box spanned by the marginal lengths. */
    std::vector<int> x(alpha.parts()), y(beta.parts()), z(gamma.parts());
    Marginals3D m = make_marginals(x, y, z);

    ForcedStructureReport rep;
    rep.forced_contained = true;
    rep.tail_exact = true;
    rep.derived_hold = true;

    std::vector<ContingencyArray> arrays = enumerate_arrays(m);
    rep.array_count = static_cast<long>(arrays.size());

    auto note = [&](const std::string& s) { rep.failures.push_back(s); };

    for (size_t qi = 0; qi < arrays.size(); qi++) {
        std::vector<std::array<int, 3>> sorted(arrays[qi]);
        std::sort(sorted.begin(), sorted.end());
        auto has = [&](int i, int j, int k) {
            return std::binary_search(sorted.begin(), sorted.end(),
                                      std::array<int, 3>{i, j, k});
        };
        for (int j = 1; j <= b; j++)
            for (int k = 1; k <= c; k++)
                if (!has(1, j, k)) {
                    rep.forced_contained = false;
                    note("array " + std::to_string(qi) + " misses (1," +
                         std::to_string(j) + "," + std::to_string(k) + ")");
                }
        for (int i = 1; i <= a; i++)
            for (int k = 1; k <= c; k++)
                if (!has(i, 1, k)) {
                    rep.forced_contained = false;
                    note("array " + std::to_string(qi) + " misses (" +
                         std::to_string(i) + ",1," + std::to_string(k) + ")");
                }
        for (int k = 1; k <= c + h; k++)
            if (!has(1, 1, k)) {
                rep.forced_contained = false;
                note("array " + std::to_string(qi) + " misses (1,1," +
                     std::to_string(k) + ")");
            }
        for (const auto& p : sorted)
            if (p[2] > c && !(p[0] == 1 && p[1] == 1)) {
                rep.tail_exact = false;
                note("array " + std::to_string(qi) + " has off-line tail point (" +
                     std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                     std::to_string(p[2]) + ")");
            }
    }

    if (!arrays.empty()) {
        auto derived = [&](bool ok, const std::string& s) {
            if (!ok) {
                rep.derived_hold = false;
                note("derived equality failed: " + s);
            }
        };
        if (c >= 1) {
            derived(a == alpha.length(), "a = len(alpha)");
            derived(b == beta.length(), "b = len(beta)");
        }
        for (int i = c + 1; i <= c + h; i++)
            derived(gamma.part(i - 1) == 1,
                    "gamma_" + std::to_string(i) + " = 1");
        derived(alpha.first() == b * c + h, "alpha_1 = b*c+h");
        derived(beta.first() == a * c + h, "beta_1 = a*c+h");
        derived(alpha.part(1) <= b * c, "alpha_2 <= b*c");
        derived(beta.part(1) <= a * c, "beta_2 <= a*c");
    }
    return rep;
}

void clear_contingency_cache() {
    std::lock_guard<std::mutex> lock(g_count_mutex);
    g_count_cache.clear();
}

} // namespace kc
