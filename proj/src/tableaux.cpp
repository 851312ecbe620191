#include "tableaux.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kc {

namespace {

std::mutex g_lr_mutex;
std::unordered_map<std::string, Int> g_lr_cache;
std::mutex g_mlr_mutex;
std::unordered_map<std::string, Int> g_mlr_cache;

struct Cell {
    int right; /* index of the cell one column to the right, or -1 */
    int above; /* index of the cell one row up in the same column, or -1 */
};

/* Cells in reading order: rows top to bottom, right to left within a row.
 * With this order both constrained neighbours are already filled when a
 * cell is reached. */
std::vector<Cell> reading_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> cells;
    std::vector<int> row_start(static_cast<size_t>(outer.length()) + 1, 0);
    for (int i = 0; i < outer.length(); i++) {
        row_start[static_cast<size_t>(i)] = static_cast<int>(cells.size());
        for (int col = outer.part(i) - 1; col >= inner.part(i); col--) {
            Cell c{-1, -1};
            if (col + 1 < outer.part(i))
                c.right = static_cast<int>(cells.size()) - 1;
            if (i > 0 && col >= inner.part(i - 1) && col < outer.part(i - 1))
                c.above = row_start[static_cast<size_t>(i - 1)] +
                          (outer.part(i - 1) - 1 - col);
            cells.push_back(c);
        }
    }
    return cells;
}

/* Shared backtracking counter.  target[v-1] bounds the multiplicity of v;
 * band_start[v-1] marks values that open a content block, which are exempt
 * from the ballot comparison against v-1.  With a single block this is
 * exactly the LR tableau count.  When sink is non-null every complete
 * filling is reported (values in reading order). */
Int fill_count(const std::vector<Cell>& cells, const std::vector<int>& target,
               const std::vector<bool>& band_start,
               const std::function<void(const std::vector<int>&)>* sink) {
    int nvals = static_cast<int>(target.size());
    std::vector<int> count(static_cast<size_t>(nvals), 0);
    std::vector<int> value(cells.size(), 0);
    Int total = 0;

    std::function<void(size_t)> rec = [&](size_t at) {
        if (at == cells.size()) {
            total += 1;
            if (sink) (*sink)(value);
            return;
        }
        const Cell& cell = cells[at];
        int lo = 1, hi = nvals;
        if (cell.above >= 0) lo = value[static_cast<size_t>(cell.above)] + 1;
        if (cell.right >= 0) hi = value[static_cast<size_t>(cell.right)];
        for (int v = lo; v <= hi; v++) {
            size_t vi = static_cast<size_t>(v - 1);
            if (count[vi] >= target[vi]) continue;
            if (!band_start[vi] && count[vi] >= count[vi - 1]) continue;
            count[vi]++;
            value[at] = v;
            rec(at + 1);
            count[vi]--;
        }
    };
    rec(0);
    return total;
}

Int lr_count_uncached(const Partition& outer, const Partition& inner,
                      const Partition& nu) {
    std::vector<Cell> cells = reading_cells(outer, inner);
    std::vector<int> target(nu.parts().begin(), nu.parts().end());
    std::vector<bool> band_start(target.size(), false);
    if (!band_start.empty()) band_start[0] = true;
    return fill_count(cells, target, band_start, nullptr);
}

std::string blocks_key(const Partition& shape,
                       const std::vector<Partition>& blocks) {
    std::string key = render_partition(shape);
    for (const Partition& b : blocks) {
        key += '|';
        key += render_partition(b);
    }
    return key;
}

/* Sorted nonempty blocks, largest first; the coefficient is invariant under
 * reordering so this is safe and collapses the memo space. */
std::vector<Partition> normalize_blocks(const std::vector<Partition>& blocks) {
    std::vector<Partition> out;
    for (const Partition& b : blocks)
        if (!b.empty()) out.push_back(b);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return b.parts() < a.parts();
    });
    return out;
}

Int multi_lr_rec(const Partition& shape, const std::vector<Partition>& blocks);

Int multi_lr_pruned(const Partition& shape, const std::vector<Partition>& blocks) {
    if (blocks.empty()) return shape.empty() ? 1 : 0;
    if (blocks.size() == 1) return blocks[0] == shape ? 1 : 0;

    long long total = 0, first_rows = 0, lengths = 0;
    for (const Partition& b : blocks) {
        if (!contains(shape, b)) return 0;
        total += b.size();
        first_rows += b.first();
        lengths += b.length();
    }
    if (total != shape.size()) return 0;
    /* Row 1 of the shape takes at most b.first() cells of each band, and the
     * first column at most b.length(); both must cover the shape. */
    if (first_rows < shape.first()) return 0;
    if (lengths < shape.length()) return 0;

    return multi_lr_rec(shape, blocks);
}

Int multi_lr_rec(const Partition& shape, const std::vector<Partition>& blocks) {
    std::string key = blocks_key(shape, blocks);
    {
        std::lock_guard<std::mutex> lock(g_mlr_mutex);
        auto it = g_mlr_cache.find(key);
        if (it != g_mlr_cache.end()) return it->second;
    }

    /* Peel the largest block: sum c^shape_{b0,beta} * mlr(beta, rest). */
    const Partition& b0 = blocks[0];
    std::vector<Partition> rest(blocks.begin() + 1, blocks.end());
    long long rem = shape.size() - b0.size();

    Int sum = 0;
    for_each_partition(rem, shape.length(), shape.first(),
                       [&](const std::vector<int>& parts) {
        Partition beta(parts);
        if (!contains(shape, beta)) return;
        /* The tail prunes cheaply on containment; do it before the LR count. */
        Int tail = multi_lr_pruned(beta, rest);
        if (tail == 0) return;
        Int c = (rem <= b0.size()) ? lr_coefficient(shape, b0, beta)
                                   : lr_coefficient(shape, beta, b0);
        if (c != 0) sum += c * tail;
    });

    std::lock_guard<std::mutex> lock(g_mlr_mutex);
    g_mlr_cache.emplace(std::move(key), sum);
    return sum;
}

std::vector<int> concat_blocks(const std::vector<Partition>& blocks) {
    std::vector<int> target;
    for (const Partition& b : blocks)
        target.insert(target.end(), b.parts().begin(), b.parts().end());
    return target;
}

std::vector<bool> band_starts(const std::vector<Partition>& blocks) {
    std::vector<bool> starts;
    for (const Partition& b : blocks)
        for (int i = 0; i < b.length(); i++)
            starts.push_back(i == 0);
    return starts;
}

} // namespace

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    return word;
}

bool is_ballot(const std::vector<int>& word) {
    int maxval = 0;
    for (int v : word) maxval = std::max(maxval, v);
    std::vector<int> count(static_cast<size_t>(maxval) + 2, 0);
    for (int v : word) {
        if (v < 1) return false;
        count[static_cast<size_t>(v)]++;
        if (v > 1 && count[static_cast<size_t>(v)] > count[static_cast<size_t>(v - 1)])
            return false;
    }
    return true;
}

bool is_ssyt(const Tableau& t) {
    const Partition& outer = t.shape.outer;
    const Partition& inner = t.shape.inner;
    if (!contains(outer, inner)) return false;
    if (static_cast<int>(t.rows.size()) != outer.length()) return false;
    for (int i = 0; i < outer.length(); i++) {
        const auto& row = t.rows[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != outer.part(i) - inner.part(i))
            return false;
        for (size_t j = 0; j < row.size(); j++) {
            if (row[j] < 1) return false;
            if (j > 0 && row[j] < row[j - 1]) return false;
        }
        if (i > 0) {
            const auto& up = t.rows[static_cast<size_t>(i - 1)];
            for (int col = inner.part(i); col < outer.part(i); col++) {
                if (col < inner.part(i - 1) || col >= outer.part(i - 1)) continue;
                int here = row[static_cast<size_t>(col - inner.part(i))];
                int above = up[static_cast<size_t>(col - inner.part(i - 1))];
                if (above >= here) return false;
            }
        }
    }
    return true;
}

Composition type_vector(const Tableau& t) {
    int maxval = 0;
    for (const auto& row : t.rows)
        for (int v : row) maxval = std::max(maxval, v);
    Composition type(static_cast<size_t>(maxval), 0);
    for (const auto& row : t.rows)
        for (int v : row) type[static_cast<size_t>(v - 1)]++;
    return type;
}

Int lr_coefficient(const Partition& outer, const Partition& inner,
                   const Partition& nu) {
    if (outer.size() != inner.size() + nu.size()) return 0;
    if (!contains(outer, inner)) return 0;
    if (nu.empty()) return 1; /* empty skew */

    std::string key = "L|" + render_partition(outer) + "|" +
                      render_partition(inner) + "|" + render_partition(nu);
    {
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end()) return it->second;
    }
    Int value = lr_count_uncached(outer, inner, nu);
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    g_lr_cache.emplace(std::move(key), value);
    return value;
}

Int multi_lr(const MultiLRSpec& spec) {
    return multi_lr_pruned(spec.shape, normalize_blocks(spec.blocks));
}

bool is_multi_lr_tableau(const MultiLRSpec& spec, const Tableau& t) {
    if (!(t.shape.outer == spec.shape) || !t.shape.inner.empty()) return false;
    if (!is_ssyt(t)) return false;

    std::vector<int> target = concat_blocks(spec.blocks);
    Composition type = type_vector(t);
    if (type.size() > target.size()) return false;
    for (size_t v = 0; v < target.size(); v++) {
        int have = (v < type.size()) ? type[v] : 0;
        if (have != target[v]) return false;
    }

    std::vector<int> word = reading_word(t);
    int offset = 0;
    for (const Partition& b : spec.blocks) {
        int lo = offset + 1, hi = offset + b.length();
        std::vector<int> band;
        for (int v : word)
            if (v >= lo && v <= hi) band.push_back(v - offset);
        if (!is_ballot(band)) return false;
        offset = hi;
    }
    return true;
}

Int count_multi_lr_direct(const MultiLRSpec& spec) {
    std::vector<int> target = concat_blocks(spec.blocks);
    if (composition_size(target) != spec.shape.size()) return 0;
    std::vector<Cell> cells = reading_cells(spec.shape, Partition());
    return fill_count(cells, target, band_starts(spec.blocks), nullptr);
}

std::vector<Tableau> enumerate_multi_lr_tableaux(const MultiLRSpec& spec) {
    std::vector<Tableau> out;
    std::vector<int> target = concat_blocks(spec.blocks);
    if (composition_size(target) != spec.shape.size()) return out;
    std::vector<Cell> cells = reading_cells(spec.shape, Partition());

    std::function<void(const std::vector<int>&)> sink =
        [&](const std::vector<int>& values) {
            Tableau t;
            t.shape = SkewShape{spec.shape, Partition()};
            size_t at = 0;
            for (int i = 0; i < spec.shape.length(); i++) {
                std::vector<int> row(static_cast<size_t>(spec.shape.part(i)));
                for (int col = spec.shape.part(i) - 1; col >= 0; col--)
                    row[static_cast<size_t>(col)] = values[at++];
                t.rows.push_back(std::move(row));
            }
            out.push_back(std::move(t));
        };
    fill_count(cells, target, band_starts(spec.blocks), &sink);
    return out;
}

void clear_tableau_caches() {
    {
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        g_lr_cache.clear();
    }
    std::lock_guard<std::mutex> lock(g_mlr_mutex);
    g_mlr_cache.clear();
}

} // namespace kc
