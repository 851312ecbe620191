#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "contingency.hpp"

namespace kc {

void MonomialPoly::add_term(const std::vector<int>& expo, const Int& coeff) {
    if (static_cast<int>(expo.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong arity");
    if (coeff == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MonomialPoly::coefficient(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Int(0) : it->second;
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
    MonomialPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& o) const {
    MonomialPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
    MonomialPoly r(nvars_);
    std::vector<int> e(static_cast<size_t>(nvars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; i++)
                e[static_cast<size_t>(i)] =
                    ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            r.add_term(e, ca * cb);
        }
    return r;
}

MonomialPoly MonomialPoly::scaled(const Int& c) const {
    MonomialPoly r(nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

std::string MonomialPoly::to_string() const {
    std::vector<const std::pair<const std::vector<int>, Int>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    if (ts.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); i++) {
        if (i) os << " + ";
        os << ts[i]->second.get_str();
        for (size_t v = 0; v < ts[i]->first.size(); v++)
            if (ts[i]->first[v] > 0) {
                os << "*x" << (v + 1);
                if (ts[i]->first[v] > 1) os << "^" << ts[i]->first[v];
            }
    }
    return os.str();
}

MonomialPoly schur_poly(const Partition& lambda, int nvars) {
    MonomialPoly out(nvars);
    if (lambda.length() > nvars) return out;
    if (lambda.empty()) {
        out.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
        return out;
    }

    /* Fill rows left to right, top to bottom: entry >= left, > above. */
    int rows = lambda.length();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int i = 0; i < rows; i++)
        t[static_cast<size_t>(i)].assign(static_cast<size_t>(lambda.part(i)), 0);
    std::vector<int> type(static_cast<size_t>(nvars), 0);

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == rows) {
            out.add_term(type, 1);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lambda.part(i)) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        if (i > 0 && j < lambda.part(i - 1))
            lo = std::max(lo, t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        for (int v = lo; v <= nvars; v++) {
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            type[static_cast<size_t>(v - 1)]++;
            rec(ni, nj);
            type[static_cast<size_t>(v - 1)]--;
        }
    };
    rec(0, 0);
    return out;
}

MonomialPoly complete_homogeneous(int m, int nvars) {
    MonomialPoly out(nvars);
    if (m < 0) return out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            e[static_cast<size_t>(var)] = left;
            out.add_term(e, 1);
            e[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int v = 0; v <= left; v++) {
            e[static_cast<size_t>(var)] = v;
            rec(var + 1, left - v);
        }
        e[static_cast<size_t>(var)] = 0;
    };
    if (nvars == 0) {
        if (m == 0) out.add_term({}, 1);
        return out;
    }
    rec(0, m);
    return out;
}

MonomialPoly schur_poly_jt(const Partition& lambda, int nvars) {
    int l = lambda.length();
    if (l == 0) return complete_homogeneous(0, nvars);
    MonomialPoly sum(nvars);
    for_each_permutation(
        l,
        [&](int pos, int val) { return lambda.part(pos) - (pos + 1) + val >= 0; },
        [&](const std::vector<int>& img, int sign) {
            MonomialPoly prod = complete_homogeneous(
                lambda.part(0) - 1 + img[0], nvars);
            for (int i = 1; i < l && !prod.is_zero(); i++)
                prod = prod * complete_homogeneous(
                                  lambda.part(i) - (i + 1) + img[static_cast<size_t>(i)],
                                  nvars);
            sum = (sign > 0) ? sum + prod : sum - prod;
        });
    return sum;
}

MonomialPoly product_substitution(const Partition& lambda, int a, int b) {
    MonomialPoly folded(a + b);
    MonomialPoly full = schur_poly(lambda, a * b);
    std::vector<int> e(static_cast<size_t>(a + b));
    for (const auto& [expo, coeff] : full.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < a; i++)
            for (int j = 0; j < b; j++) {
                int deg = expo[static_cast<size_t>(i * b + j)];
                e[static_cast<size_t>(i)] += deg;
                e[static_cast<size_t>(a + j)] += deg;
            }
        folded.add_term(e, coeff);
    }
    return folded;
}

MonomialPoly tensor(const MonomialPoly& p, const MonomialPoly& q) {
    MonomialPoly r(p.nvars() + q.nvars());
    std::vector<int> e;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            e = ep;
            e.insert(e.end(), eq.begin(), eq.end());
            r.add_term(e, cp * cq);
        }
    return r;
}

IdentityCheck verify_schur_kron_identity(const Partition& lambda, int a, int b,
                                         const KronOracle& kron) {
    MonomialPoly lhs = product_substitution(lambda, a, b);
    MonomialPoly rhs(a + b);
    long long n = lambda.size();
    for (const Partition& mu : partitions_of(n, a)) {
        MonomialPoly smu = schur_poly(mu, a);
        for (const Partition& nu : partitions_of(n, b)) {
            Int k = kron(lambda, mu, nu);
            if (k == 0) continue;
            rhs = rhs + tensor(smu, schur_poly(nu, b)).scaled(k);
        }
    }
    IdentityCheck res{true, 0, ""};
    res.comparisons = static_cast<long long>(lhs.terms().size()) +
                      static_cast<long long>(rhs.terms().size());
    if (!(lhs == rhs)) {
        res.ok = false;
        MonomialPoly diff = lhs - rhs;
        res.detail = "s[" + render_partition(lambda) + "] on " +
                     std::to_string(a) + "*" + std::to_string(b) +
                     " variables: difference " + diff.to_string();
    }
    return res;
}

IdentityCheck verify_hm_product_identity(int m, int a, int b) {
    MonomialPoly lhs = product_substitution(Partition(std::vector<int>{m}), a, b);
    MonomialPoly rhs(a + b);
    for (const Partition& lam : partitions_of(m, std::min(a, b)))
        rhs = rhs + tensor(schur_poly(lam, a), schur_poly(lam, b));
    IdentityCheck res{true, 0, ""};
    res.comparisons = static_cast<long long>(lhs.terms().size()) +
                      static_cast<long long>(rhs.terms().size());
    if (!(lhs == rhs)) {
        res.ok = false;
        res.detail = "h_" + std::to_string(m) + " on " + std::to_string(a) +
                     "*" + std::to_string(b) + " variables: difference " +
                     (lhs - rhs).to_string();
    }
    return res;
}

IdentityCheck verify_triple_cauchy(int a, int b, int c, int D,
                                   const KronOracle& kron) {
    IdentityCheck res{true, 0, ""};
    int nv = a + b + c;

    /* Expand prod (1+x_i y_j z_k), dropping anything past x-degree D; every
     * factor raises the degree of all three groups by one, so that suffices. */
    MonomialPoly prod(nv);
    prod.add_term(std::vector<int>(static_cast<size_t>(nv), 0), 1);
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++)
            for (int k = 0; k < c; k++) {
                MonomialPoly next(nv);
                for (const auto& [e, coeff] : prod.terms()) {
                    next.add_term(e, coeff);
                    int xdeg = 0;
                    for (int v = 0; v < a; v++) xdeg += e[static_cast<size_t>(v)];
                    if (xdeg >= D) continue;
                    std::vector<int> e2(e);
                    e2[static_cast<size_t>(i)]++;
                    e2[static_cast<size_t>(a + j)]++;
                    e2[static_cast<size_t>(a + b + k)]++;
                    next.add_term(e2, coeff);
                }
                prod = std::move(next);
            }

    MonomialPoly slice(nv);
    for (const auto& [e, coeff] : prod.terms()) {
        int xdeg = 0;
        for (int v = 0; v < a; v++) xdeg += e[static_cast<size_t>(v)];
        if (xdeg == D) slice.add_term(e, coeff);
    }

    /* Schur form of the same slice. */
    MonomialPoly rhs(nv);
    for (const Partition& lam : partitions_of(D, a))
        for (const Partition& mu : partitions_of(D, b))
            for (const Partition& nuT : partitions_of(D, c)) {
                Partition nu = transpose(nuT);
                Int k = kron(lam, mu, nu);
                if (k == 0) continue;
                rhs = rhs + tensor(tensor(schur_poly(lam, a), schur_poly(mu, b)),
                                   schur_poly(nuT, c))
                                .scaled(k);
            }
    res.comparisons += static_cast<long long>(slice.terms().size()) +
                       static_cast<long long>(rhs.terms().size());
    if (!(slice == rhs)) {
        res.ok = false;
        res.detail = "degree-" + std::to_string(D) +
                     " slice does not match the Schur expansion: difference " +
                     (slice - rhs).to_string();
        return res;
    }

    /* Monomial coefficients are binary contingency counts. */
    for (const auto& [e, coeff] : slice.terms()) {
        std::vector<int> x(e.begin(), e.begin() + a);
        std::vector<int> y(e.begin() + a, e.begin() + a + b);
        std::vector<int> z(e.begin() + a + b, e.end());
        Int want = count_arrays(make_marginals(x, y, z));
        res.comparisons++;
        if (want != coeff) {
            res.ok = false;
            res.detail = "monomial coefficient " + coeff.get_str() +
                         " != contingency count " + want.get_str();
            return res;
        }
    }

    /* And conversely: every positive contingency count appears. */
    std::vector<std::vector<int>> xs, ys, zs;
    std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)>
        comps = [&](int left, int slots, int, std::vector<int>& cur,
                    std::vector<std::vector<int>>& outv) {
            if (slots == 0) {
                if (left == 0) outv.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; v++) {
                cur.push_back(v);
                comps(left - v, slots - 1, 0, cur, outv);
                cur.pop_back();
            }
        };
    std::vector<int> cur;
    comps(D, a, 0, cur, xs);
    comps(D, b, 0, cur, ys);
    comps(D, c, 0, cur, zs);
    for (const auto& x : xs)
        for (const auto& y : ys)
            for (const auto& z : zs) {
                Int want = count_arrays(make_marginals(x, y, z));
                if (want == 0) continue;
                std::vector<int> e;
                e.insert(e.end(), x.begin(), x.end());
                e.insert(e.end(), y.begin(), y.end());
                e.insert(e.end(), z.begin(), z.end());
                res.comparisons++;
                if (slice.coefficient(e) != want) {
                    res.ok = false;
                    res.detail = "missing monomial for a positive contingency count";
                    return res;
                }
            }
    return res;
}

} // namespace kc
