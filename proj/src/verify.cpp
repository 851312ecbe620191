#include "verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "characters.hpp"
#include "contingency.hpp"
#include "kronecker.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "reduced.hpp"
#include "tableaux.hpp"

namespace kc {

std::optional<Profile> parse_profile(const std::string& name) {
    if (name == "quick") return Profile::quick;
    if (name == "default") return Profile::standard;
    if (name == "thorough") return Profile::thorough;
    return std::nullopt;
}

const char* profile_name(Profile p) {
    switch (p) {
    case Profile::quick: return "quick";
    case Profile::standard: return "default";
    case Profile::thorough: return "thorough";
    }
    return "?";
}

namespace {

constexpr int kFailureCap = 50;

template <class T>
T pick(Profile p, T quick, T standard, T thorough) {
    switch (p) {
    case Profile::quick: return quick;
    case Profile::standard: return standard;
    case Profile::thorough: return thorough;
    }
    return standard;
}

struct Recorder {
    SuiteReport& rep;

    void fail(const std::string& input, const std::string& expected,
              const std::string& got) {
        if (static_cast<int>(rep.failures.size()) < kFailureCap)
            rep.failures.push_back({input, expected, got});
        else
            rep.truncated = true;
    }

    void check_eq(const std::string& input, const Int& expected,
                  const Int& got) {
        rep.cases_run++;
        if (expected != got) fail(input, expected.get_str(), got.get_str());
    }

    void check(const std::string& input, bool ok, const std::string& expected,
               const std::string& got) {
        rep.cases_run++;
        if (!ok) fail(input, expected, got);
    }

    /* An identity check that already performed `comparisons` elementary
     * coefficient comparisons counts them all. */
    void bulk(const std::string& input, const IdentityCheck& c,
              const std::string& expected) {
        rep.cases_run += c.comparisons;
        if (!c.ok) fail(input, expected, c.detail);
    }
};

std::string triple_str(const Partition& a, const Partition& b,
                       const Partition& c) {
    return "(" + render_partition(a) + "," + render_partition(b) + "," +
           render_partition(c) + ")";
}

void for_each_triple(
    int nmax,
    const std::function<void(long long, const Partition&, const Partition&,
                             const Partition&)>& f) {
    for (long long n = 0; n <= nmax; n++) {
        std::vector<Partition> ps = partitions_of(n);
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                for (const Partition& c : ps) f(n, a, b, c);
    }
}

Partition scaled(const Partition& p, int m) {
    std::vector<int> v = p.parts();
    for (int& x : v) x *= m;
    return Partition(v);
}

KronOracle char_oracle() {
    return [](const Partition& a, const Partition& b, const Partition& c) {
        return kron_char_sum(a, b, c).value;
    };
}

/* -------- suites -------- */

void suite_theorem1(Recorder& rec, Profile prof) {
    int cap = pick(prof, 3, 5, 6);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 0.." +
                     std::to_string(cap) +
                     "; k by character sum vs gbar of the padded triple";
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        Int want = kron_char_sum(la, mu, nu).value;
        Triple t = theorem1_triple(la, mu, nu);
        Int got = reduced(t.first, t.second, t.third);
        rec.check_eq(triple_str(la, mu, nu), want, got);
    });
}

void suite_theorem1_general(Recorder& rec, Profile prof) {
    int cap = pick(prof, 2, 4, 5);
    static const int offs[7][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                   {1, 1, 1}, {2, 2, 2}, {2, 1, 0}};
    rec.rep.bounds = "all ordered triples of partitions of n, n = 1.." +
                     std::to_string(cap) +
                     "; (l,m,c) at the minima plus offsets "
                     "(0,0,0),(1,0,0),(0,1,0),(0,0,1),(1,1,1),(2,2,2),(2,1,0)";
    for_each_triple(cap, [&](long long n, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (n == 0) return;
        Int want = kron_char_sum(la, mu, nu).value;
        for (const auto& off : offs) {
            int l = la.length() + off[0];
            int m = mu.length() + off[1];
            int c = nu.first() + off[2];
            Triple t = theorem1_general_triple(la, mu, nu, l, m, c);
            Int got = reduced(t.first, t.second, t.third);
            rec.check_eq(triple_str(la, mu, nu) + " l=" + std::to_string(l) +
                             " m=" + std::to_string(m) +
                             " c=" + std::to_string(c),
                         want, got);
        }
    });
}

void suite_lemma_shift(Recorder& rec, Profile prof) {
    int cap = pick(prof, 3, 5, 6);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 1.." +
                     std::to_string(cap) +
                     "; (l,m) = (len(lambda),len(mu)) and both plus one; "
                     "shifted value via the dispatching kron";
    for_each_triple(cap, [&](long long n, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (n == 0) return;
        Int want = kron_char_sum(la, mu, nu).value;
        for (int d = 0; d <= 1; d++) {
            int l = la.length() + d;
            int m = mu.length() + d;
            Triple t = shift_triple(la, mu, nu, l, m);
            Int got = kron(t.first, t.second, t.third).value;
            rec.check_eq(triple_str(la, mu, nu) + " l=" + std::to_string(l) +
                             " m=" + std::to_string(m),
                         want, got);
        }
    });
}

void suite_lemma_walls(Recorder& rec, Profile prof) {
    int cap = pick(prof, 2, 4, 5);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 1.." +
                     std::to_string(cap) +
                     "; minimal parameters l = len(lambda), m = len(mu), "
                     "c = nu_1; walled value via the dispatching kron";
    for_each_triple(cap, [&](long long n, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (n == 0) return;
        Int want = kron_char_sum(la, mu, nu).value;
        Triple t = walls_triple(la, mu, nu, la.length(), mu.length(),
                                nu.first());
        Int got = kron(t.first, t.second, t.third).value;
        rec.check_eq(triple_str(la, mu, nu), want, got);
    });
}

void suite_stable_range(Recorder& rec, Profile prof) {
    int cap = pick(prof, 5, 8, 9);
    int hmax = pick(prof, 2, 4, 4);
    rec.rep.bounds =
        "ordered triples of partitions of n, n = 0.." + std::to_string(cap) +
        ", with lambda_1 >= len(mu)*nu_1 and mu_1 >= len(lambda)*nu_1; "
        "first rows grown by h = 1.." + std::to_string(hmax);
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (la.first() < mu.length() * nu.first()) return;
        if (mu.first() < la.length() * nu.first()) return;
        Int base = kron_value(la, mu, nu);
        for (int h = 1; h <= hmax; h++) {
            Partition row({h});
            Int got = kron_value(add_rows(la, row), add_rows(mu, row),
                                 add_rows(nu, row));
            rec.check_eq(triple_str(la, mu, nu) + " h=" + std::to_string(h),
                         base, got);
        }
    });
}

void suite_lemma25_bound(Recorder& rec, Profile prof) {
    int cap = pick(prof, 4, 6, 7);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 0.." +
                     std::to_string(cap) +
                     "; k' vs the count of 0/1 arrays with those marginals";
    for_each_triple(cap, [&](long long, const Partition& al,
                             const Partition& be, const Partition& ga) {
        Int kp = kron_prime(al, be, ga).value;
        Int cnt =
            count_arrays(make_marginals(al.parts(), be.parts(), ga.parts()));
        rec.check(triple_str(al, be, ga), kp <= cnt, "k' <= |C|",
                  "k'=" + kp.get_str() + " |C|=" + cnt.get_str());
    });
}

/* Marginals of the forced configuration plus a chosen subset of the free
 * region [2,a] x [2,b] x [1,c].  Rows past the first (and layers up to c)
 * are sorted; relabeling points inside those ranges is a bijection on the
 * arrays that fixes every set the conclusion speaks about. */
void suite_lemma26_structure(Recorder& rec, Profile prof) {
    struct Tuple {
        int a, b, c, h;
    };
    std::vector<Tuple> tuples = {{1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2, 2},
                                 {3, 2, 2, 1}};
    if (prof != Profile::quick) tuples.push_back({5, 4, 2, 4});
    rec.rep.bounds =
        "(a,b,c,h) in {(1,1,1,1),(2,2,1,1),(2,2,2,2),(3,2,2,1)" +
        std::string(prof != Profile::quick ? ",(5,4,2,4)" : "") +
        "}; free-region subsets: empty, full, first cell, last cell, "
        "every 2nd, every 3rd, first half";
    for (const Tuple& t : tuples) {
        std::vector<std::array<int, 3>> cells;
        for (int i = 2; i <= t.a; i++)
            for (int j = 2; j <= t.b; j++)
                for (int k = 1; k <= t.c; k++) cells.push_back({i, j, k});
        int F = static_cast<int>(cells.size());

        std::vector<std::pair<std::string, std::vector<bool>>> masks;
        auto add_mask = [&](const std::string& label,
                            const std::vector<bool>& m) {
            for (const auto& seen : masks)
                if (seen.second == m) return;
            masks.push_back({label, m});
        };
        std::vector<bool> m(static_cast<size_t>(F), false);
        add_mask("empty", m);
        if (F > 0) {
            std::fill(m.begin(), m.end(), true);
            add_mask("full", m);
            std::fill(m.begin(), m.end(), false);
            m[0] = true;
            add_mask("first-cell", m);
            std::fill(m.begin(), m.end(), false);
            m[static_cast<size_t>(F) - 1] = true;
            add_mask("last-cell", m);
            for (int i = 0; i < F; i++) m[static_cast<size_t>(i)] = i % 2 == 0;
            add_mask("every-2nd", m);
            for (int i = 0; i < F; i++) m[static_cast<size_t>(i)] = i % 3 == 0;
            add_mask("every-3rd", m);
            for (int i = 0; i < F; i++)
                m[static_cast<size_t>(i)] = i < (F + 1) / 2;
            add_mask("first-half", m);
        }

        for (const auto& [label, mask] : masks) {
            std::vector<int> av(static_cast<size_t>(t.a), t.c);
            std::vector<int> bv(static_cast<size_t>(t.b), t.c);
            std::vector<int> cv(static_cast<size_t>(t.c + t.h), 1);
            av[0] = t.b * t.c + t.h;
            bv[0] = t.a * t.c + t.h;
            for (int k = 0; k < t.c; k++)
                cv[static_cast<size_t>(k)] = t.a + t.b - 1;
            for (int i = 0; i < F; i++) {
                if (!mask[static_cast<size_t>(i)]) continue;
                av[static_cast<size_t>(cells[static_cast<size_t>(i)][0] - 1)]++;
                bv[static_cast<size_t>(cells[static_cast<size_t>(i)][1] - 1)]++;
                cv[static_cast<size_t>(cells[static_cast<size_t>(i)][2] - 1)]++;
            }
            std::sort(av.begin() + 1, av.end(), std::greater<int>());
            std::sort(bv.begin() + 1, bv.end(), std::greater<int>());
            std::sort(cv.begin(), cv.begin() + t.c, std::greater<int>());
            Partition A(av), B(bv), G(cv);

            std::string desc = "a=" + std::to_string(t.a) +
                               " b=" + std::to_string(t.b) +
                               " c=" + std::to_string(t.c) +
                               " h=" + std::to_string(t.h) + " S=" + label +
                               " " + triple_str(A, B, G);
            ForcedStructureReport r = check_forced_structure(A, B, G, t.a, t.b,
                                                             t.c, t.h);
            std::string why;
            for (const std::string& f : r.failures) {
                if (!why.empty()) why += "; ";
                why += f;
            }
            rec.check(desc, r.passed(), "forced structure holds",
                      why.empty() ? "ok" : why);
            if (t.a == 5 && label == "empty")
                rec.check_eq(desc + " |C|", Int(1), r.array_count);
        }
    }
}

void suite_murnaghan_lr(Recorder& rec, Profile prof) {
    int cap = pick(prof, 4, 6, 7);
    const int stab_cap = 4;
    rec.rep.bounds =
        "all (alpha,beta,gamma) with |alpha| = |beta|+|gamma| <= " +
        std::to_string(cap) +
        "; gbar vs the LR coefficient, plus the stabilizing sequence for "
        "|alpha| <= " + std::to_string(stab_cap);
    for (long long N = 0; N <= cap; N++) {
        std::vector<Partition> outers = partitions_of(N);
        for (long long k = 0; k <= N; k++) {
            std::vector<Partition> lefts = partitions_of(k);
            std::vector<Partition> rights = partitions_of(N - k);
            for (const Partition& al : outers)
                for (const Partition& be : lefts)
                    for (const Partition& ga : rights) {
                        Int want = lr_coefficient(al, be, ga);
                        rec.check_eq("gbar" + triple_str(al, be, ga), want,
                                     reduced(al, be, ga));
                        if (N <= stab_cap)
                            rec.check_eq(
                                "stab" + triple_str(al, be, ga), want,
                                reduced_by_stabilization(al, be, ga).value);
                    }
        }
    }
}

void suite_s3_symmetry(Recorder& rec, Profile prof) {
    int cap = pick(prof, 5, 7, 8);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 0.." +
                     std::to_string(cap) +
                     "; each against its sorted reordering";
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        std::array<Partition, 3> s = {la, mu, nu};
        std::sort(s.begin(), s.end());
        Int want = kron_char_sum(s[0], s[1], s[2]).value;
        rec.check_eq(triple_str(la, mu, nu), want,
                     kron_char_sum(la, mu, nu).value);
    });
}

void suite_transpose_pairs(Recorder& rec, Profile prof) {
    int cap = pick(prof, 5, 7, 8);
    rec.rep.bounds = "all ordered triples of partitions of n, n = 0.." +
                     std::to_string(cap) +
                     "; each pair of components transposed";
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        Int base = kron_char_sum(la, mu, nu).value;
        std::string d = triple_str(la, mu, nu);
        rec.check_eq(d + " mu',nu'", base,
                     kron_char_sum(la, transpose(mu), transpose(nu)).value);
        rec.check_eq(d + " la',nu'", base,
                     kron_char_sum(transpose(la), mu, transpose(nu)).value);
        rec.check_eq(d + " la',mu'", base,
                     kron_char_sum(transpose(la), transpose(mu), nu).value);
    });
}

void suite_dvir_vanishing(Recorder& rec, Profile prof) {
    int cap = pick(prof, 5, 7, 8);
    rec.rep.bounds = "ordered triples of partitions of n, n = 0.." +
                     std::to_string(cap) +
                     ", with len(lambda) > len(mu)*len(nu); character sum "
                     "must vanish";
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (la.length() <= mu.length() * nu.length()) return;
        rec.check_eq(triple_str(la, mu, nu), Int(0),
                     kron_char_sum(la, mu, nu).value);
    });
}

void suite_semigroup_spot(Recorder& rec, Profile prof) {
    int cap = pick(prof, 3, 4, 4);
    std::vector<int> mults = pick<std::vector<int>>(prof, {2, 3}, {2, 3},
                                                    {2, 3, 4});
    std::string ms;
    for (int m : mults) ms += (ms.empty() ? "" : ",") + std::to_string(m);
    rec.rep.bounds = "positive triples of partitions of n, n = 0.." +
                     std::to_string(cap) + "; multiples m in {" + ms +
                     "} stay positive";
    for_each_triple(cap, [&](long long, const Partition& la,
                             const Partition& mu, const Partition& nu) {
        if (kron_char_sum(la, mu, nu).value == 0) return;
        for (int m : mults) {
            Int v = kron_value(scaled(la, m), scaled(mu, m), scaled(nu, m));
            rec.check(triple_str(la, mu, nu) + " m=" + std::to_string(m),
                      v > 0, "positive", v.get_str());
        }
    });
}

void suite_schur_kron_eq4(Recorder& rec, Profile prof) {
    int D = pick(prof, 3, 4, 5);
    rec.rep.bounds = "lambda of size 1.." + std::to_string(D) +
                     "; s_lambda[xy] expanded over 2 x- and 2 y-variables";
    KronOracle oracle = char_oracle();
    for (long long n = 1; n <= D; n++)
        for (const Partition& la : partitions_of(n)) {
            IdentityCheck c = verify_schur_kron_identity(la, 2, 2, oracle);
            rec.check("lambda=" + render_partition(la) + " a=2 b=2", c.ok,
                      "expansion matches", c.ok ? "ok" : c.detail);
        }
}

void suite_triple_cauchy_eq7(Recorder& rec, Profile prof) {
    int Dmax = pick(prof, 3, 4, 5);
    rec.rep.bounds = "degree slices D = 1.." + std::to_string(Dmax) +
                     " of prod(1+x_i y_j z_k) over 2x2x2 variables; each "
                     "comparison is one case";
    KronOracle oracle = char_oracle();
    for (int D = 1; D <= Dmax; D++) {
        IdentityCheck c = verify_triple_cauchy(2, 2, 2, D, oracle);
        rec.bulk("D=" + std::to_string(D), c, "slice matches expansion");
    }
}

void suite_hm_product_identity(Recorder& rec, Profile prof) {
    int mmax = pick(prof, 3, 4, 5);
    rec.rep.bounds = "h_m[xy] for m = 1.." + std::to_string(mmax) +
                     ", a,b in {1,2}; each comparison is one case";
    for (int m = 1; m <= mmax; m++)
        for (int a = 1; a <= 2; a++)
            for (int b = 1; b <= 2; b++) {
                IdentityCheck c = verify_hm_product_identity(m, a, b);
                rec.bulk("m=" + std::to_string(m) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b),
                         c, "diagonal expansion matches");
            }
}

void suite_algorithm_agreement(Recorder& rec, Profile prof) {
    int cap3 = pick(prof, 4, 6, 6);
    rec.rep.bounds =
        "character sum vs multi-LR vs contingency on all ordered triples of "
        "partitions of n, n = 0.." + std::to_string(cap3) +
        (prof == Profile::standard
             ? "; character sum vs multi-LR on every 32nd triple at n = 7 "
               "and every 100th at n = 8"
             : "") +
        (prof == Profile::thorough
             ? "; character sum vs multi-LR on all triples at n = 7 and "
               "every 25th at n = 8"
             : "");
    for_each_triple(cap3, [&](long long, const Partition& la,
                              const Partition& mu, const Partition& nu) {
        Int want = kron_char_sum(la, mu, nu).value;
        std::string d = triple_str(la, mu, nu);
        rec.check_eq(d + " mlr", want, kron_multi_lr(la, mu, nu).value);
        rec.check_eq(d + " ct", want, kron_contingency(la, mu, nu).value);
    });
    if (prof == Profile::quick) return;

    auto sampled = [&](long long n, long long stride) {
        std::vector<Partition> ps = partitions_of(n);
        long long P = static_cast<long long>(ps.size());
        for (long long t = 0; t < P * P * P; t += stride) {
            const Partition& la = ps[static_cast<size_t>(t / (P * P))];
            const Partition& mu = ps[static_cast<size_t>(t / P % P)];
            const Partition& nu = ps[static_cast<size_t>(t % P)];
            rec.check_eq(triple_str(la, mu, nu) + " mlr",
                         kron_char_sum(la, mu, nu).value,
                         kron_multi_lr(la, mu, nu).value);
        }
    };
    if (prof == Profile::standard) {
        sampled(7, 32);
        sampled(8, 100);
    } else {
        sampled(7, 1);
        sampled(8, 25);
    }
}

void suite_saturation_witness(Recorder& rec, Profile) {
    rec.rep.bounds = "the fixed witness pair (2,2)^3 and (1,1)^3";
    Partition two({2, 2}), one({1, 1});
    rec.check_eq(triple_str(two, two, two), Int(1),
                 kron_char_sum(two, two, two).value);
    rec.check_eq(triple_str(one, one, one), Int(0),
                 kron_char_sum(one, one, one).value);
}

using SuiteFn = void (*)(Recorder&, Profile);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"theorem1", suite_theorem1},
        {"theorem1_general", suite_theorem1_general},
        {"lemma_shift", suite_lemma_shift},
        {"lemma_walls", suite_lemma_walls},
        {"stable_range", suite_stable_range},
        {"lemma25_bound", suite_lemma25_bound},
        {"lemma26_structure", suite_lemma26_structure},
        {"murnaghan_lr", suite_murnaghan_lr},
        {"s3_symmetry", suite_s3_symmetry},
        {"transpose_pairs", suite_transpose_pairs},
        {"dvir_vanishing", suite_dvir_vanishing},
        {"semigroup_spot", suite_semigroup_spot},
        {"schur_kron_eq4", suite_schur_kron_eq4},
        {"triple_cauchy_eq7", suite_triple_cauchy_eq7},
        {"hm_product_identity", suite_hm_product_identity},
        {"algorithm_agreement", suite_algorithm_agreement},
        {"saturation_witness", suite_saturation_witness},
    };
    return reg;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, Profile profile) {
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name) fn = f;
    if (!fn) {
        std::string msg = "unknown suite \"" + name + "\"; valid names:";
        for (const auto& n : suite_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    SuiteReport rep;
    rep.name = name;
    rep.profile = profile_name(profile);
    Recorder rec{rep};
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(rec, profile);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::vector<SuiteReport> run_all(Profile profile) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, profile));
    return out;
}

bool all_passed(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return !reports.empty();
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite: " << r.name << "\n";
    os << "status: " << (r.passed() ? "pass" : "fail") << "\n";
    os << "profile: " << r.profile << "\n";
    os << "bounds: " << r.bounds << "\n";
    os << "cases_run: " << r.cases_run << "\n";
    os << "wall_time_ms: " << r.wall_time_ms << "\n";
    if (!r.error.empty()) os << "error: " << r.error << "\n";
    for (const auto& f : r.failures)
        os << "failure: input=" << f.input << " expected=" << f.expected
           << " got=" << f.got << "\n";
    if (r.truncated)
        os << "note: failure list truncated at " << r.failures.size() << "\n";
    return os.str();
}

std::string reports_text(const std::vector<SuiteReport>& rs) {
    std::string out;
    for (const auto& r : rs) {
        out += report_text(r);
        out += "\n";
    }
    out += all_passed(rs) ? "overall: pass\n" : "overall: fail\n";
    return out;
}

static nlohmann::json report_obj(const SuiteReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            {{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    nlohmann::json j = {
        {"suite", r.name},         {"status", r.passed() ? "pass" : "fail"},
        {"profile", r.profile},    {"bounds", r.bounds},
        {"cases_run", r.cases_run}, {"wall_time_ms", r.wall_time_ms},
        {"failures", failures},    {"truncated", r.truncated},
    };
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string report_json(const SuiteReport& r) { return report_obj(r).dump(2); }

std::string reports_json(const std::vector<SuiteReport>& rs) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : rs) suites.push_back(report_obj(r));
    nlohmann::json j = {{"suites", suites}, {"all_passed", all_passed(rs)}};
    return j.dump(2);
}

void clear_all_caches() {
    clear_character_cache();
    clear_tableau_caches();
    clear_contingency_cache();
    clear_kron_cache();
}

} // namespace kc
