#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kroncoeff.h"

namespace {

/* Exit codes: 0 success, 1 usage/parse, 2 verification failure, 3 internal
 * inconsistency, 4 stabilization found no plateau. */
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitInternal = 3;
constexpr int kExitNoPlateau = 4;

struct Context {
    kc_context* c = kc_context_new();
    ~Context() { kc_context_free(c); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
    Context() = default;

    std::string error() const { return kc_last_error(c); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    kc_string_free(s);
    return out;
}

int exit_code_for(kc_status st) {
    switch (st) {
    case KC_OK: return kExitOk;
    case KC_ERR_PARSE: return kExitUsage;
    case KC_ERR_ARGUMENT: return kExitUsage;
    case KC_ERR_NO_PLATEAU: return kExitNoPlateau;
    case KC_ERR_DISAGREEMENT: return kExitInternal;
    case KC_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

/* Bails out of the subcommand by throwing; main converts to the code. */
struct CommandExit {
    int code;
};

[[noreturn]] void fail(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    throw CommandExit{code};
}

std::string canonical_or_fail(Context& ctx, const std::string& text) {
    char* out = nullptr;
    kc_status st = kc_partition_canonical(ctx.c, text.c_str(), &out);
    if (st != KC_OK) fail(exit_code_for(st), ctx.error());
    return take(out);
}

long long size_or_fail(Context& ctx, const std::string& canon) {
    long long n = 0;
    kc_status st = kc_partition_size(ctx.c, canon.c_str(), &n);
    if (st != KC_OK) fail(exit_code_for(st), ctx.error());
    return n;
}

/* CSV fields holding partitions contain commas; quote everything. */
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

/* Append-only persistent cache: one tab-separated record per line,
 * kind \t canonical_key \t value \t algorithm \t tool_version. */
class Cache {
public:
    explicit Cache(bool enabled) : enabled_(enabled) {
        if (!enabled_) return;
        const char* dir = std::getenv("KRONCOEFF_CACHE_DIR");
        std::string base;
        if (dir && *dir) {
            base = dir;
        } else if (const char* home = std::getenv("HOME"); home && *home) {
            base = std::string(home) + "/.cache/kroncoeff";
        } else {
            std::cerr << "cache: no directory (set KRONCOEFF_CACHE_DIR or "
                         "HOME); caching disabled\n";
            enabled_ = false;
            return;
        }
        std::error_code ec;
        std::filesystem::create_directories(base, ec);
        if (ec) {
            std::cerr << "cache: cannot create " << base << " ("
                      << ec.message() << "); caching disabled\n";
            enabled_ = false;
            return;
        }
        path_ = base + "/cache.txt";
        load();
    }

    struct Hit {
        std::string value, algorithm;
    };

    std::optional<Hit> find(const std::string& kind, const std::string& key) {
        if (!enabled_) return std::nullopt;
        auto it = map_.find(kind + "\t" + key);
        if (it == map_.end()) return std::nullopt;
        if (!digits_only(it->second.value)) {
            std::cerr << "cache: corrupt record for " << key
                      << "; recomputing\n";
            map_.erase(it);
            return std::nullopt;
        }
        return Hit{it->second.value, it->second.algorithm};
    }

    void put(const std::string& kind, const std::string& key,
             const std::string& value, const std::string& algorithm) {
        if (!enabled_) return;
        std::string mapkey = kind + "\t" + key;
        if (map_.count(mapkey)) return;
        map_[mapkey] = {value, algorithm};
        std::ofstream out(path_, std::ios::app);
        if (!out) return;
        out << kind << '\t' << key << '\t' << value << '\t' << algorithm
            << '\t' << kc_version() << '\n';
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;
        std::string line;
        long long lineno = 0;
        while (std::getline(in, line)) {
            lineno++;
            if (line.empty()) continue;
            std::vector<std::string> f;
            size_t pos = 0;
            while (true) {
                size_t tab = line.find('\t', pos);
                if (tab == std::string::npos) {
                    f.push_back(line.substr(pos));
                    break;
                }
                f.push_back(line.substr(pos, tab - pos));
                pos = tab + 1;
            }
            if (f.size() != 5 || f[0].empty() || f[1].empty()) {
                std::cerr << "cache: ignoring corrupt line " << lineno
                          << " in " << path_ << "\n";
                continue;
            }
            /* Later records win; the file is append-only. */
            map_[f[0] + "\t" + f[1]] = {f[2], f[3]};
        }
    }

    struct Entry {
        std::string value, algorithm;
    };
    bool enabled_;
    std::string path_;
    std::map<std::string, Entry> map_;
};

nlohmann::json result_json(const std::vector<std::string>& triple,
                           const std::string& value,
                           const std::string& algorithm, double ms) {
    return nlohmann::json{{"triple", triple},
                          {"value", value},
                          {"algorithm", algorithm},
                          {"wall_time_ms", ms}};
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(kExitUsage, "cannot write " + out_path);
    out << text;
}

/* ---- kron ---- */

int cmd_kron(Context& ctx, const std::vector<std::string>& parts,
             const std::string& algorithm, bool all_algorithms,
             const std::string& format, bool no_cache) {
    std::vector<std::string> canon;
    for (const auto& p : parts) canon.push_back(canonical_or_fail(ctx, p));
    long long s0 = size_or_fail(ctx, canon[0]);
    long long s1 = size_or_fail(ctx, canon[1]);
    long long s2 = size_or_fail(ctx, canon[2]);
    if (s0 != s1 || s1 != s2)
        std::cerr << "warning: the three partitions have sizes " << s0 << ", "
                  << s1 << ", " << s2 << "; the coefficient is 0\n";

    if (all_algorithms) {
        const char* algos[3] = {"char", "mlr", "ct"};
        std::vector<std::pair<std::string, std::string>> results;
        nlohmann::json jr = nlohmann::json::array();
        bool agree = true;
        for (const char* a : algos) {
            char* value = nullptr;
            char* used = nullptr;
            auto t0 = std::chrono::steady_clock::now();
            kc_status st = kc_kron(ctx.c, canon[0].c_str(), canon[1].c_str(),
                                   canon[2].c_str(), a, &value, &used);
            auto t1 = std::chrono::steady_clock::now();
            if (st != KC_OK) fail(exit_code_for(st), ctx.error());
            std::string v = take(value), u = take(used);
            if (!results.empty() && results.front().second != v) agree = false;
            results.push_back({u, v});
            jr.push_back(result_json(canon, v, u,
                                     std::chrono::duration<double, std::milli>(
                                         t1 - t0)
                                         .count()));
        }
        if (format == "json") {
            nlohmann::json j = {{"triple", canon},
                                {"results", jr},
                                {"verdict", agree ? "OK" : "MISMATCH"}};
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "lambda,mu,nu,value,algorithm,tool_version\n";
            for (const auto& [algo, v] : results)
                std::cout << csv_quote(canon[0]) << ',' << csv_quote(canon[1])
                          << ',' << csv_quote(canon[2]) << ',' << v << ','
                          << algo << ',' << kc_version() << "\n";
        } else {
            for (const auto& [algo, v] : results)
                std::cout << algo << ": " << v << "\n";
            std::cout << "verdict: " << (agree ? "OK" : "MISMATCH") << "\n";
        }
        if (!agree) {
            std::cerr << "error: the algorithms disagree\n";
            return kExitInternal;
        }
        return kExitOk;
    }

    bool automatic = algorithm.empty() || algorithm == "auto";
    Cache cache(!no_cache && automatic);
    char* keyraw = nullptr;
    kc_status kst = kc_kron_canonical_key(ctx.c, canon[0].c_str(),
                                          canon[1].c_str(), canon[2].c_str(),
                                          &keyraw);
    if (kst != KC_OK) fail(exit_code_for(kst), ctx.error());
    std::string key = take(keyraw);

    std::string value, used;
    double ms = 0.0;
    if (auto hit = cache.find("kron", key)) {
        value = hit->value;
        used = hit->algorithm;
    } else {
        char* v = nullptr;
        char* u = nullptr;
        auto t0 = std::chrono::steady_clock::now();
        kc_status st = kc_kron(ctx.c, canon[0].c_str(), canon[1].c_str(),
                               canon[2].c_str(),
                               automatic ? nullptr : algorithm.c_str(), &v,
                               &u);
        auto t1 = std::chrono::steady_clock::now();
        if (st != KC_OK) fail(exit_code_for(st), ctx.error());
        value = take(v);
        used = take(u);
        ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        cache.put("kron", key, value, used);
    }

    if (format == "json") {
        std::cout << result_json(canon, value, used, ms).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "lambda,mu,nu,value,algorithm,tool_version\n"
                  << csv_quote(canon[0]) << ',' << csv_quote(canon[1]) << ','
                  << csv_quote(canon[2]) << ',' << value << ',' << used << ','
                  << kc_version() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

/* ---- rkron ---- */

int cmd_rkron(Context& ctx, const std::vector<std::string>& parts,
              const std::string& method, int window, const std::string& format,
              bool no_cache) {
    std::vector<std::string> canon;
    for (const auto& p : parts) canon.push_back(canonical_or_fail(ctx, p));

    bool cacheable = method == "bdo";
    Cache cache(!no_cache && cacheable);
    char* keyraw = nullptr;
    kc_status kst = kc_reduced_canonical_key(ctx.c, canon[0].c_str(),
                                             canon[1].c_str(),
                                             canon[2].c_str(), &keyraw);
    if (kst != KC_OK) fail(exit_code_for(kst), ctx.error());
    std::string key = take(keyraw);

    std::string value;
    double ms = 0.0;
    if (auto hit = cache.find("reduced", key)) {
        value = hit->value;
    } else {
        char* v = nullptr;
        auto t0 = std::chrono::steady_clock::now();
        kc_status st = kc_reduced(ctx.c, canon[0].c_str(), canon[1].c_str(),
                                  canon[2].c_str(), method.c_str(), window,
                                  &v);
        auto t1 = std::chrono::steady_clock::now();
        if (st != KC_OK) fail(exit_code_for(st), ctx.error());
        value = take(v);
        ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        cache.put("reduced", key, value, method);
    }

    if (format == "json") {
        std::cout << result_json(canon, value, method, ms).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "alpha,beta,gamma,value,algorithm,tool_version\n"
                  << csv_quote(canon[0]) << ',' << csv_quote(canon[1]) << ','
                  << csv_quote(canon[2]) << ',' << value << ',' << method
                  << ',' << kc_version() << "\n";
    } else {
        std::cout << value << "\n";
        if (method == "both") std::cout << "verdict: OK\n";
    }
    return kExitOk;
}

/* ---- lr ---- */

int cmd_lr(Context& ctx, const std::vector<std::string>& parts,
           const std::string& format, bool no_cache) {
    std::vector<std::string> canon;
    for (const auto& p : parts) canon.push_back(canonical_or_fail(ctx, p));
    std::string outer = canon[0];
    std::vector<std::string> inners(canon.begin() + 1, canon.end());

    bool plain = inners.size() == 2;
    std::string algo = plain ? "lr" : "multi_lr";
    std::string key = outer;
    for (const auto& b : inners) key += "|" + b;

    Cache cache(!no_cache && plain);
    std::string value;
    double ms = 0.0;
    if (auto hit = cache.find("lr", key)) {
        value = hit->value;
    } else {
        char* v = nullptr;
        auto t0 = std::chrono::steady_clock::now();
        kc_status st;
        if (plain) {
            st = kc_lr(ctx.c, outer.c_str(), inners[0].c_str(),
                       inners[1].c_str(), &v);
        } else {
            std::vector<const char*> blocks;
            for (const auto& b : inners) blocks.push_back(b.c_str());
            st = kc_multi_lr(ctx.c, outer.c_str(), blocks.data(),
                             blocks.size(), &v);
        }
        auto t1 = std::chrono::steady_clock::now();
        if (st != KC_OK) fail(exit_code_for(st), ctx.error());
        value = take(v);
        ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (plain) cache.put("lr", key, value, algo);
    }

    if (format == "json") {
        nlohmann::json j = {{"outer", outer},
                            {"inners", inners},
                            {"value", value},
                            {"algorithm", algo},
                            {"wall_time_ms", ms}};
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::string joined;
        for (const auto& b : inners)
            joined += (joined.empty() ? "" : ";") + b;
        std::cout << "outer,inners,value,algorithm,tool_version\n"
                  << csv_quote(outer) << ',' << csv_quote(joined) << ','
                  << value << ',' << algo << ',' << kc_version() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

/* ---- verify ---- */

int cmd_verify(Context& ctx, const std::string& suite,
               const std::string& profile, const std::string& format) {
    char* report = nullptr;
    int passed = 0;
    kc_status st = kc_verify_suite(ctx.c, suite.c_str(), profile.c_str(),
                                   format.c_str(), &report, &passed);
    if (st != KC_OK) fail(exit_code_for(st), ctx.error());
    std::cout << take(report);
    return passed ? kExitOk : kExitVerifyFail;
}

/* ---- sweep ---- */

struct SweepRow {
    std::vector<std::string> triple;
    std::string key;
    std::string value;
    std::string algorithm;
    bool need_compute = false;
};

int cmd_sweep(Context& ctx, const std::string& kind, long long n,
              const std::string& format, const std::string& out_path,
              int jobs, bool no_cache) {
    if (n < 0) fail(kExitUsage, "--n must be nonnegative");
    if (jobs < 1) fail(kExitUsage, "--jobs must be positive");

    auto list_partitions = [&](long long m) {
        char* raw = nullptr;
        kc_status st = kc_partitions_of(ctx.c, m, &raw);
        if (st != KC_OK) fail(exit_code_for(st), ctx.error());
        std::vector<std::string> out;
        std::istringstream in(take(raw));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) out.push_back(line);
        return out;
    };

    std::vector<std::vector<std::string>> triples;
    if (kind == "kron") {
        std::vector<std::string> ps = list_partitions(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) triples.push_back({a, b, c});
    } else {
        /* Reduced coefficients accept unequal sizes: all components of
         * size at most n. */
        std::vector<std::string> ps;
        for (long long m = 0; m <= n; m++)
            for (const auto& p : list_partitions(m)) ps.push_back(p);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) triples.push_back({a, b, c});
    }

    Cache cache(!no_cache);
    std::string cache_kind = kind == "kron" ? "kron" : "reduced";
    std::vector<SweepRow> rows;
    for (auto& t : triples) {
        SweepRow row;
        row.triple = t;
        char* keyraw = nullptr;
        kc_status st =
            kind == "kron"
                ? kc_kron_canonical_key(ctx.c, t[0].c_str(), t[1].c_str(),
                                        t[2].c_str(), &keyraw)
                : kc_reduced_canonical_key(ctx.c, t[0].c_str(), t[1].c_str(),
                                           t[2].c_str(), &keyraw);
        if (st != KC_OK) fail(exit_code_for(st), ctx.error());
        row.key = take(keyraw);
        if (auto hit = cache.find(cache_kind, row.key)) {
            row.value = hit->value;
            row.algorithm = hit->algorithm;
        } else {
            row.need_compute = true;
        }
        rows.push_back(std::move(row));
    }

    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  if (a.key != b.key) return a.key < b.key;
                  return a.triple < b.triple;
              });

    /* Workers pull rows off a shared counter; every worker gets its own
     * context.  The computation memos underneath are shared and locked. */
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string fail_msg;
    std::mutex fail_mutex;
    auto worker = [&] {
        Context wctx;
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            SweepRow& row = rows[i];
            if (!row.need_compute) continue;
            char* v = nullptr;
            char* u = nullptr;
            kc_status st;
            if (kind == "kron")
                st = kc_kron(wctx.c, row.triple[0].c_str(),
                             row.triple[1].c_str(), row.triple[2].c_str(),
                             nullptr, &v, &u);
            else
                st = kc_reduced(wctx.c, row.triple[0].c_str(),
                                row.triple[1].c_str(), row.triple[2].c_str(),
                                "bdo", 0, &v);
            if (st != KC_OK) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                failed = true;
                if (fail_msg.empty()) fail_msg = wctx.error();
                return;
            }
            row.value = take(v);
            row.algorithm = kind == "kron" ? take(u) : "bdo";
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; i++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed) fail(kExitInternal, fail_msg);

    for (const SweepRow& row : rows)
        if (row.need_compute)
            cache.put(cache_kind, row.key, row.value, row.algorithm);

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const SweepRow& row : rows)
            arr.push_back(nlohmann::json{{"triple", row.triple},
                                         {"value", row.value},
                                         {"algorithm", row.algorithm}});
        os << arr.dump(2) << "\n";
    } else {
        os << (kind == "kron" ? "lambda,mu,nu" : "alpha,beta,gamma")
           << ",value,algorithm,tool_version\n";
        for (const SweepRow& row : rows)
            os << csv_quote(row.triple[0]) << ',' << csv_quote(row.triple[1])
               << ',' << csv_quote(row.triple[2]) << ',' << row.value << ','
               << row.algorithm << ',' << kc_version() << "\n";
    }
    write_out(os.str(), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kronecker, reduced Kronecker, and "
                 "Littlewood-Richardson coefficients"};
    app.require_subcommand(1);

    std::vector<std::string> parts;
    std::string algorithm, method = "bdo", format = "text";
    std::string suite, profile = "default", sweep_kind, out_path;
    bool all_algorithms = false, no_cache = false;
    int window = 0, jobs = 1;
    long long sweep_n = -1;

    /* Partition arguments look like CLI11's own [a,b,c] array syntax, so
     * array expansion must stay off on every option that receives them. */
    CLI::App* kron = app.add_subcommand("kron", "Kronecker coefficient");
    kron->add_option("partitions", parts, "lambda mu nu, e.g. [2,2]")
        ->expected(3)
        ->allow_extra_args(false);
    kron->add_option("--algorithm", algorithm, "char, mlr, ct, or auto");
    kron->add_flag("--all-algorithms", all_algorithms,
                   "run every algorithm and compare");
    kron->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    kron->add_flag("--no-cache", no_cache, "skip the on-disk cache");

    CLI::App* rkron =
        app.add_subcommand("rkron", "reduced Kronecker coefficient");
    rkron->add_option("partitions", parts, "alpha beta gamma")
        ->expected(3)
        ->allow_extra_args(false);
    rkron->add_option("--method", method, "bdo, stab, or both")
        ->check(CLI::IsMember({"bdo", "stab", "both"}));
    rkron->add_option("--window", window,
                      "stabilization plateau length (default 3)");
    rkron->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    rkron->add_flag("--no-cache", no_cache, "skip the on-disk cache");

    /* lr takes a variable number of partitions; CLI11's open-ended vector
     * options force array expansion back on, so the partitions are taken
     * from the unparsed remainder instead. */
    CLI::App* lr = app.add_subcommand(
        "lr", "Littlewood-Richardson coefficient: outer inner1 inner2 "
              "[inner3 ...] (more inner partitions give the iterated "
              "multi-LR count)");
    lr->allow_extras();
    lr->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    lr->add_flag("--no-cache", no_cache, "skip the on-disk cache");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--profile", profile, "quick, default, or thorough")
        ->check(CLI::IsMember({"quick", "default", "thorough"}));
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate coefficients");
    sweep->add_option("kind", sweep_kind, "kron or rkron")
        ->required()
        ->check(CLI::IsMember({"kron", "rkron"}));
    sweep->add_option("--n", sweep_n, "size bound")->required();
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", out_path, "write the table to a file");
    sweep->add_option("--jobs", jobs, "parallel workers (default 1)");
    sweep->add_flag("--no-cache", no_cache, "skip the on-disk cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Context ctx;
    try {
        if (kron->parsed())
            return cmd_kron(ctx, parts, algorithm, all_algorithms, format,
                            no_cache);
        if (rkron->parsed())
            return cmd_rkron(ctx, parts, method, window, format, no_cache);
        if (lr->parsed()) {
            std::vector<std::string> lr_parts = lr->remaining();
            if (lr_parts.size() < 3)
                fail(kExitUsage,
                     "lr needs an outer partition and at least two inner "
                     "partitions");
            return cmd_lr(ctx, lr_parts, format, no_cache);
        }
        if (verify->parsed()) {
            if (format != "text" && format != "json")
                fail(kExitUsage, "verify supports text or json");
            return cmd_verify(ctx, suite, profile, format);
        }
        if (sweep->parsed()) {
            if (format == "text") format = "csv";
            return cmd_sweep(ctx, sweep_kind, sweep_n, format, out_path, jobs,
                             no_cache);
        }
    } catch (const CommandExit& e) {
        return e.code;
    }
    return kExitUsage;
}
