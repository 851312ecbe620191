/* End-to-end exercise of the command-line tool, driven through a shell.
 * argv[1] is the path to the binary under test; every run points the
 * on-disk cache at a scratch directory so nothing leaks between tests or
 * into the developer's real cache. */

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "test_util.hpp"

using namespace kctest;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_scratch;

std::string sh_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'')
            out += "'\\''";
        else
            out += ch;
    }
    out += "'";
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

/* Runs the tool with the cache pointed at cache_dir ("" = inherit nothing:
 * both KRONCOEFF_CACHE_DIR and HOME are scrubbed). */
Run run_with_cache(const std::string& cache_dir, const std::string& args) {
    fs::path out_file = g_scratch / "stdout.txt";
    fs::path err_file = g_scratch / "stderr.txt";
    std::string env = cache_dir.empty()
                          ? "env -u KRONCOEFF_CACHE_DIR -u HOME "
                          : "env KRONCOEFF_CACHE_DIR=" + sh_quote(cache_dir) +
                                " ";
    std::string cmd = env + sh_quote(g_cli) + " " + args + " > " +
                      sh_quote(out_file.string()) + " 2> " +
                      sh_quote(err_file.string());
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_file);
    r.err = read_file(err_file);
    return r;
}

Run run(const std::string& args) {
    return run_with_cache((g_scratch / "cache").string(), args);
}

/* Split one CSV line, honoring the tool's quote-everything convention. */
std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); i++) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

void test_kron_basic() {
    Run r = run("kron '[2,2]' '[2,2]' '[2,2]'");
    check_eq(r.code, 0, "kron exit code");
    check_eq(r.out, std::string("1\n"), "kron square value");
    check(r.err.empty(), "no warnings on a clean run");

    r = run("kron '[1,1]' '[1,1]' '[1,1]'");
    check_eq(r.out, std::string("0\n"), "kron vanishing value");

    r = run("kron '[]' '[]' '[]'");
    check_eq(r.out, std::string("1\n"), "kron of the empty triple");

    r = run("kron --algorithm ct '[1]' '[1]' '[1]'");
    check_eq(r.code, 0, "explicit algorithm accepted");
    check_eq(r.out, std::string("1\n"), "explicit algorithm value");

    r = run("kron '[2]' '[1]' '[1]'");
    check_eq(r.code, 0, "size mismatch is not an error");
    check_eq(r.out, std::string("0\n"), "size mismatch value");
    check(r.err.find("sizes 2, 1, 1") != std::string::npos,
          "size mismatch warns");

    r = run("kron '[2,' '[1]' '[1]'");
    check_eq(r.code, 1, "parse error exit code");
    check(r.err.find("bad partition") != std::string::npos,
          "parse error message");

    r = run("kron --algorithm frobenius '[1]' '[1]' '[1]'");
    check_eq(r.code, 1, "unknown algorithm exit code");

    r = run("kron '[1]' '[1]'");
    check_eq(r.code, 1, "missing argument exit code");
}

void test_kron_all_algorithms() {
    Run r = run("kron --all-algorithms '[2,1]' '[2,1]' '[2,1]'");
    check_eq(r.code, 0, "all-algorithms exit code");
    check(r.out.find("char_sum: 1") != std::string::npos, "char line");
    check(r.out.find("multi_lr_sum: 1") != std::string::npos, "mlr line");
    check(r.out.find("contingency_sum: 1") != std::string::npos, "ct line");
    check(r.out.find("verdict: OK") != std::string::npos, "verdict line");

    r = run("kron --all-algorithms --format json '[2,2]' '[2,2]' '[2,2]'");
    nlohmann::json j = nlohmann::json::parse(r.out);
    check_eq(j.at("verdict").get<std::string>(), std::string("OK"),
             "json verdict");
    check_eq(j.at("results").size(), static_cast<size_t>(3),
             "json lists all three routes");
}

void test_formats() {
    Run r = run("kron --format json '[2,1]' '[2,1]' '[2,1]'");
    nlohmann::json j = nlohmann::json::parse(r.out);
    check_eq(j.at("value").get<std::string>(), std::string("1"), "json value");
    check_eq(j.at("algorithm").get<std::string>(), std::string("char_sum"),
             "json algorithm");
    check(j.at("triple").is_array() && j.at("triple").size() == 3,
          "json triple");
    check(j.contains("wall_time_ms"), "json timing field");

    r = run("kron --format csv '[2,1]' '[2,1]' '[2,1]'");
    std::vector<std::string> rows = lines_of(r.out);
    check_eq(rows.size(), static_cast<size_t>(2), "csv header plus one row");
    check_eq(rows[0], std::string("lambda,mu,nu,value,algorithm,tool_version"),
             "csv header");
    std::vector<std::string> fields = csv_fields(rows[1]);
    check_eq(fields.size(), static_cast<size_t>(6), "csv field count");
    check_eq(fields[0], std::string("[2,1]"), "csv lambda field");
    check_eq(fields[3], std::string("1"), "csv value field");
}

void test_rkron() {
    Run r = run("rkron '[]' '[]' '[]'");
    check_eq(r.code, 0, "rkron exit code");
    check_eq(r.out, std::string("1\n"), "empty reduced triple");

    r = run("rkron '[2,1]' '[1,1]' '[1]'");
    check_eq(r.out, std::string("1\n"), "mixed-size reduced value");

    r = run("rkron --method stab '[2,1]' '[1,1]' '[1]'");
    check_eq(r.out, std::string("1\n"), "stabilization route");

    r = run("rkron --method both '[2,1]' '[1,1]' '[1]'");
    check_eq(r.code, 0, "cross-checked route exit code");
    check(r.out.find("1\n") == 0, "cross-checked value");
    check(r.out.find("verdict: OK") != std::string::npos,
          "cross-checked verdict");

    r = run("rkron --method newton '[1]' '[1]' '[1]'");
    check_eq(r.code, 1, "unknown method rejected at the parser");

    /* The worked instance: the image triple of the square carries its
     * coefficient. */
    r = run("rkron '[4,4]' '[4,4]' '[2,2,2,2,2,2]'");
    check_eq(r.out, std::string("1\n"), "image triple of the square");
}

void test_lr() {
    Run r = run("lr '[2,1]' '[1,1]' '[1]'");
    check_eq(r.code, 0, "lr exit code");
    check_eq(r.out, std::string("1\n"), "lr value");

    r = run("lr '[3,1]' '[3,1]' '[]'");
    check_eq(r.out, std::string("1\n"), "empty inner partition");

    r = run("lr '[7,6,5]' '[4,3,1]' '[3,3]' '[3,1]'");
    check_eq(r.code, 0, "multi-lr exit code");
    check_eq(r.out, std::string("6\n"), "worked multi-lr instance");

    r = run("lr '[2,1]' '[1,1]'");
    check_eq(r.code, 1, "too few partitions rejected");
    check(r.err.find("at least two inner") != std::string::npos,
          "count message");

    r = run("lr --format csv '[7,6,5]' '[4,3,1]' '[3,3]' '[3,1]'");
    std::vector<std::string> rows = lines_of(r.out);
    check_eq(rows[0], std::string("outer,inners,value,algorithm,tool_version"),
             "lr csv header");
    std::vector<std::string> fields = csv_fields(rows[1]);
    check_eq(fields[1], std::string("[4,3,1];[3,3];[3,1]"),
             "inners joined with semicolons");
    check_eq(fields[2], std::string("6"), "lr csv value");
    check_eq(fields[3], std::string("multi_lr"), "lr csv algorithm");
}

void test_verify() {
    Run r = run("verify saturation_witness --profile quick");
    check_eq(r.code, 0, "passing suite exit code");
    check(r.out.find("status: pass") != std::string::npos, "report status");

    r = run("verify no_such_suite --profile quick");
    check_eq(r.code, 1, "unknown suite exit code");
    check(r.err.find("valid names") != std::string::npos,
          "rejection lists the registry");

    r = run("verify theorem1 --profile nonsense");
    check_eq(r.code, 1, "unknown profile rejected at the parser");

    r = run("verify theorem1 --profile quick --format json");
    check_eq(r.code, 0, "json verify exit code");
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j.at("suites").is_array(), "json verify shape");
    check(j.at("all_passed").get<bool>(), "json verify verdict");
}

void test_cache() {
    fs::path dir = g_scratch / "cache_behavior";
    fs::create_directories(dir);
    std::string cd = dir.string();

    Run first = run_with_cache(cd, "kron '[2,2]' '[2,2]' '[2,2]'");
    check_eq(first.code, 0, "cold run exit code");
    fs::path cache_file = dir / "cache.txt";
    check(fs::exists(cache_file), "cache file created");

    Run second = run_with_cache(cd, "kron '[2,2]' '[2,2]' '[2,2]'");
    check_eq(second.out, first.out, "warm run repeats the text output");
    check(second.err.empty(), "warm run is quiet");

    /* A reordered triple shares the canonical record. */
    Run base = run_with_cache(cd, "kron '[3,1]' '[2,2]' '[2,1,1]'");
    std::string before = read_file(cache_file);
    Run reordered = run_with_cache(cd, "kron '[2,2]' '[3,1]' '[2,1,1]'");
    check_eq(read_file(cache_file), before, "warm hit appends nothing");
    check_eq(reordered.out, base.out, "reordered triple reads the record");

    /* CSV output is byte-stable across cold and warm runs. */
    fs::path dir2 = g_scratch / "cache_csv";
    fs::create_directories(dir2);
    Run cold_csv = run_with_cache(dir2.string(),
                                  "kron --format csv '[3,1]' '[3,1]' '[2,2]'");
    Run warm_csv = run_with_cache(dir2.string(),
                                  "kron --format csv '[3,1]' '[3,1]' '[2,2]'");
    check_eq(warm_csv.out, cold_csv.out, "csv identical warm vs cold");

    /* Corrupt the stored value: the tool warns, recomputes, heals. */
    std::string contents = read_file(cache_file);
    size_t tab_value = contents.find("\t1\t");
    check(tab_value != std::string::npos, "cache record holds the value");
    std::string broken = contents;
    broken.replace(tab_value, 3, "\txyz\t");
    write_file(cache_file, broken);
    Run healed = run_with_cache(cd, "kron '[2,2]' '[2,2]' '[2,2]'");
    check_eq(healed.out, std::string("1\n"), "corrupt record recomputed");
    check(healed.err.find("cache: corrupt record") != std::string::npos,
          "corruption warned");
    Run after = run_with_cache(cd, "kron '[2,2]' '[2,2]' '[2,2]'");
    check(after.err.empty(), "later record wins; no further warnings");

    /* A malformed line is skipped with a location. */
    write_file(cache_file, read_file(cache_file) + "half\tbaked\n");
    Run ragged = run_with_cache(cd, "kron '[2,2]' '[2,2]' '[2,2]'");
    check(ragged.err.find("cache: ignoring corrupt line") != std::string::npos,
          "short line warned");
    check_eq(ragged.out, std::string("1\n"), "short line is harmless");

    /* --no-cache leaves no trace. */
    fs::path dir3 = g_scratch / "cache_none";
    fs::create_directories(dir3);
    Run untouched = run_with_cache(dir3.string(),
                                   "kron --no-cache '[2,2]' '[2,2]' '[2,2]'");
    check_eq(untouched.code, 0, "no-cache run succeeds");
    check(!fs::exists(dir3 / "cache.txt"), "no cache file written");

    /* No cache directory at all: warn once, still compute. */
    Run bare = run_with_cache("", "kron '[2,1]' '[2,1]' '[2,1]'");
    check_eq(bare.code, 0, "cacheless run succeeds");
    check_eq(bare.out, std::string("1\n"), "cacheless value");
    check(bare.err.find("caching disabled") != std::string::npos,
          "missing directory warned");
}

void test_sweep() {
    Run r = run("sweep kron --n 0");
    check_eq(r.code, 0, "sweep exit code");
    std::vector<std::string> rows = lines_of(r.out);
    check_eq(rows.size(), static_cast<size_t>(2), "n=0 sweep is one row");
    check_eq(rows[0], std::string("lambda,mu,nu,value,algorithm,tool_version"),
             "sweep csv header");
    std::vector<std::string> fields = csv_fields(rows[1]);
    check_eq(fields[0], std::string("[]"), "empty triple row");
    check_eq(fields[3], std::string("1"), "empty triple value");

    r = run("sweep kron --n 2");
    rows = lines_of(r.out);
    check_eq(rows.size(), static_cast<size_t>(9), "eight rows at n=2");
    for (size_t i = 1; i < rows.size(); i++) {
        fields = csv_fields(rows[i]);
        int signs = 0;
        for (int c = 0; c < 3; c++)
            if (fields[static_cast<size_t>(c)] == "[1,1]") signs++;
        check_eq(fields[3], std::string(signs % 2 == 0 ? "1" : "0"),
                 "kron parity rule at row " + std::to_string(i));
    }

    /* rkron sweeps range over all sizes up to n. */
    r = run("sweep rkron --n 1");
    rows = lines_of(r.out);
    check_eq(rows.size(), static_cast<size_t>(9), "eight reduced rows at n=1");
    check_eq(rows[0], std::string("alpha,beta,gamma,value,algorithm,tool_version"),
             "reduced sweep header");
    for (size_t i = 1; i < rows.size(); i++) {
        fields = csv_fields(rows[i]);
        int boxes = 0;
        for (int c = 0; c < 3; c++)
            if (fields[static_cast<size_t>(c)] == "[1]") boxes++;
        check_eq(fields[3], std::string(boxes == 1 ? "0" : "1"),
                 "reduced triangle rule at row " + std::to_string(i));
    }

    /* Worker count cannot change the table. */
    fs::path j1 = g_scratch / "sweep_j1";
    fs::path j2 = g_scratch / "sweep_j2";
    fs::create_directories(j1);
    fs::create_directories(j2);
    Run one = run_with_cache(j1.string(), "sweep kron --n 3 --jobs 1");
    Run two = run_with_cache(j2.string(), "sweep kron --n 3 --jobs 2");
    check_eq(one.code, 0, "single worker sweep");
    check_eq(two.code, 0, "double worker sweep");
    check_eq(two.out, one.out, "worker count is invisible in the output");

    /* --out writes the same bytes to a file. */
    fs::path table = g_scratch / "table.csv";
    Run filed = run("sweep kron --n 2 --out " + sh_quote(table.string()));
    check_eq(filed.code, 0, "sweep to file");
    check(filed.out.empty(), "nothing on stdout with --out");
    Run direct = run("sweep kron --n 2");
    check_eq(read_file(table), direct.out, "file matches stdout");

    Run bad = run("sweep kron --out /no/such/dir/table.csv --n 1");
    check_eq(bad.code, 1, "unwritable output path");
    check(bad.err.find("cannot write") != std::string::npos,
          "unwritable path message");

    Run json_run = run("sweep kron --n 1 --format json");
    nlohmann::json arr = nlohmann::json::parse(json_run.out);
    check(arr.is_array() && arr.size() == 1, "json sweep shape");
    check_eq(arr[0].at("value").get<std::string>(), std::string("1"),
             "json sweep value");

    Run usage = run("sweep --n 1 kron2");
    check_eq(usage.code, 1, "unknown sweep kind rejected");
    Run negative = run("sweep kron --n -1");
    check_eq(negative.code, 1, "negative bound rejected");
}

void test_no_subcommand() {
    Run r = run("");
    check_eq(r.code, 1, "a subcommand is required");
    Run help = run("--help");
    check_eq(help.code, 0, "help exits cleanly");
    check(help.out.find("kron") != std::string::npos, "help lists subcommands");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-kroncoeff-binary>\n";
        return 2;
    }
    g_cli = argv[1];
    g_scratch = fs::temp_directory_path() /
                ("kroncoeff_cli_test_" + std::to_string(getpid()));
    fs::remove_all(g_scratch);
    fs::create_directories(g_scratch / "cache");

    test_kron_basic();
    test_kron_all_algorithms();
    test_formats();
    test_rkron();
    test_lr();
    test_verify();
    test_cache();
    test_sweep();
    test_no_subcommand();

    int rc = report("test_cli");
    if (rc == 0) fs::remove_all(g_scratch);
    return rc;
}
