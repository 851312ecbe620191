/* The C boundary: status codes, string ownership, and value round trips.
 * Everything here goes through the public header only. */

#include <cstring>
#include <string>

#include "kroncoeff.h"
#include "test_util.hpp"

using namespace kctest;

/* Take ownership of an out-string and release it. */
static std::string take(char* s) {
    std::string copy = s ? s : "";
    kc_string_free(s);
    return copy;
}

static void test_context_basics(kc_context* ctx) {
    check(kc_version() != nullptr && std::strlen(kc_version()) > 0,
          "version string present");
    check_eq(std::string(kc_last_error(ctx)), std::string(""),
             "fresh context has no error");
    kc_string_free(nullptr); /* must be a no-op */
}

static void test_partition_calls(kc_context* ctx) {
    char* out = nullptr;
    check(kc_partition_canonical(ctx, " [ 3 , 2 , 0 ] ", &out) == KC_OK,
          "canonicalization succeeds");
    check_eq(take(out), std::string("[3,2]"), "canonical form");

    check(kc_partition_canonical(ctx, "[2,3]", &out) == KC_ERR_PARSE,
          "non-monotone text is a parse error");
    check(std::strlen(kc_last_error(ctx)) > 0, "parse error leaves a message");

    long long size = -1;
    check(kc_partition_size(ctx, "[4,2]", &size) == KC_OK, "size succeeds");
    check_eq(size, 6LL, "size value");

    check(kc_partitions_of(ctx, 5, &out) == KC_OK, "listing succeeds");
    std::string lines = take(out);
    long long count = 0;
    for (char ch : lines)
        if (ch == '\n') count++;
    check_eq(count, 7LL, "seven partitions of 5");
    check(lines.find("[3,1,1]") != std::string::npos, "listing content");
}

static void test_kron_calls(kc_context* ctx) {
    char* value = nullptr;
    char* algo = nullptr;

    check(kc_kron(ctx, "[2,2]", "[2,2]", "[2,2]", nullptr, &value, &algo) ==
              KC_OK,
          "automatic kron succeeds");
    check_eq(take(value), std::string("1"), "square value");
    check_eq(take(algo), std::string("char_sum"), "automatic route at size 4");

    check(kc_kron(ctx, "[1,1]", "[1,1]", "[1,1]", "auto", &value, nullptr) ==
              KC_OK,
          "explicit auto accepted");
    check_eq(take(value), std::string("0"), "vanishing value");

    check(kc_kron(ctx, "[5]", "[5]", "[5]", "mlr", &value, &algo) == KC_OK,
          "explicit route accepted");
    check_eq(take(value), std::string("1"), "trivial cube via mlr");
    check_eq(take(algo), std::string("multi_lr_sum"), "explicit route echoed");

    check(kc_kron(ctx, "[2]", "[1]", "[1]", nullptr, &value, nullptr) == KC_OK,
          "unequal sizes are not an error");
    check_eq(take(value), std::string("0"), "unequal sizes give zero");

    check(kc_kron(ctx, "[2,", "[1]", "[1]", nullptr, &value, nullptr) ==
              KC_ERR_PARSE,
          "malformed partition rejected");
    check(std::string(kc_last_error(ctx)).find("bad partition") !=
              std::string::npos,
          "parse failure names the input");

    check(kc_kron(ctx, "[1]", "[1]", "[1]", "frobenius", &value, nullptr) ==
              KC_ERR_ARGUMENT,
          "unknown algorithm rejected");
    check(std::string(kc_last_error(ctx)).find("char") != std::string::npos,
          "rejection lists the accepted names");

    check(kc_kron_prime(ctx, "[1,1,1]", "[1,1,1]", "[1,1,1]", nullptr, &value,
                        nullptr) == KC_OK,
          "kron prime succeeds");
    check_eq(take(value), std::string("1"), "sign cube twisted");
}

static void test_reduced_calls(kc_context* ctx) {
    char* value = nullptr;
    check(kc_reduced(ctx, "[2,1]", "[1,1]", "[1]", nullptr, 0, &value) == KC_OK,
          "default method succeeds");
    check_eq(take(value), std::string("1"), "finite-sum value");

    check(kc_reduced(ctx, "[2,1]", "[1,1]", "[1]", "stab", 0, &value) == KC_OK,
          "stabilization succeeds");
    check_eq(take(value), std::string("1"), "stabilized value");

    check(kc_reduced(ctx, "[2,1]", "[1,1]", "[1]", "both", 4, &value) == KC_OK,
          "cross-checked route succeeds");
    check_eq(take(value), std::string("1"), "cross-checked value");

    check(kc_reduced(ctx, "[]", "[]", "[]", "bdo", 0, &value) == KC_OK,
          "empty triple succeeds");
    check_eq(take(value), std::string("1"), "empty triple value");

    check(kc_reduced(ctx, "[1]", "[1]", "[1]", "newton", 0, &value) ==
              KC_ERR_ARGUMENT,
          "unknown method rejected");
}

static void test_lr_calls(kc_context* ctx) {
    char* value = nullptr;
    check(kc_lr(ctx, "[2,1]", "[1]", "[1,1]", &value) == KC_OK, "lr succeeds");
    check_eq(take(value), std::string("1"), "lr value");

    const char* blocks[] = {"[4,3,1]", "[3,3]", "[3,1]"};
    check(kc_multi_lr(ctx, "[7,6,5]", blocks, 3, &value) == KC_OK,
          "multi-lr succeeds");
    check_eq(take(value), std::string("6"), "worked multi-lr instance");

    const char* one[] = {"[2,1]"};
    check(kc_multi_lr(ctx, "[2,1]", one, 1, &value) == KC_OK,
          "single block succeeds");
    check_eq(take(value), std::string("1"), "single block is a delta");
}

static void test_keys(kc_context* ctx) {
    char* k1 = nullptr;
    char* k2 = nullptr;
    check(kc_kron_canonical_key(ctx, "[2,1]", "[1,1,1]", "[3]", &k1) == KC_OK,
          "kron key succeeds");
    check(kc_kron_canonical_key(ctx, "[3]", "[2,1]", "[1,1,1]", &k2) == KC_OK,
          "reordered kron key succeeds");
    std::string a = take(k1), b = take(k2);
    check_eq(b, a, "kron key ignores the order");

    check(kc_reduced_canonical_key(ctx, "[2,1]", "[1,1]", "[3]", &k1) == KC_OK,
          "reduced key succeeds");
    check(kc_reduced_canonical_key(ctx, "[3]", "[2,1]", "[1,1]", &k2) == KC_OK,
          "reordered reduced key succeeds");
    a = take(k1);
    b = take(k2);
    check_eq(b, a, "reduced key ignores the order");
}

static void test_verify_calls(kc_context* ctx) {
    int n = kc_verify_suite_count();
    check_eq(n, 17, "suite count");
    check(kc_verify_suite_name(0) != nullptr &&
              std::string(kc_verify_suite_name(0)) == "theorem1",
          "first suite name");
    check(kc_verify_suite_name(n) == nullptr, "index past the end is NULL");
    check(kc_verify_suite_name(-1) == nullptr, "negative index is NULL");

    char* report = nullptr;
    int passed = 0;
    check(kc_verify_suite(ctx, "saturation_witness", "quick", "text", &report,
                          &passed) == KC_OK,
          "suite run succeeds");
    std::string text = take(report);
    check_eq(passed, 1, "witness suite passes");
    check(text.find("suite: saturation_witness") != std::string::npos,
          "text report names the suite");

    check(kc_verify_suite(ctx, "saturation_witness", nullptr, "json", &report,
                          &passed) == KC_OK,
          "json format succeeds");
    text = take(report);
    check(text.find("\"suite\"") != std::string::npos, "json report shape");

    check(kc_verify_suite(ctx, "no_such_suite", "quick", "text", &report,
                          &passed) == KC_ERR_ARGUMENT,
          "unknown suite rejected");
    check(kc_verify_suite(ctx, "theorem1", "fast", "text", &report, &passed) ==
              KC_ERR_ARGUMENT,
          "unknown profile rejected");
    check(kc_verify_suite(ctx, "theorem1", "quick", "xml", &report, &passed) ==
              KC_ERR_ARGUMENT,
          "unknown format rejected");
}

static void test_input_limit(kc_context* ctx) {
    char* value = nullptr;
    check(kc_set_max_input_size(ctx, 5) == KC_OK, "limit accepted");
    check(kc_kron(ctx, "[6]", "[6]", "[6]", nullptr, &value, nullptr) ==
              KC_ERR_PARSE,
          "oversized input rejected under the limit");
    check(kc_set_max_input_size(ctx, -2) == KC_ERR_ARGUMENT,
          "negative limit rejected");
    check(kc_set_max_input_size(ctx, 64) == KC_OK, "limit restored");
    check(kc_kron(ctx, "[6]", "[6]", "[6]", nullptr, &value, nullptr) == KC_OK,
          "input accepted again");
    check_eq(take(value), std::string("1"), "trivial cube value");
}

int main() {
    kc_context* ctx = kc_context_new();
    check(ctx != nullptr, "context allocates");

    test_context_basics(ctx);
    test_partition_calls(ctx);
    test_kron_calls(ctx);
    test_reduced_calls(ctx);
    test_lr_calls(ctx);
    test_keys(ctx);
    test_verify_calls(ctx);
    test_input_limit(ctx);

    kc_context_free(ctx);
    kc_context_free(nullptr); /* must be a no-op */
    return report("test_capi");
}
