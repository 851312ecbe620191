#include "kroncoeff.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronecker.hpp"
#include "partition.hpp"
#include "reduced.hpp"
#include "tableaux.hpp"
#include "verify.hpp"

struct kc_context {
    std::string last_error;
};

namespace {

/* Parse failures carry their own status so the caller can tell bad syntax
 * from a bad flag. */
struct parse_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

char* dup_cstring(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

kc::Partition parse_arg(const char* text, const char* what) {
    if (!text)
        throw parse_failure(std::string(what) + " is null");
    try {
        return kc::parse_partition(text);
    } catch (const std::exception& e) {
        throw parse_failure(e.what());
    }
}

template <class Fn>
kc_status guarded(kc_context* ctx, Fn&& fn) {
    if (!ctx) return KC_ERR_ARGUMENT;
    ctx->last_error.clear();
    try {
        fn();
        return KC_OK;
    } catch (const parse_failure& e) {
        ctx->last_error = e.what();
        return KC_ERR_PARSE;
    } catch (const kc::no_plateau_error& e) {
        ctx->last_error = e.what();
        return KC_ERR_NO_PLATEAU;
    } catch (const kc::disagreement_error& e) {
        ctx->last_error = e.what();
        return KC_ERR_DISAGREEMENT;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return KC_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return KC_ERR_INTERNAL;
    }
}

kc_status kron_common(kc_context* ctx, const char* lambda, const char* mu,
                      const char* nu, const char* algorithm, bool prime,
                      char** value_out, char** algorithm_out) {
    return guarded(ctx, [&] {
        if (!value_out) throw std::invalid_argument("value_out is null");
        kc::Partition la = parse_arg(lambda, "lambda");
        kc::Partition m = parse_arg(mu, "mu");
        kc::Partition n = parse_arg(nu, "nu");
        if (prime) n = kc::transpose(n);
        std::optional<kc::KronAlgorithm> algo;
        if (algorithm && std::strcmp(algorithm, "auto") != 0) {
            algo = kc::parse_algorithm(algorithm);
            if (!algo)
                throw std::invalid_argument(
                    std::string("unknown algorithm '") + algorithm +
                    "' (expected char, mlr, ct, or auto)");
        }
        kc::CoefficientResult r = kc::kron(la, m, n, algo);
        *value_out = dup_cstring(r.value.get_str());
        if (algorithm_out)
            *algorithm_out = dup_cstring(kc::algorithm_name(r.algorithm));
    });
}

} // namespace

extern "C" {

kc_context* kc_context_new(void) { return new (std::nothrow) kc_context; }

void kc_context_free(kc_context* ctx) { delete ctx; }

const char* kc_last_error(const kc_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

const char* kc_version(void) { return "0.1.0"; }

void kc_string_free(char* s) { std::free(s); }

kc_status kc_set_max_input_size(kc_context* ctx, int limit) {
    return guarded(ctx, [&] { kc::set_max_input_size(limit); });
}

kc_status kc_partition_canonical(kc_context* ctx, const char* text,
                                 char** out) {
    return guarded(ctx, [&] {
        if (!out) throw std::invalid_argument("out is null");
        *out = dup_cstring(kc::render_partition(parse_arg(text, "partition")));
    });
}

kc_status kc_partition_size(kc_context* ctx, const char* text,
                            long long* size_out) {
    return guarded(ctx, [&] {
        if (!size_out) throw std::invalid_argument("size_out is null");
        *size_out = parse_arg(text, "partition").size();
    });
}

kc_status kc_partitions_of(kc_context* ctx, long long n, char** out) {
    return guarded(ctx, [&] {
        if (!out) throw std::invalid_argument("out is null");
        if (n < 0) throw std::invalid_argument("n must be nonnegative");
        std::string lines;
        for (const kc::Partition& p : kc::partitions_of(n)) {
            lines += kc::render_partition(p);
            lines += '\n';
        }
        *out = dup_cstring(lines);
    });
}

kc_status kc_kron(kc_context* ctx, const char* lambda, const char* mu,
                  const char* nu, const char* algorithm, char** value_out,
                  char** algorithm_out) {
    return kron_common(ctx, lambda, mu, nu, algorithm, false, value_out,
                       algorithm_out);
}

kc_status kc_kron_prime(kc_context* ctx, const char* lambda, const char* mu,
                        const char* nu, const char* algorithm,
                        char** value_out, char** algorithm_out) {
    return kron_common(ctx, lambda, mu, nu, algorithm, true, value_out,
                       algorithm_out);
}

kc_status kc_reduced(kc_context* ctx, const char* alpha, const char* beta,
                     const char* gamma, const char* method, int window,
                     char** value_out) {
    return guarded(ctx, [&] {
        if (!value_out) throw std::invalid_argument("value_out is null");
        kc::Partition a = parse_arg(alpha, "alpha");
        kc::Partition b = parse_arg(beta, "beta");
        kc::Partition g = parse_arg(gamma, "gamma");
        int w = window > 0 ? window : 3;
        std::string m = method ? method : "bdo";
        kc::Int v;
        if (m == "bdo")
            v = kc::reduced(a, b, g);
        else if (m == "stab")
            v = kc::reduced_by_stabilization(a, b, g, w).value;
        else if (m == "both")
            v = kc::reduced_checked(a, b, g, w);
        else
            throw std::invalid_argument("unknown method '" + m +
                                        "' (expected bdo, stab, or both)");
        *value_out = dup_cstring(v.get_str());
    });
}

kc_status kc_lr(kc_context* ctx, const char* outer, const char* inner,
                const char* type, char** value_out) {
    return guarded(ctx, [&] {
        if (!value_out) throw std::invalid_argument("value_out is null");
        kc::Int v = kc::lr_coefficient(parse_arg(outer, "outer"),
                                       parse_arg(inner, "inner"),
                                       parse_arg(type, "type"));
        *value_out = dup_cstring(v.get_str());
    });
}

kc_status kc_multi_lr(kc_context* ctx, const char* shape,
                      const char* const* blocks, size_t nblocks,
                      char** value_out) {
    return guarded(ctx, [&] {
        if (!value_out) throw std::invalid_argument("value_out is null");
        if (!blocks && nblocks > 0)
            throw std::invalid_argument("blocks is null");
        kc::MultiLRSpec spec;
        spec.shape = parse_arg(shape, "shape");
        for (size_t i = 0; i < nblocks; i++)
            spec.blocks.push_back(parse_arg(blocks[i], "block"));
        *value_out = dup_cstring(kc::multi_lr(spec).get_str());
    });
}

kc_status kc_kron_canonical_key(kc_context* ctx, const char* lambda,
                                const char* mu, const char* nu, char** out) {
    return guarded(ctx, [&] {
        if (!out) throw std::invalid_argument("out is null");
        *out = dup_cstring(kc::kron_canonical_key(parse_arg(lambda, "lambda"),
                                                  parse_arg(mu, "mu"),
                                                  parse_arg(nu, "nu")));
    });
}

kc_status kc_reduced_canonical_key(kc_context* ctx, const char* alpha,
                                   const char* beta, const char* gamma,
                                   char** out) {
    return guarded(ctx, [&] {
        if (!out) throw std::invalid_argument("out is null");
        *out = dup_cstring(
            kc::reduced_canonical_key(parse_arg(alpha, "alpha"),
                                      parse_arg(beta, "beta"),
                                      parse_arg(gamma, "gamma")));
    });
}

int kc_verify_suite_count(void) {
    return static_cast<int>(kc::suite_names().size());
}

const char* kc_verify_suite_name(int index) {
    const auto& names = kc::suite_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[static_cast<size_t>(index)].c_str();
}

kc_status kc_verify_suite(kc_context* ctx, const char* name,
                          const char* profile, const char* format,
                          char** report_out, int* passed_out) {
    return guarded(ctx, [&] {
        if (!report_out) throw std::invalid_argument("report_out is null");
        if (!name) throw std::invalid_argument("suite name is null");
        std::string prof_text = profile ? profile : "default";
        std::optional<kc::Profile> prof = kc::parse_profile(prof_text);
        if (!prof)
            throw std::invalid_argument(
                "unknown profile '" + prof_text +
                "' (expected quick, default, or thorough)");
        std::string fmt = format ? format : "text";
        if (fmt != "text" && fmt != "json")
            throw std::invalid_argument("unknown format '" + fmt +
                                        "' (expected text or json)");

        std::vector<kc::SuiteReport> reports;
        if (std::strcmp(name, "all") == 0)
            reports = kc::run_all(*prof);
        else
            reports.push_back(kc::run_suite(name, *prof));

        std::string text = fmt == "json" ? kc::reports_json(reports)
                                         : kc::reports_text(reports);
        *report_out = dup_cstring(text);
        if (passed_out) *passed_out = kc::all_passed(reports) ? 1 : 0;
    });
}

} // extern "C"
