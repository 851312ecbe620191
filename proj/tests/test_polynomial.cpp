/* Monomial polynomial arithmetic, the two Schur routes, and the identity
 * checkers (including their failure path). */

#include "kronecker.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "test_util.hpp"

using namespace kc;
using namespace kctest;

static void test_arithmetic() {
    MonomialPoly p(2), q(2);
    p.add_term({1, 0}, 2);
    p.add_term({0, 1}, -1);
    q.add_term({1, 1}, 3);
    q.add_term({0, 1}, 1);

    check((p + q) - q == p, "addition and subtraction invert");
    check(p * q == q * p, "multiplication commutes");
    check(p.scaled(Int(0)).is_zero(), "scaling by zero empties the map");
    check_eq(p.coefficient({0, 1}), Int(-1), "coefficient lookup");
    check_eq(p.coefficient({5, 5}), Int(0), "missing coefficient is 0");

    MonomialPoly cancel(2);
    cancel.add_term({1, 0}, 1);
    cancel.add_term({1, 0}, -1);
    check(cancel.is_zero(), "cancelling terms are not stored");
    check_eq(cancel.to_string(), std::string("0"), "zero renders as 0");
}

static void test_schur_basics() {
    check_eq(schur_poly(Partition({2, 1}), 2).to_string(),
             std::string("1*x1*x2^2 + 1*x1^2*x2"), "s_(2,1) in two variables");
    check(schur_poly(Partition({1, 1, 1}), 2).is_zero(),
          "too few variables gives the zero polynomial");
    MonomialPoly e2(2);
    e2.add_term({1, 1}, 1);
    check(schur_poly(Partition({1, 1}), 2) == e2, "s_(1,1) = x1*x2");
    check_eq(schur_poly(Partition(), 3).coefficient({0, 0, 0}), Int(1),
             "empty shape gives the constant 1");

    for (int m = 0; m <= 5; m++)
        for (int n = 1; n <= 3; n++)
            check(complete_homogeneous(m, n) ==
                      schur_poly(m == 0 ? Partition()
                                        : Partition(std::vector<int>{m}),
                                 n),
                  "h_m = s_(m) at m=" + std::to_string(m));
}

static void test_jacobi_trudi_agreement() {
    for (long long n = 0; n <= 6; n++)
        for (const Partition& lambda : partitions_of(n))
            for (int nvars = 1; nvars <= 3; nvars++)
                check(schur_poly(lambda, nvars) == schur_poly_jt(lambda, nvars),
                      "tableau sum vs determinant at " +
                          render_partition(lambda) + " in " +
                          std::to_string(nvars) + " variables");
}

static void test_substitution_and_tensor() {
    /* s_(1)[x*y] = sum_ij x_i y_j = h_1(x) tensor h_1(y). */
    check(product_substitution(Partition({1}), 2, 2) ==
              tensor(complete_homogeneous(1, 2), complete_homogeneous(1, 2)),
          "linear substitution");

    MonomialPoly x1(1), y1(2);
    x1.add_term({2}, 3);
    y1.add_term({0, 1}, 5);
    MonomialPoly t = tensor(x1, y1);
    check_eq(t.coefficient({2, 0, 1}), Int(15),
             "tensor multiplies coefficients");
    check_eq(t.nvars(), 3, "tensor concatenates variable blocks");
}

static KronOracle char_oracle() {
    return [](const Partition& a, const Partition& b, const Partition& c) {
        return kron_char_sum(a, b, c).value;
    };
}

static void test_identity_checkers() {
    for (int m = 0; m <= 4; m++)
        for (int a = 1; a <= 2; a++)
            for (int b = 1; b <= 2; b++) {
                IdentityCheck r = verify_hm_product_identity(m, a, b);
                check(r.ok && r.detail.empty(),
                      "h_m identity at m=" + std::to_string(m));
            }

    for (long long n = 1; n <= 3; n++)
        for (const Partition& lambda : partitions_of(n)) {
            IdentityCheck r =
                verify_schur_kron_identity(lambda, 2, 2, char_oracle());
            check(r.ok, "Schur expansion at " + render_partition(lambda));
            check(r.comparisons > 0, "expansion compared something");
        }

    for (int D = 1; D <= 3; D++) {
        IdentityCheck r = verify_triple_cauchy(2, 2, 2, D, char_oracle());
        check(r.ok, "triple product at degree " + std::to_string(D));
    }

    /* A broken oracle must be caught, with a concrete discrepancy. */
    KronOracle zero = [](const Partition&, const Partition&, const Partition&) {
        return Int(0);
    };
    IdentityCheck bad = verify_schur_kron_identity(Partition({2}), 2, 2, zero);
    check(!bad.ok, "zero oracle fails the expansion");
    check(!bad.detail.empty(), "failure carries a detail message");
    IdentityCheck bad3 = verify_triple_cauchy(2, 2, 2, 2, zero);
    check(!bad3.ok, "zero oracle fails the triple product");
}

int main() {
    test_arithmetic();
    test_schur_basics();
    test_jacobi_trudi_agreement();
    test_substitution_and_tensor();
    test_identity_checkers();
    return report("test_polynomial");
}
