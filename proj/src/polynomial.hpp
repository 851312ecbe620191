#ifndef KC_POLYNOMIAL_HPP
#define KC_POLYNOMIAL_HPP

/* Truncated symmetric-function arithmetic in finitely many variables:
 * sparse polynomials with exact coefficients, Schur polynomials both by
 * tableau generation and by the Jacobi-Trudi determinant, the product
 * substitution s_lambda[x*y], and the polynomial-identity verifiers built
 * on them. */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace kc {

/* Exponent-vector -> coefficient map over a fixed number of variables.
 * Zero coefficients are never stored, so operator== is structural equality
 * of polynomials. */
class MonomialPoly {
public:
    explicit MonomialPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& expo, const Int& coeff);
    Int coefficient(const std::vector<int>& expo) const;

    MonomialPoly operator+(const MonomialPoly& o) const;
    MonomialPoly operator-(const MonomialPoly& o) const;
    MonomialPoly operator*(const MonomialPoly& o) const;
    MonomialPoly scaled(const Int& c) const;
    bool operator==(const MonomialPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /* Graded lexicographic term order, exact decimal coefficients. */
    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, Int> terms_;
};

/* s_lambda(x_1..x_n) as the generating sum over semistandard tableaux.
 * Zero polynomial when len(lambda) > nvars. */
MonomialPoly schur_poly(const Partition& lambda, int nvars);

/* The same polynomial by the Jacobi-Trudi determinant det(h_{lambda_i-i+j});
 * the agreement of the two routes is a test fixture. */
MonomialPoly schur_poly_jt(const Partition& lambda, int nvars);

/* Complete homogeneous h_m(x_1..x_n). */
MonomialPoly complete_homogeneous(int m, int nvars);

/* s_lambda evaluated on the a*b products x_i*y_j, returned over the a+b
 * variables x_1..x_a,y_1..y_b. */
MonomialPoly product_substitution(const Partition& lambda, int a, int b);

/* Tensor product: p lives on the first a variables, q on the next b. */
MonomialPoly tensor(const MonomialPoly& p, const MonomialPoly& q);

using KronOracle =
    std::function<Int(const Partition&, const Partition&, const Partition&)>;

struct IdentityCheck {
    bool ok;
    long long comparisons; /* elementary coefficient comparisons performed */
    std::string detail;    /* first discrepancy, empty when ok */
};

/* s_lambda[x*y] = sum_{mu,nu} k(lambda,mu,nu) s_mu(x) s_nu(y) over a x-vars
 * and b y-vars, with k taken from the oracle. */
IdentityCheck verify_schur_kron_identity(const Partition& lambda, int a, int b,
                                         const KronOracle& kron);

/* h_m[x*y] = sum_{lambda |- m} s_lambda(x) s_lambda(y). */
IdentityCheck verify_hm_product_identity(int m, int a, int b);

/* prod (1 + x_i y_j z_k) over [a]x[b]x[c], truncated to degree D per group:
 * the degree-D slice must match  sum k(lambda,mu,nu) s_lambda(x) s_mu(y)
 * s_{nu'}(z)  and every monomial coefficient must equal the contingency
 * count of its exponent triple. */
IdentityCheck verify_triple_cauchy(int a, int b, int c, int D,
                                   const KronOracle& kron);

} // namespace kc

#endif
