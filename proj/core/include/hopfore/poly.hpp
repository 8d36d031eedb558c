// Univariate polynomials over a Field, Gaussian binomials, and polynomial
// factorization (complete over finite fields, linear peeling over the
// cyclotomic rationals).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/field.hpp"

namespace hopfore {

// coefficients ascending, no trailing zeros; empty vector = 0
struct UniPoly {
    std::vector<Scalar> c;

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
};

UniPoly poly_zero();
UniPoly poly_const(const Field& F, const Scalar& a);
UniPoly poly_x(const Field& F);
UniPoly poly_from_coeffs(const Field& F, std::vector<Scalar> coeffs);
// y - a
UniPoly poly_linear(const Field& F, const Scalar& a);

void poly_trim(const Field& F, UniPoly& f);
bool poly_eq(const UniPoly& a, const UniPoly& b);
bool poly_lt(const UniPoly& a, const UniPoly& b);  // canonical order
bool poly_is_monic(const Field& F, const UniPoly& f);

UniPoly poly_add(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly poly_sub(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly poly_mul(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly poly_scale(const Field& F, const Scalar& s, const UniPoly& a);
UniPoly poly_pow(const Field& F, const UniPoly& a, std::uint64_t e);
std::pair<UniPoly, UniPoly> poly_divmod(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly poly_mod(const Field& F, const UniPoly& a, const UniPoly& m);
UniPoly poly_mulmod(const Field& F, const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly poly_powmod(const Field& F, const UniPoly& a, const mpz_class& e, const UniPoly& m);
UniPoly poly_make_monic(const Field& F, const UniPoly& f);
UniPoly poly_derivative(const Field& F, const UniPoly& f);
Scalar poly_eval(const Field& F, const UniPoly& f, const Scalar& x);
UniPoly poly_gcd(const Field& F, const UniPoly& a, const UniPoly& b);  // monic

// Bezout: g = u*a + v*b with g monic
struct XgcdResult {
    UniPoly g, u, v;
};
XgcdResult poly_xgcd(const Field& F, const UniPoly& a, const UniPoly& b);

UniPoly poly_lcm(const Field& F, const UniPoly& a, const UniPoly& b);

struct FactorList {
    // pairwise distinct monic irreducible factors with multiplicities
    std::vector<std::pair<UniPoly, unsigned>> factors;
    Scalar unit;
};

// Complete factorization over finite kinds (squarefree decomposition,
// distinct-degree, Cantor-Zassenhaus equal-degree splitting); over the
// cyclotomic kind only root peeling against a finite candidate set is
// attempted, and anything it cannot finish throws "incomplete factorization".
// The seed drives equal-degree splitting; identical seeds give identical
// factor ordering.
FactorList poly_factor(const Field& F, const UniPoly& f, std::uint64_t seed = 0);

bool poly_is_irreducible(const Field& F, const UniPoly& f);
// all monic irreducibles of the given degree (finite kinds, small fields)
std::vector<UniPoly> monic_irreducibles(const Field& F, std::size_t degree);

// Gaussian binomial via the division-free Pascal recursion
// C(n,l) = C(n-1,l) + q^{n-l} C(n-1,l-1), well defined at roots of unity.
Scalar q_binomial(const Field& F, unsigned n, unsigned l, const Scalar& q);

// ASCII form in an arbitrary variable, e.g. "y^2 + 3*y + 1"
std::string poly_str(const Field& F, const UniPoly& f, char var = 'y');
UniPoly poly_parse(const Field& F, const std::string& text, char var = 'y');

}  // namespace hopfore
