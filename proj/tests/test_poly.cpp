#include <doctest.h>

#include "hopfore/matrix.hpp"

using namespace hopfore;

namespace {

// brute-force: divisibility by every monic polynomial of degree <= max_deg
bool has_monic_divisor_upto(const Field& F, const UniPoly& f, std::size_t max_deg) {
    std::vector<Scalar> elems = F.all_elements();
    for (std::size_t d = 1; d <= max_deg; ++d) {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < d; ++k) total *= F.order();
        for (std::uint64_t code = 0; code < total; ++code) {
            UniPoly cand;
            cand.c.assign(d + 1, F.zero());
            std::uint64_t t = code;
            for (std::size_t k = 0; k < d; ++k) {
                cand.c[k] = elems[t % F.order()];
                t /= F.order();
            }
            cand.c[d] = F.one();
            if (poly_divmod(F, f, cand).second.is_zero()) return true;
        }
    }
    return false;
}

UniPoly refactor(const Field& F, const FactorList& fl) {
    UniPoly prod = poly_const(F, fl.unit);
    for (const auto& [g, m] : fl.factors) prod = poly_mul(F, prod, poly_pow(F, g, m));
    return prod;
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("divmod and gcd basics") {
        FieldPtr F = Field::prime(5);
        UniPoly f = poly_parse(*F, "y^2 - 1");
        UniPoly g = poly_parse(*F, "y - 1");
        auto [q, r] = poly_divmod(*F, f, g);
        CHECK(r.is_zero());
        CHECK(poly_eq(q, poly_parse(*F, "y + 1")));
        CHECK(poly_eq(poly_gcd(*F, f, g), g));
    }

    TEST_CASE("xgcd produces an exact Bezout identity") {
        FieldPtr F = Field::prime(5);
        auto check_bezout = [&](const UniPoly& a, const UniPoly& b) {
            XgcdResult x = poly_xgcd(*F, a, b);
            UniPoly lhs = poly_add(*F, poly_mul(*F, x.u, a), poly_mul(*F, x.v, b));
            CHECK(poly_eq(lhs, x.g));
            CHECK(poly_is_monic(*F, x.g));
        };
        UniPoly a = poly_parse(*F, "y - 1");
        UniPoly b = poly_parse(*F, "y - 2");
        XgcdResult x = poly_xgcd(*F, a, b);
        CHECK(x.g.degree() == 0);  // coprime linears
        check_bezout(a, b);
        check_bezout(a, a);  // gcd(f, f) = monic f
        CHECK(poly_eq(poly_xgcd(*F, a, a).g, a));
        // gcd((y-1)^2 (y-2), (y-1)(y-3)) = y - 1, verified by division
        UniPoly big1 = poly_parse(*F, "(y-1)^2 * (y-2)");
        UniPoly big2 = poly_parse(*F, "(y-1)*(y-3)");
        UniPoly g = poly_gcd(*F, big1, big2);
        CHECK(poly_eq(g, poly_parse(*F, "y-1")));
        CHECK(poly_divmod(*F, big1, g).second.is_zero());
        CHECK(poly_divmod(*F, big2, g).second.is_zero());
        check_bezout(big1, big2);
        CHECK_THROWS_AS(poly_xgcd(*F, poly_zero(), poly_zero()), error);
    }

    TEST_CASE("factorization over F5") {
        FieldPtr F = Field::prime(5);
        FactorList fl = poly_factor(*F, poly_parse(*F, "y^2 - 1"));
        REQUIRE(fl.factors.size() == 2);
        auto has = [&](const char* text) {
            for (const auto& [g, m] : fl.factors)
                if (poly_eq(g, poly_parse(*F, text)) && m == 1) return true;
            return false;
        };
        CHECK(has("y - 1"));
        CHECK(has("y - 4"));
        CHECK(poly_eq(refactor(*F, fl), poly_parse(*F, "y^2 - 1")));
    }

    TEST_CASE("y^4 - 2 over F5 is irreducible, by exhaustive trial division") {
        FieldPtr F = Field::prime(5);
        UniPoly f = poly_parse(*F, "y^4 - 2");
        CHECK_FALSE(has_monic_divisor_upto(*F, f, 2));  // brute force oracle
        CHECK(poly_is_irreducible(*F, f));
        FactorList fl = poly_factor(*F, f);
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].second == 1);
        CHECK(poly_eq(fl.factors[0].first, f));
    }

    TEST_CASE("repeated factors over F17") {
        FieldPtr F = Field::prime(17);
        UniPoly f = poly_parse(*F, "(y-1)^3");
        FactorList fl = poly_factor(*F, f);
        REQUIRE(fl.factors.size() == 1);
        CHECK(poly_eq(fl.factors[0].first, poly_parse(*F, "y-1")));
        CHECK(fl.factors[0].second == 3);
        CHECK(poly_eq(refactor(*F, fl), f));
    }

    TEST_CASE("factorization over an even-characteristic extension") {
        FieldPtr F = Field::extension(2, {1, 1, 1});
        // (y - z)(y - z^2) y^2 over F4, z a generator
        UniPoly f = poly_parse(*F, "(y - z)*(y - (z + 1))*y^2");
        FactorList fl = poly_factor(*F, f, 7);
        CHECK(poly_eq(refactor(*F, fl), f));
        std::size_t total = 0;
        for (const auto& [g, m] : fl.factors) {
            CHECK(g.degree() == 1);
            total += m;
        }
        CHECK(total == 4);
    }

    TEST_CASE("factorization re-multiplies bit-exactly on random inputs") {
        FieldPtr F = Field::prime(5);
        std::vector<Scalar> elems = F->all_elements();
        std::uint64_t state = 12345;
        auto next = [&]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return state >> 33;
        };
        for (int trial = 0; trial < 25; ++trial) {
            UniPoly f;
            std::size_t deg = 1 + next() % 7;
            f.c.assign(deg + 1, F->zero());
            for (std::size_t i = 0; i < deg; ++i) f.c[i] = elems[next() % 5];
            f.c[deg] = elems[1 + next() % 4];
            FactorList fl = poly_factor(*F, f, trial);
            CHECK(poly_eq(refactor(*F, fl), f));
            for (const auto& [g, m] : fl.factors) CHECK(poly_is_irreducible(*F, g));
            // pairwise distinct
            for (std::size_t i = 0; i < fl.factors.size(); ++i)
                for (std::size_t j = i + 1; j < fl.factors.size(); ++j)
                    CHECK_FALSE(poly_eq(fl.factors[i].first, fl.factors[j].first));
        }
    }

    TEST_CASE("identical seeds give identical factor ordering") {
        FieldPtr F = Field::prime(17);
        UniPoly f = poly_parse(*F, "(y^2+1)*(y^2+y+4)*(y-3)");
        FactorList a = poly_factor(*F, f, 42);
        FactorList b = poly_factor(*F, f, 42);
        REQUIRE(a.factors.size() == b.factors.size());
        for (std::size_t i = 0; i < a.factors.size(); ++i)
            CHECK(poly_eq(a.factors[i].first, b.factors[i].first));
    }

    TEST_CASE("cyclotomic linear peeling") {
        FieldPtr Q = Field::cyclotomic(3);
        Scalar z = Q->generator();
        // roots at the torsion units and at rational candidates
        UniPoly f = poly_mul(*Q, poly_linear(*Q, z), poly_linear(*Q, Q->from_int(2)));
        FactorList fl = poly_factor(*Q, f);
        CHECK(fl.factors.size() == 2);
        CHECK(poly_eq(refactor(*Q, fl), f));
        // an irreducible quadratic residue is reported, not silently dropped
        CHECK_THROWS_WITH_AS(poly_factor(*Q, poly_parse(*Q, "y^2 - 2")),
                             doctest::Contains("incomplete factorization"), error);
    }

    TEST_CASE("q-binomial Pascal recursion") {
        FieldPtr F = Field::prime(5);
        Scalar q = F->from_int(3);
        // base: (2 1)_q = 1 + q
        CHECK(q_binomial(*F, 2, 1, q) == F->add(F->one(), q));
        // (4 2) at q = 3, a primitive 4th root mod 5, vanishes
        CHECK(q_binomial(*F, 4, 2, q) == F->zero());
        for (unsigned n = 0; n <= 8; ++n) CHECK(q_binomial(*F, n, 0, q) == F->one());
        CHECK_THROWS_AS((void)q_binomial(*F, 2, 3, q), error);
    }

    TEST_CASE("q-binomial recursion and symmetry for generic q") {
        FieldPtr F = Field::prime(17);
        Scalar q = F->from_int(3);  // order 16, not a root of unity of order <= 8
        for (unsigned n = 1; n <= 8; ++n) {
            for (unsigned l = 0; l <= n; ++l) {
                Scalar lhs = q_binomial(*F, n, l, q);
                CHECK(lhs == q_binomial(*F, n, n - l, q));
                if (l >= 1 && l < n) {
                    Scalar rec = F->add(q_binomial(*F, n - 1, l, q),
                                        F->mul(F->pow(q, n - l), q_binomial(*F, n - 1, l - 1, q)));
                    CHECK(lhs == rec);
                }
            }
        }
    }

    TEST_CASE("q-binomial vanishing at primitive roots of unity") {
        // over F_p and over Q(zeta_n), for n up to 12 where a root exists
        for (std::uint64_t n = 2; n <= 12; ++n) {
            for (const auto& spec : {std::string("Fp(5)"), std::string("Fp(17)"),
                                     "QZeta(" + std::to_string(n) + ")"}) {
                FieldPtr F = Field::parse(spec);
                Scalar q;
                try {
                    q = F->primitive_root_of_unity(n);
                } catch (const error&) {
                    continue;
                }
                for (unsigned l = 1; l < n; ++l)
                    CHECK(q_binomial(*F, static_cast<unsigned>(n), l, q) == F->zero());
            }
        }
    }

    TEST_CASE("minimal polynomial of matrices") {
        FieldPtr F = Field::prime(5);
        Mat id3 = mat_identity(*F, 3);
        CHECK(poly_eq(minimal_polynomial(*F, id3), poly_parse(*F, "y - 1")));
        Mat nil(4, 4, F->zero());
        for (int i = 0; i < 3; ++i) nil.at(i + 1, i) = F->one();
        CHECK(poly_eq(minimal_polynomial(*F, nil), poly_parse(*F, "y^4")));
        // annihilates, and no proper monic divisor does
        UniPoly mp = minimal_polynomial(*F, nil);
        CHECK(mat_is_zero(*F, mat_poly_eval(*F, mp, nil)));
        FactorList fl = poly_factor(*F, mp);
        for (const auto& [g, m] : fl.factors) {
            UniPoly reduced = poly_divmod(*F, mp, g).first;
            CHECK_FALSE(mat_is_zero(*F, mat_poly_eval(*F, reduced, nil)));
        }
    }

    TEST_CASE("monic irreducible enumeration") {
        FieldPtr F = Field::prime(5);
        // counts from the necklace formula: (5^2 - 5)/2 = 10 quadratics
        CHECK(monic_irreducibles(*F, 1).size() == 5);
        CHECK(monic_irreducibles(*F, 2).size() == 10);
        for (const UniPoly& f : monic_irreducibles(*F, 2))
            CHECK_FALSE(has_monic_divisor_upto(*F, f, 1));
    }

    TEST_CASE("polynomial parse and print round trip") {
        FieldPtr F = Field::prime(17);
        for (const auto& text : {"y^2 + 3*y + 1", "y - 2", "y^4 - 2", "(y-1)^3"}) {
            UniPoly f = poly_parse(*F, text);
            CHECK(poly_eq(poly_parse(*F, poly_str(*F, f)), f));
        }
    }
}
