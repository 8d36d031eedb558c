#include <doctest.h>

#include "hopfore/field.hpp"

using namespace hopfore;

TEST_SUITE("field") {
    TEST_CASE("prime field arithmetic") {
        FieldPtr F = Field::prime(5);
        CHECK(F->is_one(F->mul(F->from_int(2), F->from_int(3))));
        CHECK(F->from_int(-1) == F->from_int(4));
        CHECK(F->order() == 5);
        CHECK_THROWS_AS(Field::prime(6), error);
        CHECK_THROWS_AS((void)F->inv(F->zero()), error);
    }

    TEST_CASE("ring axioms hold exactly on small fields") {
        for (const auto& spec : {"Fp(5)", "Fq(2, z^2+z+1)", "QZeta(3)"}) {
            FieldPtr F = Field::parse(spec);
            std::vector<Scalar> sample;
            if (F->is_finite()) {
                sample = F->all_elements();
            } else {
                for (int i = -2; i <= 2; ++i) sample.push_back(F->from_int(i));
                sample.push_back(F->generator());
                sample.push_back(F->mul(F->generator(), F->generator()));
            }
            for (const Scalar& a : sample) {
                CHECK(F->add(a, F->neg(a)) == F->zero());
                if (!F->is_zero(a)) CHECK(F->mul(a, F->inv(a)) == F->one());
                for (const Scalar& b : sample) {
                    CHECK(F->add(a, b) == F->add(b, a));
                    CHECK(F->mul(a, b) == F->mul(b, a));
                    for (const Scalar& c : sample) {
                        CHECK(F->mul(a, F->add(b, c)) ==
                              F->add(F->mul(a, b), F->mul(a, c)));
                        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    }
                }
            }
        }
    }

    TEST_CASE("cyclotomic field QZeta(3)") {
        FieldPtr F = Field::cyclotomic(3);
        Scalar z = F->generator();
        // z^2 + z + 1 = 0
        CHECK(F->add(F->add(F->mul(z, z), z), F->one()) == F->zero());
        CHECK(F->pow(z, 3) == F->one());
        CHECK(F->degree() == 2);
    }

    TEST_CASE("extension field Fq(2, z^2+z+1)") {
        // irreducibility over F_2 checked exhaustively: no roots
        for (std::uint64_t c = 0; c < 2; ++c) {
            std::uint64_t value = (c * c + c + 1) % 2;
            CHECK(value == 1);
        }
        FieldPtr F = Field::extension(2, {1, 1, 1});
        CHECK(F->order() == 4);
        Scalar z = F->generator();
        CHECK(F->mul(z, z) == F->add(z, F->one()));  // z^2 = z + 1
        CHECK(F->all_elements().size() == 4);
        // reducible modulus rejected
        CHECK_THROWS_AS(Field::extension(2, {0, 0, 1}), error);  // z^2
        CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), error);  // (z+1)^2
    }

    TEST_CASE("primitive roots of unity") {
        FieldPtr F5 = Field::prime(5);
        // exhaustive order computation mod 5: 2 is the least element of order 4
        Scalar w = F5->primitive_root_of_unity(4);
        CHECK(w == F5->from_int(2));
        CHECK(F5->pow(w, 4) == F5->one());
        CHECK(F5->pow(w, 2) != F5->one());
        CHECK(F5->primitive_root_of_unity(1) == F5->one());
        // no element of order 3 in a group of order 4
        CHECK_THROWS_AS((void)F5->primitive_root_of_unity(3), error);

        FieldPtr Q3 = Field::cyclotomic(3);
        Scalar z = Q3->primitive_root_of_unity(3);
        CHECK(Q3->pow(z, 3) == Q3->one());
        CHECK(z != Q3->one());
        CHECK_THROWS_AS((void)Q3->primitive_root_of_unity(4), error);

        // characteristic divides n
        CHECK_THROWS_AS((void)F5->primitive_root_of_unity(5), error);
    }

    TEST_CASE("multiplicative orders") {
        FieldPtr F17 = Field::prime(17);
        CHECK(*F17->mult_order(F17->from_int(2)) == 8);   // 2^8 = 256 = 1 mod 17
        CHECK(*F17->mult_order(F17->from_int(9)) == 8);   // 9 = 2^{-1}
        CHECK(*F17->mult_order(F17->from_int(16)) == 2);  // -1
        CHECK(*F17->mult_order(F17->one()) == 1);
    }

    TEST_CASE("scalar parsing and printing round trip") {
        FieldPtr F = Field::parse("Fq(2, y^2+y+1)");
        Scalar z = F->generator();
        CHECK(F->parse_scalar("z^2 + 1") == F->add(F->mul(z, z), F->one()));
        FieldPtr Q = Field::parse("QZeta(3)");
        CHECK(Q->parse_scalar("1/2*z - 3") ==
              Q->sub(Q->mul(Q->from_rational(mpq_class(1, 2)), Q->generator()), Q->from_int(3)));
        for (const Scalar& v : F->all_elements()) CHECK(F->parse_scalar(F->str(v)) == v);
        CHECK(Field::parse("Fp(17)")->descriptor() == "Fp(17)");
    }

    TEST_CASE("canonical representation makes equality structural") {
        FieldPtr Q = Field::cyclotomic(4);  // Q(i), Phi_4 = z^2 + 1
        Scalar i = Q->generator();
        CHECK(Q->mul(i, i) == Q->from_int(-1));
        CHECK(Q->pow(i, 4) == Q->one());
        // (1 + i)(1 - i) = 2
        CHECK(Q->mul(Q->add(Q->one(), i), Q->sub(Q->one(), i)) == Q->from_int(2));
    }
}
