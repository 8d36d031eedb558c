// Exact base-field arithmetic: prime fields F_p, finite extensions
// F_p[z]/(m(z)), and cyclotomic rationals Q(zeta_N) = Q[z]/(Phi_N(z)).
// All representations are canonical, so equality of values is equality
// of representations.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hopfore {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One field element. The representation is reduced immediately after every
// operation; operations are dispatched through the owning Field.
class Scalar {
public:
    using PrimeRep = std::uint64_t;             // value in [0, p)
    using ExtRep = std::vector<std::uint64_t>;  // coeffs mod p, length = degree
    using CycRep = std::vector<mpq_class>;      // rational coeffs, length = deg Phi_N

    Scalar() : rep_(PrimeRep{0}) {}
    explicit Scalar(PrimeRep v) : rep_(v) {}
    explicit Scalar(ExtRep v) : rep_(std::move(v)) {}
    explicit Scalar(CycRep v) : rep_(std::move(v)) {}

    const std::variant<PrimeRep, ExtRep, CycRep>& rep() const { return rep_; }
    PrimeRep prime_rep() const { return std::get<PrimeRep>(rep_); }
    const ExtRep& ext_rep() const { return std::get<ExtRep>(rep_); }
    const CycRep& cyc_rep() const { return std::get<CycRep>(rep_); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // canonical total order, used for deterministic map keys and reports
    bool operator<(const Scalar& o) const;

private:
    std::variant<PrimeRep, ExtRep, CycRep> rep_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Prime, Extension, Cyclotomic };

    static FieldPtr prime(std::uint64_t p);
    // modulus: monic coefficients ascending (constant first), over F_p
    static FieldPtr extension(std::uint64_t p, const std::vector<std::uint64_t>& modulus);
    static FieldPtr cyclotomic(std::uint64_t n);
    // "Fp(5)" | "Fq(2, z^2+z+1)" | "QZeta(3)"  (the extension modulus may be
    // written in y or z)
    static FieldPtr parse(const std::string& spec);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return char_; }
    bool is_finite() const { return kind_ != Kind::Cyclotomic; }
    // number of elements for finite kinds
    std::uint64_t order() const;
    // degree over the prime field (or over Q for the cyclotomic kind)
    std::size_t degree() const { return degree_; }
    // order of the group of roots of unity: p^m - 1, or lcm(2, N)
    std::uint64_t unit_torsion() const;
    std::uint64_t cyclotomic_index() const { return cyc_n_; }
    std::string descriptor() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const mpq_class& v) const;
    // generator: z (class of the variable) for extension/cyclotomic kinds
    Scalar generator() const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws on zero
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, long long e) const;
    bool is_zero(const Scalar& a) const { return a == zero(); }
    bool is_one(const Scalar& a) const { return a == one(); }

    // multiplicative order, or nullopt if it exceeds the search bound
    std::optional<std::uint64_t> mult_order(const Scalar& a,
                                            std::uint64_t bound = 0) const;
    // omega with omega^n = 1 and omega^d != 1 for proper divisors d of n;
    // throws when the field has no such element
    Scalar primitive_root_of_unity(std::uint64_t n) const;

    // finite kinds only, deterministic order
    std::vector<Scalar> all_elements() const;

    std::string str(const Scalar& a) const;
    // expression over integers, rationals, and the generator z
    Scalar parse_scalar(const std::string& text) const;

private:
    Field() = default;

    Kind kind_ = Kind::Prime;
    std::uint64_t char_ = 0;  // 0 for cyclotomic
    std::uint64_t p_ = 0;
    std::size_t degree_ = 1;
    std::uint64_t cyc_n_ = 0;
    std::vector<std::uint64_t> ext_modulus_;  // monic, ascending
    std::vector<mpq_class> cyc_modulus_;      // Phi_N, monic, ascending

    Scalar reduce_ext(std::vector<std::uint64_t> c) const;
    Scalar reduce_cyc(std::vector<mpq_class> c) const;
};

}  // namespace hopfore
