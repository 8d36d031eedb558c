// Finite abelian groups given by invariant factors, their k-valued
// characters, character-group arithmetic, and <chi>-coset bookkeeping.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfore/field.hpp"

namespace hopfore {

struct AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

struct AbelianGroup {
    std::vector<std::uint64_t> factors;  // invariant factor list (n_1, ..., n_k)

    static GroupPtr make(std::vector<std::uint64_t> factors);

    std::size_t ngens() const { return factors.size(); }
    std::uint64_t order() const;
    std::uint64_t exponent() const;  // lcm of the factors
};

struct GroupElement {
    GroupPtr G;
    std::vector<std::uint64_t> e;  // exponents, reduced mod the factors

    bool operator==(const GroupElement& o) const { return e == o.e; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return e < o.e; }
};

GroupElement group_identity(const GroupPtr& G);
GroupElement group_element(const GroupPtr& G, std::vector<std::uint64_t> exponents);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);
GroupElement group_pow(const GroupElement& a, long long k);
bool group_is_identity(const GroupElement& a);
std::uint64_t group_element_order(const GroupElement& a);
// mixed-radix index in [0, |G|), used as a dense basis label
std::uint64_t group_index(const GroupElement& a);
GroupElement group_from_index(const GroupPtr& G, std::uint64_t index);
std::vector<GroupElement> group_all_elements(const GroupPtr& G);
std::string group_element_str(const GroupElement& a);

// character stored by generator images
struct Character {
    GroupPtr G;
    FieldPtr F;
    std::vector<Scalar> images;

    bool operator==(const Character& o) const { return images == o.images; }
    bool operator!=(const Character& o) const { return !(*this == o); }
    bool operator<(const Character& o) const { return images < o.images; }
};

// validates the order relations images[i]^{n_i} = 1
Character make_character(const GroupPtr& G, const FieldPtr& F, std::vector<Scalar> images);
Character trivial_character(const GroupPtr& G, const FieldPtr& F);
Scalar char_eval(const Character& chi, const GroupElement& g);
Character char_mul(const Character& a, const Character& b);
Character char_inv(const Character& a);
Character char_pow(const Character& a, long long k);
bool char_is_trivial(const Character& chi);
std::uint64_t char_order(const Character& chi);
std::string char_str(const Character& chi);

// lambda and sigma in the same <chi>-coset of the character group
bool same_chi_coset(const Character& lambda, const Character& sigma, const Character& chi);
// lexicographically least image tuple in the coset {chi^t * lambda}
Character coset_representative(const Character& lambda, const Character& chi);

// all homomorphisms G -> k^x realizable over F (the full dual when k has
// enough roots of unity; silently the realizable subgroup otherwise)
std::vector<Character> enumerate_characters(const GroupPtr& G, const FieldPtr& F);

// 1-cocycle alpha given by its values on the generators, extended by
// alpha(gh) = alpha(g) + chi(g) alpha(h)
struct Cocycle {
    GroupPtr G;
    FieldPtr F;
    std::vector<Scalar> values;

    bool is_zero() const;
};

Cocycle make_cocycle(const GroupPtr& G, const FieldPtr& F, std::vector<Scalar> values);
Cocycle zero_cocycle(const GroupPtr& G, const FieldPtr& F);
// consistency of the extension: generator-order relations
// alpha(g_i^{n_i}) = 0 and pairwise compatibility
// alpha(g_i)(1 - chi(g_j)) = alpha(g_j)(1 - chi(g_i))
bool cocycle_check(const Cocycle& alpha, const Character& chi);
Scalar cocycle_eval(const Cocycle& alpha, const Character& chi, const GroupElement& g);

}  // namespace hopfore
