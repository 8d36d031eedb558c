// The Hopf-Ore extension H = kG(chi^{-1}, a, delta) and its rank-one
// quotients H/I as exact symbolic algebras. The internal convention follows
// the representation-theoretic one throughout: the defining relation is
//   x g = chi^{-1}(g) g x + alpha(g) g (1 - a),
// the comultiplication is Delta(x) = x (x) a + 1 (x) x, and q = chi^{-1}(a).

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfore/group.hpp"
#include "hopfore/matrix.hpp"

namespace hopfore {

struct QuotientSpec {
    enum class Kind { None, PowerZero, PowerCentral };
    Kind kind = Kind::None;
    unsigned n = 0;
    Scalar beta;  // PowerCentral only, nonzero
};

QuotientSpec quotient_none();
QuotientSpec quotient_power_zero(unsigned n);
QuotientSpec quotient_power_central(unsigned n, Scalar beta);

struct HopfPresentation;
using HopfPtr = std::shared_ptr<const HopfPresentation>;

struct HopfPresentation {
    FieldPtr field;
    GroupPtr group;
    Character chi;
    Character chi_inv;
    GroupElement a;
    Cocycle alpha;   // paired with chi_inv; identically zero in Case 1
    QuotientSpec quotient;

    Scalar q;                 // chi^{-1}(a)
    std::uint64_t q_order;    // multiplicative order of q
    std::uint64_t chi_order;  // s = |chi|
    int case_tag;             // 1: q != 1; 2: q = 1, alpha(a) = 0; 3: q = 1, alpha(a) != 0
    std::optional<Scalar> normalization_gamma;  // witness when Case 1 input had alpha != 0
};

// Validates the data, derives q, s and the case tag, and normalizes Case 1
// inputs with alpha != 0 to alpha = 0 (recording the substitution witness).
// Quotient specs are checked against the admissibility constraints; a central
// power ideal whose beta term vanishes is stored as the plain power ideal.
HopfPtr make_hopf(FieldPtr field, GroupPtr group, Character chi, GroupElement a, Cocycle alpha,
                  QuotientSpec quotient);

struct CaseNormalizeResult {
    HopfPtr presentation;  // alpha = 0
    Scalar gamma;          // witness x' = x - gamma (1 - a)
};
// Only valid in Case 1 (q != 1); errors otherwise.
CaseNormalizeResult case_normalize(const HopfPtr& H);

// basis label g x^i
struct BasisLabel {
    std::uint64_t g = 0;  // group index
    std::uint32_t i = 0;  // x degree

    bool operator==(const BasisLabel& o) const { return g == o.g && i == o.i; }
    bool operator<(const BasisLabel& o) const { return i != o.i ? i < o.i : g < o.g; }
};

class HopfElement {
public:
    std::map<BasisLabel, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const HopfElement& o) const { return terms == o.terms; }
    std::uint32_t max_degree() const;
};

struct TensorLabel {
    BasisLabel l, r;
    bool operator==(const TensorLabel& o) const { return l == o.l && r == o.r; }
    bool operator<(const TensorLabel& o) const { return l == o.l ? r < o.r : l < o.l; }
};

class TensorElement {
public:
    std::map<TensorLabel, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

HopfElement he_zero();
HopfElement he_one(const HopfPresentation& H);
HopfElement he_scalar(const HopfPresentation& H, const Scalar& c);
HopfElement he_basis(const HopfPresentation& H, const GroupElement& g, std::uint32_t i);
HopfElement he_group(const HopfPresentation& H, const GroupElement& g);
HopfElement he_x(const HopfPresentation& H);
HopfElement he_add(const HopfPresentation& H, const HopfElement& u, const HopfElement& v);
HopfElement he_sub(const HopfPresentation& H, const HopfElement& u, const HopfElement& v);
HopfElement he_scale(const HopfPresentation& H, const Scalar& c, const HopfElement& u);
HopfElement he_mul(const HopfPresentation& H, const HopfElement& u, const HopfElement& v);
HopfElement he_pow(const HopfPresentation& H, const HopfElement& u, std::uint64_t e);
std::string he_str(const HopfPresentation& H, const HopfElement& u);

TensorElement te_tensor(const HopfPresentation& H, const HopfElement& u, const HopfElement& v);
TensorElement te_add(const HopfPresentation& H, const TensorElement& u, const TensorElement& v);
TensorElement te_sub(const HopfPresentation& H, const TensorElement& u, const TensorElement& v);
TensorElement te_mul(const HopfPresentation& H, const TensorElement& u, const TensorElement& v);
std::string te_str(const HopfPresentation& H, const TensorElement& u);

TensorElement he_comul(const HopfPresentation& H, const HopfElement& u);
Scalar he_counit(const HopfPresentation& H, const HopfElement& u);
HopfElement he_antipode(const HopfPresentation& H, const HopfElement& u);

struct AxiomReport {
    struct Entry {
        std::string axiom;
        std::string witness;
        bool pass;
    };
    std::vector<Entry> entries;
    std::string basis_range;
    bool all_pass = true;
};

// Checks coassociativity, the counit and antipode axioms on every basis
// element g x^i with i <= degree_cap and g over the generators and a, and
// that Delta is multiplicative on products of generators. Failures become
// report entries, never exceptions.
AxiomReport verify_hopf_axioms(const HopfPtr& H, unsigned degree_cap);

// Basis of {z in H[<= cap] : Delta(z) = z (x) g + 1 (x) z}, echelonized with
// columns ordered by degree descending.
std::vector<HopfElement> skew_primitive_space(const HopfPtr& H, const GroupElement& g,
                                              unsigned degree_cap);

struct RankReport {
    std::string classification;  // "1", "2", or "infinite"
    std::set<std::uint64_t> degrees_found;      // by scanning, degrees >= 1
    std::set<std::uint64_t> degrees_predicted;  // from the classification, <= cap
    bool match = false;
    struct PerGrouplike {
        GroupElement g;
        std::set<std::uint64_t> found;
        std::set<std::uint64_t> predicted;
    };
    std::vector<PerGrouplike> details;
};

// Scans skew primitives over all powers of a up to the degree cap and checks
// the scan against the predicted degree pattern. Requires quotient = None.
RankReport rank_report(const HopfPtr& H, unsigned degree_cap);

// expected nontrivial skew-primitive degrees at the grouplike g, up to cap
std::set<std::uint64_t> predicted_primitive_degrees(const HopfPresentation& H,
                                                    const GroupElement& g, unsigned cap);

}  // namespace hopfore
