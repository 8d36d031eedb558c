// Finite-dimensional weight modules: diagonal group action determined by a
// per-basis-vector weight character, plus the x-action matrix. Constructors
// for the one-dimensional simples, the serial ladders, the block companion
// modules, truncated Verma quotients, tensor products, direct sums, and the
// weight-graded basis scrambler used by oracle tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfore/hopf.hpp"

namespace hopfore {

struct WeightModule {
    HopfPtr H;
    std::vector<Character> weights;  // weight of each basis vector
    Mat X;                           // column action: (X v)_i = sum_j X[i][j] v_j

    std::size_t dim() const { return weights.size(); }
};

// V_lambda: one-dimensional, x acts by zero. Whether it survives a quotient
// is reported by verify_module, not here.
WeightModule make_simple_onedim(const HopfPtr& H, const Character& lambda);

// V_t(lambda): ladder of length t; under a power ideal t <= n is enforced,
// and the central power ideal additionally needs lambda(a)^n = 1.
WeightModule make_serial(const HopfPtr& H, const Character& lambda, unsigned t);

// V(lambda, f^r): companion module of f^r on the degree ladder of length
// deg(f^r) * s. f must be monic of degree >= 1.
WeightModule make_block(const HopfPtr& H, const Character& lambda, const UniPoly& f, unsigned r);

// image of the Verma module in the quotient algebra
WeightModule make_verma_quotient(const HopfPtr& H, const Character& lambda);

WeightModule mod_tensor(const WeightModule& M, const WeightModule& N);
WeightModule mod_direct_sum(const WeightModule& M, const WeightModule& N);
// conjugates by a seeded random invertible block-diagonal matrix respecting
// the weight grading; the result is isomorphic to the input
WeightModule mod_scramble(const WeightModule& M, std::uint64_t seed);

struct ModuleCheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
ModuleCheckReport verify_module(const WeightModule& M);

// ρ(g) as a diagonal matrix
Mat group_action(const WeightModule& M, const GroupElement& g);

struct ModuleLabel {
    enum class Kind { Simple1, Serial, Block };
    Kind kind = Kind::Simple1;
    Character lambda;  // exact weight for Simple1/Serial, coset representative for Block
    unsigned t = 0;    // Serial length or Block power
    UniPoly f;         // Block: monic irreducible, f != y

    bool operator==(const ModuleLabel& o) const;
    bool operator<(const ModuleLabel& o) const;
};

ModuleLabel label_simple(const Character& lambda);
ModuleLabel label_serial(const Character& lambda, unsigned t);
// canonicalizes lambda to its coset representative
ModuleLabel label_block(const HopfPtr& H, const Character& lambda, const UniPoly& f, unsigned r);
std::size_t label_dim(const HopfPtr& H, const ModuleLabel& label);
WeightModule label_module(const HopfPtr& H, const ModuleLabel& label);
std::string label_str(const HopfPtr& H, const ModuleLabel& label);

}  // namespace hopfore
