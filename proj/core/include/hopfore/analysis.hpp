// Decomposition and classification of weight modules: weight spaces, primary
// decomposition along the central operator x^s, radical/socle series,
// simplicity and indecomposability tests, classification into serial and
// block labels, closed-form tensor predictions, homomorphism spaces, and the
// projective-cover table.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfore/module.hpp"

namespace hopfore {

std::map<Character, std::size_t> weight_spaces(const WeightModule& M);

// Induced module structure on a weight-graded invariant subspace given by
// canonical RREF basis rows (rows of a graded subspace are automatically
// weight-homogeneous).
WeightModule submodule_module(const WeightModule& M, const Mat& rows);
WeightModule quotient_module(const WeightModule& M, const Mat& rows);

struct PrimaryComponent {
    UniPoly f;      // monic irreducible
    Mat projector;  // idempotent commuting with the action
    Mat basis_rows; // RREF rows spanning the component
    WeightModule comp;
};

// Splits M along the generalized eigenspaces of x^s using the Bezout
// projectors of the minimal polynomial's standard decomposition.
std::vector<PrimaryComponent> primary_decomposition(const WeightModule& M,
                                                    std::uint64_t seed = 0);

// radical and socle through the component formulas: the x image/kernel on
// components with composition factors killed by x, f(x^s) image/kernel on the
// rest; both returned as RREF rows
Mat radical(const WeightModule& M, std::uint64_t seed = 0);
Mat socle(const WeightModule& M, std::uint64_t seed = 0);

struct DecompositionReport {
    std::vector<std::pair<ModuleLabel, unsigned>> parts;  // sorted, multiplicity >= 1
    std::optional<Mat> witness;  // columns are a new basis grouping the summands
    std::string provenance;      // "paper-formula", "idempotent-split", or "oracle"

    std::size_t total_dim(const HopfPtr& H) const;
    bool same_labels(const DecompositionReport& o) const;
};

DecompositionReport classify(const WeightModule& M, std::uint64_t seed = 0);

struct SeriesReport {
    std::vector<std::size_t> radical_dims;  // dim M, dim rad M, ..., 0
    std::vector<std::size_t> socle_dims;    // 0, dim soc M, ..., dim M
    std::vector<std::vector<std::pair<ModuleLabel, unsigned>>> radical_layers;
    std::size_t radical_length = 0;
};

SeriesReport series(const WeightModule& M, std::uint64_t seed = 0);

bool is_simple(const WeightModule& M);
bool is_indecomposable(const WeightModule& M, std::uint64_t seed = 0);

// Closed-form decomposition of a tensor product of two simple labels, when
// the closed forms apply (one-dimensional times anything, or two linear
// blocks when chi^{-1}(a) generates the full character order); nullopt means
// the caller should classify the constructed tensor product instead.
std::optional<DecompositionReport> predicted_tensor(const HopfPtr& H, const ModuleLabel& A,
                                                    const ModuleLabel& B);

// basis of module homomorphisms M -> N as dim N x dim M matrices
std::vector<Mat> hom_space(const WeightModule& M, const WeightModule& N);
bool is_split_epi(const WeightModule& M, const WeightModule& N, const Mat& map);

struct SimplesCensus {
    std::vector<ModuleLabel> simples;   // enumerable simple labels
    std::size_t character_count = 0;    // realizable characters
    std::size_t coset_count = 0;
    // no quotient: the block simples form a family over monic irreducibles
    bool block_family = false;
};
SimplesCensus list_simples(const HopfPtr& H);

struct ProjectiveEntry {
    ModuleLabel simple;
    ModuleLabel cover;
};
std::vector<ProjectiveEntry> projectives_report(const HopfPtr& H);

}  // namespace hopfore
