// Independent brute-force verifiers: exhaustive submodule enumeration,
// composition series, and a label-free decomposition splitter. These share
// only the scalar/matrix/group primitives with the analysis path, so
// agreement between the two is evidence rather than tautology.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopfore/module.hpp"

namespace hopfore {

struct SubmoduleLattice {
    std::vector<Mat> members;  // canonical RREF bases, sorted; includes 0 and M
    std::vector<std::size_t> minimal_members;  // minimal nonzero members (simple submodules)
    std::vector<std::size_t> maximal_members;  // maximal proper members
    bool chain = false;  // totally ordered by inclusion

    bool is_chain() const { return chain; }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 500000;

// Enumerates the cyclic submodules generated by weight-homogeneous vectors
// (or by every vector with full_enumeration) and closes the set under sums.
// Every submodule of a weight module is a sum of weight-cyclic submodules, so
// the closure is the complete lattice.
SubmoduleLattice oracle_cyclic_submodules(const WeightModule& M,
                                          std::uint64_t budget = kDefaultOracleBudget,
                                          bool full_enumeration = false);

Mat oracle_socle(const WeightModule& M, std::uint64_t budget = kDefaultOracleBudget);
Mat oracle_radical(const WeightModule& M, std::uint64_t budget = kDefaultOracleBudget);

struct OracleFactor {
    std::size_t dim = 0;
    std::map<Character, std::size_t> weights;

    bool operator==(const OracleFactor& o) const { return dim == o.dim && weights == o.weights; }
    bool operator<(const OracleFactor& o) const {
        return dim != o.dim ? dim < o.dim : weights < o.weights;
    }
};

// Jordan-Holder factors obtained by repeatedly splitting off a simple
// submodule; factors are label-free (dimension plus weight multiset).
std::vector<OracleFactor> oracle_composition_series(const WeightModule& M,
                                                    std::uint64_t budget = kDefaultOracleBudget);

struct OracleSplit {
    std::vector<std::size_t> block_dims;  // sorted ascending
    std::vector<Mat> blocks;              // bases of the summands, ambient rows
    std::vector<Mat> actions;             // induced x-action of each summand
};

// Complete decomposition into indecomposable summands by randomized
// endomorphism splitting, independently coded and label-free.
OracleSplit oracle_split(const WeightModule& M, std::uint64_t seed = 0);

}  // namespace hopfore
