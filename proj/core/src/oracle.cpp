#include "hopfore/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hopfore {

namespace {

std::vector<Scalar> o_row(const Mat& m, std::size_t r) {
    std::vector<Scalar> v(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v[j] = m.at(r, j);
    return v;
}

// cyclic submodule generated by an arbitrary vector: closure under x and the
// group generators
Mat generated_submodule(const WeightModule& M, const std::vector<Scalar>& v) {
    const Field& F = *M.H->field;
    std::size_t d = M.dim();

    // a weight-homogeneous generator needs no group closure: every Krylov
    // vector x^j v is itself homogeneous
    bool homogeneous = true;
    const Character* w = nullptr;
    for (std::size_t j = 0; j < d; ++j) {
        if (F.is_zero(v[j])) continue;
        if (w == nullptr)
            w = &M.weights[j];
        else if (!(*w == M.weights[j]))
            homogeneous = false;
    }
    if (homogeneous) {
        Mat chain(d, d, F.zero());
        std::vector<Scalar> cur = v;
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j) chain.at(k, j) = cur[j];
            cur = mat_apply(F, M.X, cur);
        }
        return row_space(F, chain);
    }

    std::vector<Mat> gens;
    gens.push_back(M.X);
    for (std::size_t k = 0; k < M.H->group->ngens(); ++k) {
        Mat diag = mat_zero(F, d, d);
        std::vector<std::uint64_t> e(M.H->group->ngens(), 0);
        e[k] = 1;
        GroupElement g = group_element(M.H->group, e);
        for (std::size_t i = 0; i < d; ++i) diag.at(i, i) = char_eval(M.weights[i], g);
        gens.push_back(std::move(diag));
    }
    Mat basis(1, d, F.zero());
    for (std::size_t j = 0; j < d; ++j) basis.at(0, j) = v[j];
    basis = row_space(F, basis);
    for (;;) {
        std::vector<std::vector<Scalar>> next;
        for (std::size_t r = 0; r < basis.rows; ++r)
            for (const Mat& g : gens) next.push_back(mat_apply(F, g, o_row(basis, r)));
        Mat bigger = basis;
        for (const auto& w2 : next) {
            Mat one(1, d, F.zero());
            for (std::size_t j = 0; j < d; ++j) one.at(0, j) = w2[j];
            bigger = subspace_sum(F, bigger, one);
        }
        if (bigger.rows == basis.rows) return basis;
        basis = std::move(bigger);
    }
}

}  // namespace

SubmoduleLattice oracle_cyclic_submodules(const WeightModule& M, std::uint64_t budget,
                                          bool full_enumeration) {
    const Field& F = *M.H->field;
    if (!F.is_finite()) throw error("the oracle enumerates vectors over finite fields only");
    std::size_t d = M.dim();
    std::vector<Scalar> elems = F.all_elements();
    std::uint64_t q = F.order();

    // candidate generator vectors
    std::vector<std::vector<std::size_t>> index_sets;
    if (full_enumeration) {
        std::vector<std::size_t> all(d);
        for (std::size_t i = 0; i < d; ++i) all[i] = i;
        index_sets.push_back(std::move(all));
    } else {
        std::map<Character, std::vector<std::size_t>> by_weight;
        for (std::size_t i = 0; i < d; ++i) by_weight[M.weights[i]].push_back(i);
        for (auto& [w, idx] : by_weight) index_sets.push_back(idx);
    }
    double planned = 0;
    for (const auto& idx : index_sets) {
        double count = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) count *= static_cast<double>(q);
        planned += count;
    }
    if (planned > static_cast<double>(budget))
        throw error("oracle enumeration budget exceeded: needs about " +
                    std::to_string(static_cast<std::uint64_t>(planned)) + " vectors");

    std::set<Mat> members;
    members.insert(Mat(0, d, F.zero()));
    members.insert(row_space(F, mat_identity(F, d)));
    for (const auto& idx : index_sets) {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) total *= q;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::vector<Scalar> v(d, F.zero());
            std::uint64_t t = code;
            std::size_t lead = idx.size();
            for (std::size_t k = 0; k < idx.size(); ++k) {
                v[idx[k]] = elems[t % q];
                if (lead == idx.size() && t % q != 0) lead = k;
                t /= q;
            }
            // scalar multiples generate the same submodule: keep only the
            // representatives whose lowest nonzero coordinate is 1
            if (lead == idx.size() || !F.is_one(v[idx[lead]])) continue;
            members.insert(generated_submodule(M, v));
        }
    }

    // close under sums; every submodule is a sum of weight-cyclic ones
    const std::size_t member_cap = 20000;
    for (;;) {
        std::vector<Mat> cur(members.begin(), members.end());
        std::size_t before = members.size();
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                members.insert(subspace_sum(F, cur[i], cur[j]));
        if (members.size() > member_cap) throw error("oracle lattice is too large to close");
        if (members.size() == before) break;
    }

    SubmoduleLattice lattice;
    lattice.members.assign(members.begin(), members.end());
    std::sort(lattice.members.begin(), lattice.members.end(),
              [](const Mat& a, const Mat& b) { return a.rows != b.rows ? a.rows < b.rows : a < b; });
    for (std::size_t i = 0; i < lattice.members.size(); ++i) {
        const Mat& mi = lattice.members[i];
        if (mi.rows == 0) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < lattice.members.size(); ++j) {
            if (j == i) continue;
            const Mat& mj = lattice.members[j];
            if (mj.rows == 0 || mj.rows >= mi.rows) continue;
            if (subspace_contains(F, mi, mj)) minimal = false;
        }
        if (minimal) lattice.minimal_members.push_back(i);
    }
    for (std::size_t i = 0; i < lattice.members.size(); ++i) {
        const Mat& mi = lattice.members[i];
        if (mi.rows == d) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < lattice.members.size(); ++j) {
            if (j == i) continue;
            const Mat& mj = lattice.members[j];
            if (mj.rows == d || mj.rows <= mi.rows) continue;
            if (subspace_contains(F, mj, mi)) maximal = false;
        }
        if (maximal) lattice.maximal_members.push_back(i);
    }
    // the members are sorted by dimension: a chain needs distinct dimensions
    // and consecutive containment
    lattice.chain = true;
    for (std::size_t i = 0; i + 1 < lattice.members.size(); ++i) {
        if (lattice.members[i].rows == lattice.members[i + 1].rows ||
            !subspace_contains(F, lattice.members[i + 1], lattice.members[i])) {
            lattice.chain = false;
            break;
        }
    }
    return lattice;
}

Mat oracle_socle(const WeightModule& M, std::uint64_t budget) {
    const Field& F = *M.H->field;
    SubmoduleLattice lattice = oracle_cyclic_submodules(M, budget);
    Mat acc(0, M.dim(), F.zero());
    for (std::size_t i : lattice.minimal_members)
        acc = subspace_sum(F, acc, lattice.members[i]);
    return acc;
}

Mat oracle_radical(const WeightModule& M, std::uint64_t budget) {
    const Field& F = *M.H->field;
    SubmoduleLattice lattice = oracle_cyclic_submodules(M, budget);
    bool first = true;
    Mat acc(0, M.dim(), F.zero());
    for (std::size_t i : lattice.maximal_members) {
        if (first) {
            acc = lattice.members[i];
            first = false;
        } else {
            acc = subspace_intersect(F, acc, lattice.members[i]);
        }
    }
    if (first) return row_space(F, mat_identity(F, M.dim()));  // no proper submodule at all
    return acc;
}

namespace {

// induced structures re-coded here so the oracle path stays independent

WeightModule oracle_induced(const WeightModule& M, const Mat& rows) {
    const Field& F = *M.H->field;
    WeightModule S;
    S.H = M.H;
    for (std::size_t r = 0; r < rows.rows; ++r) {
        std::size_t lead = rows.cols;
        for (std::size_t j = 0; j < rows.cols; ++j)
            if (!F.is_zero(rows.at(r, j))) {
                lead = j;
                break;
            }
        if (lead == rows.cols) throw error("zero row in a submodule basis");
        S.weights.push_back(M.weights[lead]);
    }
    S.X = mat_zero(F, rows.rows, rows.rows);
    for (std::size_t j = 0; j < rows.rows; ++j) {
        std::vector<Scalar> img = mat_apply(F, M.X, o_row(rows, j));
        auto coords = mat_solve(F, mat_transpose(rows), img);
        if (!coords) throw error("subspace is not x-invariant");
        for (std::size_t i = 0; i < rows.rows; ++i) S.X.at(i, j) = (*coords)[i];
    }
    return S;
}

WeightModule oracle_quotient(const WeightModule& M, const Mat& rows) {
    const Field& F = *M.H->field;
    std::size_t d = M.dim();
    std::vector<bool> pivot(d, false);
    for (std::size_t r = 0; r < rows.rows; ++r)
        for (std::size_t j = 0; j < d; ++j)
            if (!F.is_zero(rows.at(r, j))) {
                pivot[j] = true;
                break;
            }
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < d; ++j)
        if (!pivot[j]) comp.push_back(j);
    auto reduce = [&](std::vector<Scalar> v) {
        for (std::size_t r = 0; r < rows.rows; ++r) {
            std::size_t piv = d;
            for (std::size_t j = 0; j < d; ++j)
                if (!F.is_zero(rows.at(r, j))) {
                    piv = j;
                    break;
                }
            Scalar c = F.div(v[piv], rows.at(r, piv));
            if (F.is_zero(c)) continue;
            for (std::size_t j = 0; j < d; ++j) v[j] = F.sub(v[j], F.mul(c, rows.at(r, j)));
        }
        std::vector<Scalar> out(comp.size());
        for (std::size_t k = 0; k < comp.size(); ++k) out[k] = v[comp[k]];
        return out;
    };
    WeightModule Q;
    Q.H = M.H;
    for (std::size_t k : comp) Q.weights.push_back(M.weights[k]);
    Q.X = mat_zero(F, comp.size(), comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
        std::vector<Scalar> e(d, F.zero());
        e[comp[k]] = F.one();
        std::vector<Scalar> img = reduce(mat_apply(F, M.X, e));
        for (std::size_t i = 0; i < comp.size(); ++i) Q.X.at(i, k) = img[i];
    }
    return Q;
}

}  // namespace

std::vector<OracleFactor> oracle_composition_series(const WeightModule& M, std::uint64_t budget) {
    std::vector<OracleFactor> out;
    WeightModule cur = M;
    while (cur.dim() > 0) {
        SubmoduleLattice lattice = oracle_cyclic_submodules(cur, budget);
        if (lattice.minimal_members.empty()) throw error("internal: no simple submodule found");
        const Mat& simple = lattice.members[lattice.minimal_members.front()];
        WeightModule s = oracle_induced(cur, simple);
        OracleFactor f;
        f.dim = s.dim();
        for (const Character& w : s.weights) ++f.weights[w];
        out.push_back(std::move(f));
        cur = oracle_quotient(cur, simple);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// all matrices commuting with the diagonal group action and with x
std::vector<Mat> oracle_end(const WeightModule& M) {
    const Field& F = *M.H->field;
    std::size_t d = M.dim();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (M.weights[i] == M.weights[j]) {
                index[{i, j}] = unknowns.size();
                unknowns.emplace_back(i, j);
            }
    std::vector<std::map<std::size_t, Scalar>> eqs;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::map<std::size_t, Scalar> row;
            for (std::size_t k = 0; k < d; ++k) {
                if (!F.is_zero(M.X.at(i, k))) {
                    auto it = index.find({k, j});
                    if (it != index.end()) {
                        auto [rit, ok] = row.try_emplace(it->second, F.zero());
                        rit->second = F.add(rit->second, M.X.at(i, k));
                    }
                }
                if (!F.is_zero(M.X.at(k, j))) {
                    auto it = index.find({i, k});
                    if (it != index.end()) {
                        auto [rit, ok] = row.try_emplace(it->second, F.zero());
                        rit->second = F.sub(rit->second, M.X.at(k, j));
                    }
                }
            }
            if (!row.empty()) eqs.push_back(std::move(row));
        }
    }
    Mat sys(eqs.size(), unknowns.size(), F.zero());
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [c, v] : eqs[r]) sys.at(r, c) = v;
    Mat ker = kernel_basis(F, sys);
    std::vector<Mat> out;
    for (std::size_t k = 0; k < ker.rows; ++k) {
        Mat e(d, d, F.zero());
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            e.at(unknowns[u].first, unknowns[u].second) = ker.at(k, u);
        out.push_back(std::move(e));
    }
    return out;
}

void oracle_split_rec(const WeightModule& B, const Mat& ambient, std::mt19937_64& rng,
                      std::uint64_t seed, OracleSplit& out) {
    const Field& F = *B.H->field;
    if (B.dim() == 0) return;
    std::vector<Mat> endos = oracle_end(B);
    if (endos.size() > 1) {
        std::vector<Scalar> elems;
        if (F.is_finite()) elems = F.all_elements();
        for (unsigned attempt = 0; attempt < 400; ++attempt) {
            Mat e = mat_zero(F, B.dim(), B.dim());
            for (const Mat& h : endos) {
                Scalar c = F.is_finite() ? elems[rng() % elems.size()]
                                         : F.from_int(static_cast<long long>(rng() % 11) - 5);
                if (!F.is_zero(c)) e = mat_add(F, e, mat_scale(F, c, h));
            }
            UniPoly mp = minimal_polynomial(F, e);
            FactorList fl = poly_factor(F, mp, seed + attempt);
            if (fl.factors.size() < 2) continue;
            for (const auto& [p, mult] : fl.factors) {
                UniPoly pr = poly_pow(F, p, mult);
                UniPoly big = poly_divmod(F, mp, pr).first;
                XgcdResult bez = poly_xgcd(F, big, pr);
                UniPoly u = poly_mod(F, bez.u, pr);
                Mat proj = mat_mul(F, mat_poly_eval(F, u, e), mat_poly_eval(F, big, e));
                Mat rows = row_space(F, mat_transpose(proj));
                WeightModule piece = oracle_induced(B, rows);
                oracle_split_rec(piece, mat_mul(F, rows, ambient), rng, seed, out);
            }
            return;
        }
    }
    out.block_dims.push_back(B.dim());
    out.blocks.push_back(ambient);
    out.actions.push_back(B.X);
}

}  // namespace

OracleSplit oracle_split(const WeightModule& M, std::uint64_t seed) {
    const Field& F = *M.H->field;
    std::mt19937_64 rng(seed ^ 0x07ac1e5eedULL);
    OracleSplit split;
    oracle_split_rec(M, row_space(F, mat_identity(F, M.dim())), rng, seed, split);
    // sort blocks by dimension for a deterministic report
    std::vector<std::size_t> order(split.block_dims.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (split.block_dims[a] != split.block_dims[b])
            return split.block_dims[a] < split.block_dims[b];
        return split.blocks[a] < split.blocks[b];
    });
    OracleSplit sorted;
    for (std::size_t i : order) {
        sorted.block_dims.push_back(split.block_dims[i]);
        sorted.blocks.push_back(split.blocks[i]);
        sorted.actions.push_back(split.actions[i]);
    }
    return sorted;
}

}  // namespace hopfore
