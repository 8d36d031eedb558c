#include "hopfore/analysis.hpp"

#include <algorithm>
#include <random>

namespace hopfore {

namespace {

void require_case1(const WeightModule& M) {
    if (M.H->case_tag != 1)
        throw error("weight-module analysis requires chi^{-1}(a) != 1");
}

std::vector<Scalar> row_vec(const Mat& m, std::size_t r) {
    std::vector<Scalar> v(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v[j] = m.at(r, j);
    return v;
}

Mat rows_from_vecs(const Field& F, const std::vector<std::vector<Scalar>>& vecs, std::size_t cols) {
    Mat m(vecs.size(), cols, F.zero());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = vecs[i][j];
    return m;
}

// weight of a homogeneous row = weight of any support coordinate
const Character& row_weight(const WeightModule& M, const Mat& rows, std::size_t r) {
    const Field& F = *M.H->field;
    for (std::size_t j = 0; j < rows.cols; ++j)
        if (!F.is_zero(rows.at(r, j))) return M.weights[j];
    throw error("zero row has no weight");
}

Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
    if (F.is_finite()) {
        std::vector<Scalar> elems = F.all_elements();
        return elems[rng() % elems.size()];
    }
    return F.from_int(static_cast<long long>(rng() % 11) - 5);
}

}  // namespace

std::map<Character, std::size_t> weight_spaces(const WeightModule& M) {
    std::map<Character, std::size_t> out;
    for (const Character& w : M.weights) ++out[w];
    return out;
}

WeightModule submodule_module(const WeightModule& M, const Mat& rows) {
    const Field& F = *M.H->field;
    WeightModule S;
    S.H = M.H;
    S.weights.reserve(rows.rows);
    for (std::size_t r = 0; r < rows.rows; ++r) S.weights.push_back(row_weight(M, rows, r));
    S.X = mat_zero(F, rows.rows, rows.rows);
    for (std::size_t j = 0; j < rows.rows; ++j) {
        std::vector<Scalar> img = mat_apply(F, M.X, row_vec(rows, j));
        auto coords = coordinates_in_rows(F, rows, img);
        if (!coords) throw error("subspace is not x-invariant");
        for (std::size_t i = 0; i < rows.rows; ++i) S.X.at(i, j) = (*coords)[i];
    }
    return S;
}

WeightModule quotient_module(const WeightModule& M, const Mat& rows) {
    const Field& F = *M.H->field;
    std::size_t d = M.dim();
    // pivot columns of the submodule rows; the complementary standard basis
    // vectors represent a basis of the quotient
    std::vector<bool> is_pivot(d, false);
    for (std::size_t r = 0; r < rows.rows; ++r)
        for (std::size_t j = 0; j < d; ++j)
            if (!F.is_zero(rows.at(r, j))) {
                is_pivot[j] = true;
                break;
            }
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < d; ++j)
        if (!is_pivot[j]) comp.push_back(j);

    // reduce a vector modulo the subspace, then read off the complement
    auto project = [&](std::vector<Scalar> v) {
        for (std::size_t r = 0; r < rows.rows; ++r) {
            std::size_t piv = d;
            for (std::size_t j = 0; j < d; ++j)
                if (!F.is_zero(rows.at(r, j))) {
                    piv = j;
                    break;
                }
            if (piv == d) continue;
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
    Q.weights.reserve(comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) Q.weights.push_back(M.weights[comp[k]]);
    Q.X = mat_zero(F, comp.size(), comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
        std::vector<Scalar> e(d, F.zero());
        e[comp[k]] = F.one();
        std::vector<Scalar> img = project(mat_apply(F, M.X, e));
        for (std::size_t i = 0; i < comp.size(); ++i) Q.X.at(i, k) = img[i];
    }
    return Q;
}

std::vector<PrimaryComponent> primary_decomposition(const WeightModule& M, std::uint64_t seed) {
    require_case1(M);
    const Field& F = *M.H->field;
    std::size_t d = M.dim();
    std::vector<PrimaryComponent> out;
    if (d == 0) return out;

    Mat A = mat_pow(F, M.X, M.H->chi_order);
    UniPoly mp = minimal_polynomial(F, A);
    FactorList fl = poly_factor(F, mp, seed);

    if (fl.factors.size() == 1) {
        PrimaryComponent pc;
        pc.f = fl.factors[0].first;
        pc.projector = mat_identity(F, d);
        pc.basis_rows = mat_identity(F, d);
        pc.comp = M;
        out.push_back(std::move(pc));
        return out;
    }

    for (const auto& [f, mult] : fl.factors) {
        UniPoly fr = poly_pow(F, f, mult);
        UniPoly big = poly_divmod(F, mp, fr).first;
        XgcdResult bez = poly_xgcd(F, big, fr);  // u*big + v*fr = 1
        UniPoly u = poly_mod(F, bez.u, fr);
        Mat proj = mat_mul(F, mat_poly_eval(F, u, A), mat_poly_eval(F, big, A));
        PrimaryComponent pc;
        pc.f = f;
        pc.projector = proj;
        pc.basis_rows = row_space(F, mat_transpose(proj));
        pc.comp = submodule_module(M, pc.basis_rows);
        out.push_back(std::move(pc));
    }
    return out;
}

namespace {

bool is_poly_y(const Field& F, const UniPoly& f) {
    return f.degree() == 1 && F.is_zero(f.c[0]) && F.is_one(f.c[1]);
}

// image of an operator restricted to a subspace, as ambient RREF rows
Mat operator_image(const Field& F, const Mat& op, const Mat& rows) {
    std::vector<std::vector<Scalar>> vecs;
    for (std::size_t r = 0; r < rows.rows; ++r)
        vecs.push_back(mat_apply(F, op, row_vec(rows, r)));
    return row_space(F, rows_from_vecs(F, vecs, rows.cols));
}

// kernel of an operator restricted to a subspace, as ambient RREF rows
Mat operator_kernel_in(const Field& F, const Mat& op, const Mat& rows) {
    if (rows.rows == 0) return Mat(0, rows.cols, F.zero());
    Mat sys(rows.cols, rows.rows, F.zero());
    for (std::size_t r = 0; r < rows.rows; ++r) {
        std::vector<Scalar> img = mat_apply(F, op, row_vec(rows, r));
        for (std::size_t i = 0; i < rows.cols; ++i) sys.at(i, r) = img[i];
    }
    Mat ker = kernel_basis(F, sys);
    std::vector<std::vector<Scalar>> vecs;
    for (std::size_t k = 0; k < ker.rows; ++k) {
        std::vector<Scalar> v(rows.cols, F.zero());
        for (std::size_t r = 0; r < rows.rows; ++r) {
            if (F.is_zero(ker.at(k, r))) continue;
            for (std::size_t j = 0; j < rows.cols; ++j)
                v[j] = F.add(v[j], F.mul(ker.at(k, r), rows.at(r, j)));
        }
        vecs.push_back(std::move(v));
    }
    return row_space(F, rows_from_vecs(F, vecs, rows.cols));
}

Mat component_radical_operator(const WeightModule& M, const PrimaryComponent& pc) {
    const Field& F = *M.H->field;
    if (is_poly_y(F, pc.f)) return M.X;
    Mat A = mat_pow(F, M.X, M.H->chi_order);
    return mat_poly_eval(F, pc.f, A);
}

}  // namespace

Mat radical(const WeightModule& M, std::uint64_t seed) {
    const Field& F = *M.H->field;
    Mat acc(0, M.dim(), F.zero());
    for (const PrimaryComponent& pc : primary_decomposition(M, seed)) {
        Mat op = component_radical_operator(M, pc);
        acc = subspace_sum(F, acc, operator_image(F, op, pc.basis_rows));
    }
    return acc;
}

Mat socle(const WeightModule& M, std::uint64_t seed) {
    const Field& F = *M.H->field;
    Mat acc(0, M.dim(), F.zero());
    for (const PrimaryComponent& pc : primary_decomposition(M, seed)) {
        Mat op = component_radical_operator(M, pc);
        acc = subspace_sum(F, acc, operator_kernel_in(F, op, pc.basis_rows));
    }
    return acc;
}

// ---- classification ----

namespace {

struct Summand {
    ModuleLabel label;
    Mat rows;  // basis rows in the coordinates of the original module
};

Mat lift_rows(const Field& F, const Mat& child_in_parent, const Mat& parent_in_ambient) {
    return mat_mul(F, child_in_parent, parent_in_ambient);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull + salt * 0xbf58476d1ce4e5b9ull;
    x ^= x >> 30;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

unsigned nil_index(const Field& F, const Mat& X) {
    Mat p = mat_identity(F, X.rows);
    unsigned k = 0;
    while (!mat_is_zero(F, p)) {
        p = mat_mul(F, p, X);
        ++k;
        if (k > X.rows + 1) throw error("internal: operator is not nilpotent");
    }
    return k == 0 ? 1 : k;
}

// search for a cyclic weight vector of the given weight whose Krylov span
// fills the module; on success returns the ladder basis rows (in B coords)
std::optional<Mat> cyclic_ladder(const WeightModule& B, const Character& weight,
                                 std::mt19937_64& rng) {
    const Field& F = *B.H->field;
    std::size_t d = B.dim();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
        if (B.weights[i] == weight) idx.push_back(i);
    if (idx.empty()) return std::nullopt;

    auto try_vector = [&](const std::vector<Scalar>& v) -> std::optional<Mat> {
        std::vector<std::vector<Scalar>> chain;
        std::vector<Scalar> cur = v;
        for (std::size_t k = 0; k < d; ++k) {
            chain.push_back(cur);
            cur = mat_apply(F, B.X, cur);
        }
        Mat rows = rows_from_vecs(F, chain, d);
        if (mat_rank(F, rows) != d) return std::nullopt;
        return rows;
    };

    // seeded random schedule first (generating vectors are dense), with an
    // exhaustive sweep as the fallback on tiny weight spaces
    for (unsigned attempt = 0; attempt < 256; ++attempt) {
        std::vector<Scalar> v(d, F.zero());
        for (std::size_t k : idx) v[k] = random_scalar(F, rng);
        if (auto rows = try_vector(v)) return rows;
    }
    if (F.is_finite()) {
        double count = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) count *= static_cast<double>(F.order());
        if (count <= 200000) {
            std::uint64_t total = static_cast<std::uint64_t>(count);
            std::vector<Scalar> elems = F.all_elements();
            for (std::uint64_t code = 1; code < total; ++code) {
                std::vector<Scalar> v(d, F.zero());
                std::uint64_t t = code;
                for (std::size_t k = 0; k < idx.size(); ++k) {
                    v[idx[k]] = elems[t % F.order()];
                    t /= F.order();
                }
                if (auto rows = try_vector(v)) return rows;
            }
        }
    }
    return std::nullopt;
}

void split_component(const WeightModule& B, const Mat& ambient_rows, const UniPoly& f,
                     std::uint64_t seed, std::vector<Summand>& out);

// B is a (coset, f)-homogeneous piece; try the candidate indecomposable
// label, else split along a random endomorphism and recurse
void classify_piece(const WeightModule& B, const Mat& ambient_rows, const UniPoly& f,
                    std::uint64_t seed, std::vector<Summand>& out) {
    const Field& F = *B.H->field;
    std::size_t d = B.dim();
    if (d == 0) return;
    std::mt19937_64 rng(mix_seed(seed, 0xc1a551f1));

    bool f_is_y = is_poly_y(F, f);
    ModuleLabel candidate;
    std::size_t expected_dim = 0;
    if (f_is_y) {
        unsigned t = nil_index(F, B.X);
        expected_dim = t;
        if (expected_dim == d) {
            // socle weight pulled back through the ladder
            Mat soc = operator_kernel_in(F, B.X, mat_identity(F, d));
            if (soc.rows == 1) {
                Character socle_weight = row_weight(B, soc, 0);
                Character lambda =
                    char_mul(socle_weight, char_pow(B.H->chi, -(static_cast<long long>(t) - 1)));
                candidate = label_serial(lambda, t);
            } else {
                expected_dim = 0;  // more than one socle line: decomposable
            }
        }
    } else {
        Mat A = mat_pow(F, B.X, B.H->chi_order);
        UniPoly mp = minimal_polynomial(F, A);
        unsigned r = 0;
        UniPoly rest = mp;
        while (rest.degree() > 0) {
            auto [q, rem] = poly_divmod(F, rest, f);
            if (!rem.is_zero()) throw error("internal: component is not f-primary");
            rest = q;
            ++r;
        }
        expected_dim = static_cast<std::size_t>(f.degree()) * r * B.H->chi_order;
        if (expected_dim == d) candidate = label_block(B.H, B.weights[0], f, r);
    }

    if (expected_dim == d) {
        if (auto ladder = cyclic_ladder(B, candidate.lambda, rng)) {
            out.push_back({candidate, lift_rows(F, *ladder, ambient_rows)});
            return;
        }
        throw error("internal: candidate isomorphism test failed on a component of dim " +
                    std::to_string(d));
    }
    split_component(B, ambient_rows, f, seed, out);
}

void split_component(const WeightModule& B, const Mat& ambient_rows, const UniPoly& f,
                     std::uint64_t seed, std::vector<Summand>& out) {
    const Field& F = *B.H->field;
    std::vector<Mat> endos = hom_space(B, B);
    std::mt19937_64 rng(mix_seed(seed, 0x5eedb10c));
    for (unsigned attempt = 0; attempt < 400; ++attempt) {
        Mat e = mat_zero(F, B.dim(), B.dim());
        for (const Mat& h : endos) {
            Scalar c = random_scalar(F, rng);
            if (!F.is_zero(c)) e = mat_add(F, e, mat_scale(F, c, h));
        }
        UniPoly mp = minimal_polynomial(F, e);
        FactorList fl = poly_factor(F, mp, mix_seed(seed, attempt));
        if (fl.factors.size() < 2) continue;
        for (const auto& [p, mult] : fl.factors) {
            UniPoly pr = poly_pow(F, p, mult);
            UniPoly big = poly_divmod(F, mp, pr).first;
            XgcdResult bez = poly_xgcd(F, big, pr);
            UniPoly u = poly_mod(F, bez.u, pr);
            Mat proj = mat_mul(F, mat_poly_eval(F, u, e), mat_poly_eval(F, big, e));
            Mat piece_rows = row_space(F, mat_transpose(proj));
            if (piece_rows.rows == 0 || piece_rows.rows == B.dim())
                throw error("internal: degenerate endomorphism split");
            WeightModule piece = submodule_module(B, piece_rows);
            classify_piece(piece, lift_rows(F, piece_rows, ambient_rows), f,
                           mix_seed(seed, mult), out);
        }
        return;
    }
    throw error("internal: failed to split a decomposable component");
}

}  // namespace

std::size_t DecompositionReport::total_dim(const HopfPtr& H) const {
    std::size_t d = 0;
    for (const auto& [label, mult] : parts) d += label_dim(H, label) * mult;
    return d;
}

bool DecompositionReport::same_labels(const DecompositionReport& o) const {
    return parts == o.parts;
}

DecompositionReport classify(const WeightModule& M, std::uint64_t seed) {
    require_case1(M);
    const Field& F = *M.H->field;
    DecompositionReport report;
    report.provenance = "idempotent-split";
    if (M.dim() == 0) return report;

    std::vector<Summand> summands;

    if (mat_is_zero(F, M.X)) {
        // semisimple with one-dimensional pieces: read off the weights
        for (std::size_t i = 0; i < M.dim(); ++i) {
            Mat rows(1, M.dim(), F.zero());
            rows.at(0, i) = F.one();
            summands.push_back({label_simple(M.weights[i]), rows});
        }
    } else {
        // split by coset of the weights, then by primary component
        std::map<Character, std::vector<std::size_t>> cosets;
        for (std::size_t i = 0; i < M.dim(); ++i)
            cosets[coset_representative(M.weights[i], M.H->chi)].push_back(i);
        std::uint64_t salt = 0;
        for (const auto& [rep, idx] : cosets) {
            Mat rows(idx.size(), M.dim(), F.zero());
            for (std::size_t k = 0; k < idx.size(); ++k) rows.at(k, idx[k]) = F.one();
            WeightModule piece = submodule_module(M, rows);
            for (const PrimaryComponent& pc : primary_decomposition(piece, seed)) {
                Mat pc_ambient = lift_rows(F, pc.basis_rows, rows);
                classify_piece(pc.comp, pc_ambient, pc.f, mix_seed(seed, ++salt), summands);
            }
        }
    }

    std::sort(summands.begin(), summands.end(),
              [](const Summand& a, const Summand& b) { return a.label < b.label; });
    Mat witness_cols(M.dim(), M.dim(), F.zero());
    std::size_t col = 0;
    for (const Summand& s : summands) {
        for (std::size_t r = 0; r < s.rows.rows; ++r) {
            for (std::size_t i = 0; i < M.dim(); ++i) witness_cols.at(i, col) = s.rows.at(r, i);
            ++col;
        }
        if (!report.parts.empty() && report.parts.back().first == s.label)
            ++report.parts.back().second;
        else
            report.parts.emplace_back(s.label, 1);
    }
    if (col == M.dim()) report.witness = std::move(witness_cols);
    return report;
}

SeriesReport series(const WeightModule& M, std::uint64_t seed) {
    require_case1(M);
    SeriesReport report;
    WeightModule cur = M;
    report.radical_dims.push_back(cur.dim());
    while (cur.dim() > 0) {
        Mat rad = radical(cur, seed);
        WeightModule layer = quotient_module(cur, rad);
        report.radical_layers.push_back(classify(layer, seed).parts);
        cur = submodule_module(cur, rad);
        report.radical_dims.push_back(cur.dim());
        ++report.radical_length;
    }
    WeightModule up = M;
    report.socle_dims.push_back(0);
    std::size_t consumed = 0, guard = 0;
    while (up.dim() > 0) {
        Mat soc = socle(up, seed);
        consumed += soc.rows;
        report.socle_dims.push_back(consumed);
        up = quotient_module(up, soc);
        if (++guard > M.dim() + 1) throw error("internal: socle series does not terminate");
    }
    if (report.socle_dims.size() != report.radical_dims.size())
        throw error("internal: radical and socle lengths disagree");
    return report;
}

bool is_simple(const WeightModule& M) {
    require_case1(M);
    const Field& F = *M.H->field;
    if (M.dim() == 0) return false;
    if (M.dim() == 1) return true;  // x acts by zero automatically
    Mat A = mat_pow(F, M.X, M.H->chi_order);
    UniPoly mp = minimal_polynomial(F, A);
    if (is_poly_y(F, mp) || !poly_is_irreducible(F, mp)) return false;
    return M.dim() == static_cast<std::size_t>(mp.degree()) * M.H->chi_order;
}

bool is_indecomposable(const WeightModule& M, std::uint64_t seed) {
    DecompositionReport r = classify(M, seed);
    return r.parts.size() == 1 && r.parts[0].second == 1;
}

std::optional<DecompositionReport> predicted_tensor(const HopfPtr& H, const ModuleLabel& A,
                                                    const ModuleLabel& B) {
    const Field& F = *H->field;
    auto is_linear_block = [&](const ModuleLabel& L) {
        return L.kind == ModuleLabel::Kind::Block && L.f.degree() == 1 && L.t == 1;
    };
    DecompositionReport report;
    report.provenance = "paper-formula";

    if (A.kind == ModuleLabel::Kind::Simple1 && B.kind == ModuleLabel::Kind::Simple1) {
        report.parts.emplace_back(label_simple(char_mul(A.lambda, B.lambda)), 1);
        return report;
    }
    long long s = static_cast<long long>(H->chi_order);
    if (A.kind == ModuleLabel::Kind::Simple1 && is_linear_block(B)) {
        Scalar b = F.neg(B.f.c[0]);
        report.parts.emplace_back(
            label_block(H, char_mul(A.lambda, B.lambda), poly_linear(F, b), 1), 1);
        return report;
    }
    if (is_linear_block(A) && B.kind == ModuleLabel::Kind::Simple1) {
        Scalar a = F.neg(A.f.c[0]);
        Scalar las = F.pow(char_eval(B.lambda, H->a), s);
        report.parts.emplace_back(
            label_block(H, char_mul(A.lambda, B.lambda), poly_linear(F, F.mul(a, las)), 1), 1);
        return report;
    }
    if (is_linear_block(A) && is_linear_block(B)) {
        if (H->q_order != H->chi_order) return std::nullopt;
        Scalar a = F.neg(A.f.c[0]);
        Scalar b = F.neg(B.f.c[0]);
        Scalar las = F.pow(char_eval(B.lambda, H->a), s);
        Scalar c = F.add(F.mul(a, las), b);
        Character prod = char_mul(A.lambda, B.lambda);
        if (F.is_zero(c)) {
            // one serial module per character in the coset
            Character w = prod;
            std::vector<ModuleLabel> labels;
            for (long long t = 0; t < s; ++t) {
                labels.push_back(label_serial(w, static_cast<unsigned>(s)));
                w = char_mul(w, H->chi);
            }
            std::sort(labels.begin(), labels.end());
            for (const auto& l : labels) report.parts.emplace_back(l, 1);
        } else {
            report.parts.emplace_back(label_block(H, prod, poly_linear(F, c), 1),
                                      static_cast<unsigned>(s));
        }
        return report;
    }
    return std::nullopt;
}

std::vector<Mat> hom_space(const WeightModule& M, const WeightModule& N) {
    if (M.H != N.H) throw error("hom space needs a common presentation");
    const Field& F = *M.H->field;
    std::size_t dm = M.dim(), dn = N.dim();

    // unknowns: entries (i, j) with equal weights
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown_index;
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dm; ++j)
            if (N.weights[i] == M.weights[j]) {
                unknown_index[{i, j}] = unknowns.size();
                unknowns.emplace_back(i, j);
            }

    // intertwining equations (Phi X_M - X_N Phi)[i][j] = 0 on reachable blocks
    std::vector<std::map<std::size_t, Scalar>> eq_rows;
    for (std::size_t i = 0; i < dn; ++i) {
        for (std::size_t j = 0; j < dm; ++j) {
            if (!(N.weights[i] == char_mul(M.H->chi, M.weights[j]))) continue;
            std::map<std::size_t, Scalar> row;
            for (std::size_t k = 0; k < dm; ++k) {
                if (F.is_zero(M.X.at(k, j))) continue;
                auto it = unknown_index.find({i, k});
                if (it == unknown_index.end()) continue;
                auto [rit, ok] = row.try_emplace(it->second, F.zero());
                rit->second = F.add(rit->second, M.X.at(k, j));
            }
            for (std::size_t k = 0; k < dn; ++k) {
                if (F.is_zero(N.X.at(i, k))) continue;
                auto it = unknown_index.find({k, j});
                if (it == unknown_index.end()) continue;
                auto [rit, ok] = row.try_emplace(it->second, F.zero());
                rit->second = F.sub(rit->second, N.X.at(i, k));
            }
            if (!row.empty()) eq_rows.push_back(std::move(row));
        }
    }

    Mat sys(eq_rows.size(), unknowns.size(), F.zero());
    for (std::size_t r = 0; r < eq_rows.size(); ++r)
        for (const auto& [c, v] : eq_rows[r]) sys.at(r, c) = v;
    Mat ker = kernel_basis(F, sys);

    std::vector<Mat> out;
    for (std::size_t k = 0; k < ker.rows; ++k) {
        Mat phi(dn, dm, F.zero());
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            phi.at(unknowns[u].first, unknowns[u].second) = ker.at(k, u);
        out.push_back(std::move(phi));
    }
    return out;
}

bool is_split_epi(const WeightModule& M, const WeightModule& N, const Mat& map) {
    const Field& F = *M.H->field;
    std::size_t dn = N.dim();
    if (mat_rank(F, map) != dn) return false;  // not epi
    std::vector<Mat> homs = hom_space(N, M);
    if (homs.empty()) return false;
    // solve sum c_k map*homs[k] = id_N
    Mat sys(dn * dn, homs.size(), F.zero());
    std::vector<Scalar> rhs(dn * dn, F.zero());
    for (std::size_t k = 0; k < homs.size(); ++k) {
        Mat prod = mat_mul(F, map, homs[k]);
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dn; ++j) sys.at(i * dn + j, k) = prod.at(i, j);
    }
    for (std::size_t i = 0; i < dn; ++i) rhs[i * dn + i] = F.one();
    return mat_solve(F, sys, rhs).has_value();
}

SimplesCensus list_simples(const HopfPtr& H) {
    const Field& F = *H->field;
    SimplesCensus census;
    std::vector<Character> chars = enumerate_characters(H->group, H->field);
    census.character_count = chars.size();
    std::vector<Character> reps;
    for (const Character& c : chars) {
        Character rep = coset_representative(c, H->chi);
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    census.coset_count = reps.size();

    switch (H->quotient.kind) {
        case QuotientSpec::Kind::None:
            for (const Character& c : chars) census.simples.push_back(label_simple(c));
            census.block_family = true;  // V(sigma, f) over monic irreducibles f != y
            break;
        case QuotientSpec::Kind::PowerZero:
            for (const Character& c : chars) census.simples.push_back(label_simple(c));
            break;
        case QuotientSpec::Kind::PowerCentral: {
            unsigned n = H->quotient.n;
            for (const Character& c : chars) {
                Scalar can = F.pow(char_eval(c, H->a), static_cast<long long>(n));
                if (F.is_one(can)) census.simples.push_back(label_simple(c));
            }
            for (const Character& rep : reps) {
                Scalar san = F.pow(char_eval(rep, H->a), static_cast<long long>(n));
                if (!F.is_one(san)) {
                    Scalar c = F.mul(H->quotient.beta, F.sub(F.one(), san));
                    census.simples.push_back(label_block(H, rep, poly_linear(F, c), 1));
                }
            }
            break;
        }
    }
    std::sort(census.simples.begin(), census.simples.end());
    return census;
}

std::vector<ProjectiveEntry> projectives_report(const HopfPtr& H) {
    if (H->quotient.kind == QuotientSpec::Kind::None)
        throw error("the projective-cover table needs a quotient algebra");
    unsigned n = H->quotient.n;
    std::vector<ProjectiveEntry> out;
    for (const ModuleLabel& simple : list_simples(H).simples) {
        ProjectiveEntry e;
        e.simple = simple;
        if (simple.kind == ModuleLabel::Kind::Simple1)
            e.cover = label_serial(simple.lambda, n);
        else
            e.cover = simple;  // the big simples are their own covers
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hopfore
