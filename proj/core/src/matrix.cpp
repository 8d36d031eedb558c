#include "hopfore/matrix.hpp"

#include <algorithm>

namespace hopfore {

Mat mat_zero(const Field& F, std::size_t r, std::size_t c) { return Mat(r, c, F.zero()); }

Mat mat_identity(const Field& F, std::size_t n) {
    Mat m(n, n, F.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

bool mat_is_zero(const Field& F, const Mat& m) {
    for (const auto& v : m.a)
        if (!F.is_zero(v)) return false;
    return true;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("matrix shape mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(r.a[i], y.a[i]);
    return r;
}

Mat mat_sub(const Field& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("matrix shape mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(r.a[i], y.a[i]);
    return r;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw error("matrix shape mismatch");
    Mat r(x.rows, y.cols, F.zero());
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Scalar& v = x.at(i, k);
            if (F.is_zero(v)) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    }
    return r;
}

Mat mat_scale(const Field& F, const Scalar& s, const Mat& x) {
    Mat r = x;
    for (auto& v : r.a) v = F.mul(s, v);
    return r;
}

Mat mat_pow(const Field& F, const Mat& x, std::uint64_t e) {
    if (x.rows != x.cols) throw error("matrix power needs a square matrix");
    Mat r = mat_identity(F, x.rows);
    Mat base = x;
    while (e > 0) {
        if (e & 1) r = mat_mul(F, r, base);
        base = mat_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Scalar> mat_apply(const Field& F, const Mat& x, const std::vector<Scalar>& v) {
    if (x.cols != v.size()) throw error("matrix/vector shape mismatch");
    std::vector<Scalar> r(x.rows, F.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (F.is_zero(x.at(i, j))) continue;
            r[i] = F.add(r[i], F.mul(x.at(i, j), v[j]));
        }
    return r;
}

Mat mat_transpose(const Mat& x) {
    Mat r(x.cols, x.rows, Scalar{});
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

std::vector<std::size_t> rref(const Field& F, Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && F.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = F.mul(inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || F.is_zero(m.at(i, col))) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t mat_rank(const Field& F, Mat m) { return rref(F, m).size(); }

Mat kernel_basis(const Field& F, const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> pivots = rref(F, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat out(free_cols.size(), m.cols, F.zero());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(k, fc) = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(k, pivots[i]) = F.neg(r.at(i, fc));
    }
    // rows are already in a canonical form; normalize ordering via RREF for
    // stability of comparisons
    return row_space(F, out);
}

Mat row_space(const Field& F, const Mat& m) {
    Mat r = m;
    std::size_t rank = rref(F, r).size();
    Mat out(rank, m.cols, F.zero());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = r.at(i, j);
    return out;
}

std::optional<Mat> mat_inverse(const Field& F, const Mat& m) {
    if (m.rows != m.cols) throw error("inverse needs a square matrix");
    std::size_t n = m.rows;
    Mat aug(n, 2 * n, F.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F.one();
    }
    std::vector<std::size_t> pivots = rref(F, aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n, F.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<std::vector<Scalar>> mat_solve(const Field& F, const Mat& m,
                                             const std::vector<Scalar>& b) {
    if (m.rows != b.size()) throw error("solve shape mismatch");
    Mat aug(m.rows, m.cols + 1, F.zero());
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<std::size_t> pivots = rref(F, aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(m.cols, F.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

Mat mat_poly_eval(const Field& F, const UniPoly& f, const Mat& m) {
    Mat acc = mat_zero(F, m.rows, m.cols);
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = mat_mul(F, acc, m);
        for (std::size_t d = 0; d < m.rows; ++d) acc.at(d, d) = F.add(acc.at(d, d), f.c[i]);
    }
    return acc;
}

UniPoly minimal_polynomial(const Field& F, const Mat& m) {
    if (m.rows != m.cols) throw error("minimal polynomial needs a square matrix");
    std::size_t n = m.rows;
    UniPoly mp = poly_const(F, F.one());
    Mat mp_of_m = mat_identity(F, n);
    for (std::size_t start = 0; start < n; ++start) {
        // skip vectors already annihilated by the current candidate
        std::vector<Scalar> v(n, F.zero());
        v[start] = F.one();
        std::vector<Scalar> w = mat_apply(F, mp_of_m, v);
        bool killed = true;
        for (const auto& c : w)
            if (!F.is_zero(c)) killed = false;
        if (killed) continue;

        // Krylov chain of the start vector with coefficient tracking
        Mat chain(0, n, Scalar{});
        std::vector<std::vector<Scalar>> reduced_rows;  // echelon rows
        std::vector<std::size_t> pivot_cols;
        std::vector<std::vector<Scalar>> combos;  // combo[i] over chain rows
        std::vector<Scalar> cur = v;
        UniPoly local;
        for (std::size_t step = 0;; ++step) {
            // reduce cur against the echelon, remembering the combination
            std::vector<Scalar> red = cur;
            std::vector<Scalar> combo(step + 1, F.zero());
            combo[step] = F.one();
            for (std::size_t r = 0; r < reduced_rows.size(); ++r) {
                const Scalar& lead = red[pivot_cols[r]];
                if (F.is_zero(lead)) continue;
                Scalar factor = lead;
                for (std::size_t j = 0; j < n; ++j)
                    red[j] = F.sub(red[j], F.mul(factor, reduced_rows[r][j]));
                for (std::size_t j = 0; j <= std::min(step, combos[r].size() - 1); ++j)
                    combo[j] = F.sub(combo[j], F.mul(factor, combos[r][j]));
            }
            std::size_t piv = n;
            for (std::size_t j = 0; j < n; ++j)
                if (!F.is_zero(red[j])) {
                    piv = j;
                    break;
                }
            if (piv == n) {
                // dependency found: combo gives the monic annihilator
                local.c.assign(combo.begin(), combo.end());
                poly_trim(F, local);
                local = poly_make_monic(F, local);
                break;
            }
            Scalar inv = F.inv(red[piv]);
            for (auto& c : red) c = F.mul(inv, c);
            for (auto& c : combo) c = F.mul(inv, c);
            reduced_rows.push_back(std::move(red));
            pivot_cols.push_back(piv);
            combos.push_back(std::move(combo));
            cur = mat_apply(F, m, cur);
        }
        mp = poly_lcm(F, mp, local);
        mp_of_m = mat_poly_eval(F, mp, m);
        if (mat_is_zero(F, mp_of_m)) break;
    }
    return mp;
}

Mat subspace_sum(const Field& F, const Mat& a, const Mat& b) {
    if (a.rows == 0) return row_space(F, b);
    if (b.rows == 0) return row_space(F, a);
    if (a.cols != b.cols) throw error("subspace dimension mismatch");
    Mat stacked(a.rows + b.rows, a.cols, F.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) stacked.at(a.rows + i, j) = b.at(i, j);
    return row_space(F, stacked);
}

Mat subspace_intersect(const Field& F, const Mat& a, const Mat& b) {
    // Zassenhaus: row-reduce [A A; B 0]
    if (a.rows == 0 || b.rows == 0) return Mat(0, a.cols ? a.cols : b.cols, F.zero());
    if (a.cols != b.cols) throw error("subspace dimension mismatch");
    std::size_t n = a.cols;
    Mat big(a.rows + b.rows, 2 * n, F.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            big.at(i, j) = a.at(i, j);
            big.at(i, n + j) = a.at(i, j);
        }
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) big.at(a.rows + i, j) = b.at(i, j);
    std::vector<std::size_t> pivots = rref(F, big);
    // rows whose left half is zero carry the intersection in the right half
    std::vector<std::vector<Scalar>> found;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= n) {
            std::vector<Scalar> row(n, F.zero());
            for (std::size_t j = 0; j < n; ++j) row[j] = big.at(i, n + j);
            found.push_back(std::move(row));
        }
    }
    Mat out(found.size(), n, F.zero());
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = found[i][j];
    return row_space(F, out);
}

bool subspace_contains_vec(const Field& F, const Mat& space, const std::vector<Scalar>& v) {
    // reduce v against the RREF rows
    std::vector<Scalar> red = v;
    for (std::size_t r = 0; r < space.rows; ++r) {
        std::size_t piv = space.cols;
        for (std::size_t j = 0; j < space.cols; ++j)
            if (!F.is_zero(space.at(r, j))) {
                piv = j;
                break;
            }
        if (piv == space.cols) continue;
        const Scalar& c = red[piv];
        if (F.is_zero(c)) continue;
        Scalar factor = F.div(c, space.at(r, piv));
        for (std::size_t j = 0; j < space.cols; ++j)
            red[j] = F.sub(red[j], F.mul(factor, space.at(r, j)));
    }
    for (const auto& c : red)
        if (!F.is_zero(c)) return false;
    return true;
}

bool subspace_contains(const Field& F, const Mat& space, const Mat& candidate) {
    for (std::size_t i = 0; i < candidate.rows; ++i) {
        std::vector<Scalar> v(candidate.cols);
        for (std::size_t j = 0; j < candidate.cols; ++j) v[j] = candidate.at(i, j);
        if (!subspace_contains_vec(F, space, v)) return false;
    }
    return true;
}

std::optional<std::vector<Scalar>> coordinates_in_rows(const Field& F, const Mat& basis,
                                                       const std::vector<Scalar>& v) {
    return mat_solve(F, mat_transpose(basis), v);
}

}  // namespace hopfore
