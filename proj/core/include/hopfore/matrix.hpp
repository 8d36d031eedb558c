// Exact dense linear algebra over a Field: reduced echelon forms, kernels,
// solving, inverses, and operator minimal polynomials. Subspaces are carried
// as canonical RREF row matrices so equal subspaces compare equal.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfore/field.hpp"
#include "hopfore/poly.hpp"

namespace hopfore {

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const Scalar& fill) : rows(r), cols(c), a(r * c, fill) {}

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator<(const Mat& o) const {
        if (rows != o.rows) return rows < o.rows;
        if (cols != o.cols) return cols < o.cols;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != o.a[i]) return a[i] < o.a[i];
        return false;
    }
};

Mat mat_zero(const Field& F, std::size_t r, std::size_t c);
Mat mat_identity(const Field& F, std::size_t n);
bool mat_is_zero(const Field& F, const Mat& m);

Mat mat_add(const Field& F, const Mat& x, const Mat& y);
Mat mat_sub(const Field& F, const Mat& x, const Mat& y);
Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_scale(const Field& F, const Scalar& s, const Mat& x);
Mat mat_pow(const Field& F, const Mat& x, std::uint64_t e);
std::vector<Scalar> mat_apply(const Field& F, const Mat& x, const std::vector<Scalar>& v);
Mat mat_transpose(const Mat& x);

// in-place reduced row echelon form; returns pivot column indices
std::vector<std::size_t> rref(const Field& F, Mat& m);
std::size_t mat_rank(const Field& F, Mat m);

// rows span the null space of m (canonical RREF rows)
Mat kernel_basis(const Field& F, const Mat& m);
// canonical basis of the row space
Mat row_space(const Field& F, const Mat& m);

std::optional<Mat> mat_inverse(const Field& F, const Mat& m);
// one solution of m x = b, if any
std::optional<std::vector<Scalar>> mat_solve(const Field& F, const Mat& m,
                                             const std::vector<Scalar>& b);

// f(m)
Mat mat_poly_eval(const Field& F, const UniPoly& f, const Mat& m);
// monic generator of the annihilator ideal of the operator
UniPoly minimal_polynomial(const Field& F, const Mat& m);

// ---- subspaces as canonical RREF row bases ----

Mat subspace_sum(const Field& F, const Mat& a, const Mat& b);
Mat subspace_intersect(const Field& F, const Mat& a, const Mat& b);
bool subspace_contains(const Field& F, const Mat& space, const Mat& candidate);
bool subspace_contains_vec(const Field& F, const Mat& space, const std::vector<Scalar>& v);
// coordinates of v in the rows of basis (basis rows independent), if v lies
// in their span
std::optional<std::vector<Scalar>> coordinates_in_rows(const Field& F, const Mat& basis,
                                                       const std::vector<Scalar>& v);

}  // namespace hopfore
