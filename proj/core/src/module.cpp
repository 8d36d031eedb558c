#include "hopfore/module.hpp"

#include <algorithm>
#include <random>

namespace hopfore {

WeightModule make_simple_onedim(const HopfPtr& H, const Character& lambda) {
    WeightModule M;
    M.H = H;
    M.weights = {lambda};
    M.X = mat_zero(*H->field, 1, 1);
    return M;
}

WeightModule make_serial(const HopfPtr& H, const Character& lambda, unsigned t) {
    if (t < 1) throw error("serial module length must be >= 1");
    const Field& F = *H->field;
    if (H->quotient.kind != QuotientSpec::Kind::None) {
        unsigned n = H->quotient.n;
        if (t > n)
            throw error("serial module of length " + std::to_string(t) +
                        " does not exist over the quotient: t <= n = " + std::to_string(n) +
                        " is required");
        if (H->quotient.kind == QuotientSpec::Kind::PowerCentral) {
            Scalar la_n = F.pow(char_eval(lambda, H->a), static_cast<long long>(n));
            if (!F.is_one(la_n))
                throw error(
                    "serial module over the central power ideal requires lambda(a)^n = 1");
        }
    }
    WeightModule M;
    M.H = H;
    M.weights.reserve(t);
    Character w = lambda;
    for (unsigned i = 0; i < t; ++i) {
        M.weights.push_back(w);
        w = char_mul(w, H->chi);
    }
    M.X = mat_zero(F, t, t);
    for (unsigned i = 0; i + 1 < t; ++i) M.X.at(i + 1, i) = F.one();
    return M;
}

WeightModule make_block(const HopfPtr& H, const Character& lambda, const UniPoly& f, unsigned r) {
    const Field& F = *H->field;
    if (r < 1) throw error("block power must be >= 1");
    if (!poly_is_monic(F, f) || f.degree() < 1)
        throw error("block polynomial must be monic of degree >= 1");
    std::uint64_t s = H->chi_order;
    UniPoly fr = poly_pow(F, f, r);
    std::size_t n = static_cast<std::size_t>(fr.degree());
    std::size_t d = n * s;
    WeightModule M;
    M.H = H;
    M.weights.reserve(d);
    Character w = lambda;
    for (std::size_t i = 0; i < d; ++i) {
        M.weights.push_back(w);
        w = char_mul(w, H->chi);
    }
    M.X = mat_zero(F, d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) M.X.at(i + 1, i) = F.one();
    // x . m_{ns-1} = sum_j alpha_j m_{js} with f^r = y^n - sum alpha_j y^j
    for (std::size_t j = 0; j < n; ++j) {
        Scalar aj = F.neg(fr.c[j]);
        if (!F.is_zero(aj)) M.X.at(j * s, d - 1) = aj;
    }
    if (H->quotient.kind != QuotientSpec::Kind::None) {
        ModuleCheckReport check = verify_module(M);
        if (!check.ok())
            throw error("block module violates the quotient relation: " + check.violations[0]);
    }
    return M;
}

WeightModule make_verma_quotient(const HopfPtr& H, const Character& lambda) {
    const Field& F = *H->field;
    if (H->quotient.kind == QuotientSpec::Kind::None)
        throw error("the untruncated Verma module is infinite dimensional");
    unsigned n = H->quotient.n;
    if (H->quotient.kind == QuotientSpec::Kind::PowerZero) return make_serial(H, lambda, n);
    Scalar la_n = F.pow(char_eval(lambda, H->a), static_cast<long long>(n));
    if (F.is_one(la_n)) return make_serial(H, lambda, n);
    Scalar c = F.mul(H->quotient.beta, F.sub(F.one(), la_n));
    return make_block(H, lambda, poly_linear(F, c), 1);
}

WeightModule mod_tensor(const WeightModule& M, const WeightModule& N) {
    if (M.H != N.H) throw error("tensor product needs a common presentation");
    const Field& F = *M.H->field;
    std::size_t dm = M.dim(), dn = N.dim();
    WeightModule T;
    T.H = M.H;
    T.weights.reserve(dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) T.weights.push_back(char_mul(M.weights[i], N.weights[j]));
    // x acts by X_M (x) rho_N(a) + 1 (x) X_N
    T.X = mat_zero(F, dm * dn, dm * dn);
    for (std::size_t k = 0; k < dm; ++k) {
        for (std::size_t l = 0; l < dn; ++l) {
            std::size_t col = k * dn + l;
            Scalar na = char_eval(N.weights[l], M.H->a);
            for (std::size_t i = 0; i < dm; ++i) {
                const Scalar& x = M.X.at(i, k);
                if (!F.is_zero(x)) T.X.at(i * dn + l, col) = F.add(T.X.at(i * dn + l, col), F.mul(x, na));
            }
            for (std::size_t j = 0; j < dn; ++j) {
                const Scalar& x = N.X.at(j, l);
                if (!F.is_zero(x)) T.X.at(k * dn + j, col) = F.add(T.X.at(k * dn + j, col), x);
            }
        }
    }
    return T;
}

WeightModule mod_direct_sum(const WeightModule& M, const WeightModule& N) {
    if (M.H != N.H) throw error("direct sum needs a common presentation");
    const Field& F = *M.H->field;
    WeightModule S;
    S.H = M.H;
    S.weights = M.weights;
    S.weights.insert(S.weights.end(), N.weights.begin(), N.weights.end());
    S.X = mat_zero(F, S.weights.size(), S.weights.size());
    for (std::size_t i = 0; i < M.dim(); ++i)
        for (std::size_t j = 0; j < M.dim(); ++j) S.X.at(i, j) = M.X.at(i, j);
    for (std::size_t i = 0; i < N.dim(); ++i)
        for (std::size_t j = 0; j < N.dim(); ++j) S.X.at(M.dim() + i, M.dim() + j) = N.X.at(i, j);
    return S;
}

WeightModule mod_scramble(const WeightModule& M, std::uint64_t seed) {
    const Field& F = *M.H->field;
    std::mt19937_64 rng(seed ^ 0xa5c152f7d3u);
    std::size_t d = M.dim();

    // group basis indices by weight
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Character> seen;
    for (std::size_t i = 0; i < d; ++i) {
        auto it = std::find(seen.begin(), seen.end(), M.weights[i]);
        if (it == seen.end()) {
            seen.push_back(M.weights[i]);
            blocks.push_back({i});
        } else {
            blocks[static_cast<std::size_t>(it - seen.begin())].push_back(i);
        }
    }

    auto random_scalar = [&]() {
        if (F.is_finite()) {
            std::vector<Scalar> elems = F.all_elements();
            return elems[rng() % elems.size()];
        }
        return F.from_int(static_cast<long long>(rng() % 7) - 3);
    };

    Mat P = mat_zero(F, d, d);
    for (const auto& block : blocks) {
        std::size_t k = block.size();
        Mat B(k, k, F.zero());
        for (;;) {
            for (auto& v : B.a) v = random_scalar();
            if (mat_rank(F, B) == k) break;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) P.at(block[i], block[j]) = B.at(i, j);
    }
    Mat Pinv = *mat_inverse(F, P);
    WeightModule S;
    S.H = M.H;
    S.weights = M.weights;
    S.X = mat_mul(F, P, mat_mul(F, M.X, Pinv));
    return S;
}

Mat group_action(const WeightModule& M, const GroupElement& g) {
    const Field& F = *M.H->field;
    Mat m = mat_zero(F, M.dim(), M.dim());
    for (std::size_t i = 0; i < M.dim(); ++i) m.at(i, i) = char_eval(M.weights[i], g);
    return m;
}

ModuleCheckReport verify_module(const WeightModule& M) {
    ModuleCheckReport report;
    const Field& F = *M.H->field;
    std::size_t d = M.dim();
    // x maps the weight-w space into the weight-(chi w) space
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (F.is_zero(M.X.at(i, j))) continue;
            if (M.weights[i] != char_mul(M.H->chi, M.weights[j]))
                report.violations.push_back("x-action entry (" + std::to_string(i) + "," +
                                            std::to_string(j) +
                                            ") leaves the weight-compatible block");
        }
    }
    // generator order relations on the weights
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < M.H->group->ngens(); ++k) {
            Scalar im = M.weights[i].images[k];
            if (!F.is_one(F.pow(im, static_cast<long long>(M.H->group->factors[k]))))
                report.violations.push_back("weight " + std::to_string(i) +
                                            " violates the order relation of generator " +
                                            std::to_string(k));
        }
    }
    // quotient relation
    if (M.H->quotient.kind != QuotientSpec::Kind::None) {
        unsigned n = M.H->quotient.n;
        Mat xn = mat_pow(F, M.X, n);
        Mat expect = mat_zero(F, d, d);
        if (M.H->quotient.kind == QuotientSpec::Kind::PowerCentral) {
            for (std::size_t i = 0; i < d; ++i) {
                Scalar wa = F.pow(char_eval(M.weights[i], M.H->a), static_cast<long long>(n));
                expect.at(i, i) = F.mul(M.H->quotient.beta, F.sub(F.one(), wa));
            }
        }
        if (!(xn == expect))
            report.violations.push_back(
                M.H->quotient.kind == QuotientSpec::Kind::PowerZero
                    ? "x^n does not vanish on the module"
                    : "x^n does not equal beta (1 - rho(a)^n) on the module");
    }
    return report;
}

bool ModuleLabel::operator==(const ModuleLabel& o) const {
    return kind == o.kind && lambda == o.lambda && t == o.t && poly_eq(f, o.f);
}

bool ModuleLabel::operator<(const ModuleLabel& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (!(lambda == o.lambda)) return lambda < o.lambda;
    if (t != o.t) return t < o.t;
    return poly_lt(f, o.f);
}

ModuleLabel label_simple(const Character& lambda) {
    ModuleLabel l;
    l.kind = ModuleLabel::Kind::Simple1;
    l.lambda = lambda;
    return l;
}

ModuleLabel label_serial(const Character& lambda, unsigned t) {
    if (t == 1) return label_simple(lambda);  // the length-one ladder is the simple
    ModuleLabel l;
    l.kind = ModuleLabel::Kind::Serial;
    l.lambda = lambda;
    l.t = t;
    return l;
}

ModuleLabel label_block(const HopfPtr& H, const Character& lambda, const UniPoly& f, unsigned r) {
    const Field& F = *H->field;
    if (!poly_is_monic(F, f) || f.degree() < 1)
        throw error("block label polynomial must be monic of degree >= 1");
    if (f.degree() == 1 && F.is_zero(f.c[0]))
        throw error("block label polynomial must differ from y");
    ModuleLabel l;
    l.kind = ModuleLabel::Kind::Block;
    l.lambda = coset_representative(lambda, H->chi);
    l.t = r;
    l.f = f;
    return l;
}

std::size_t label_dim(const HopfPtr& H, const ModuleLabel& label) {
    switch (label.kind) {
        case ModuleLabel::Kind::Simple1:
            return 1;
        case ModuleLabel::Kind::Serial:
            return label.t;
        case ModuleLabel::Kind::Block:
            return static_cast<std::size_t>(label.f.degree()) * label.t * H->chi_order;
    }
    throw error("bad label kind");
}

WeightModule label_module(const HopfPtr& H, const ModuleLabel& label) {
    switch (label.kind) {
        case ModuleLabel::Kind::Simple1:
            return make_simple_onedim(H, label.lambda);
        case ModuleLabel::Kind::Serial:
            return make_serial(H, label.lambda, label.t);
        case ModuleLabel::Kind::Block:
            return make_block(H, label.lambda, label.f, label.t);
    }
    throw error("bad label kind");
}

std::string label_str(const HopfPtr& H, const ModuleLabel& label) {
    switch (label.kind) {
        case ModuleLabel::Kind::Simple1:
            return "V(lambda=" + char_str(label.lambda) + ")";
        case ModuleLabel::Kind::Serial:
            return "Vt(lambda=" + char_str(label.lambda) + ", t=" + std::to_string(label.t) + ")";
        case ModuleLabel::Kind::Block:
            return "Block(coset=" + char_str(label.lambda) + ", f=\"" +
                   poly_str(*H->field, label.f) + "\", r=" + std::to_string(label.t) + ")";
    }
    throw error("bad label kind");
}

}  // namespace hopfore
