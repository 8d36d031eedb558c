#include "hopfore/hopf.hpp"

#include <algorithm>

namespace hopfore {

QuotientSpec quotient_none() { return {}; }

QuotientSpec quotient_power_zero(unsigned n) {
    QuotientSpec q;
    q.kind = QuotientSpec::Kind::PowerZero;
    q.n = n;
    return q;
}

QuotientSpec quotient_power_central(unsigned n, Scalar beta) {
    QuotientSpec q;
    q.kind = QuotientSpec::Kind::PowerCentral;
    q.n = n;
    q.beta = std::move(beta);
    return q;
}

namespace {

HopfPtr build(FieldPtr field, GroupPtr group, Character chi, GroupElement a, Cocycle alpha,
              QuotientSpec quotient, std::optional<Scalar> gamma) {
    auto H = std::make_shared<HopfPresentation>();
    H->field = std::move(field);
    H->group = std::move(group);
    H->chi_inv = char_inv(chi);
    H->chi = std::move(chi);
    H->a = std::move(a);
    H->alpha = std::move(alpha);
    H->quotient = std::move(quotient);
    H->q = char_eval(H->chi_inv, H->a);
    auto qo = H->field->mult_order(H->q, H->field->unit_torsion());
    if (!qo) throw error("internal: q has no finite order");
    H->q_order = *qo;
    H->chi_order = char_order(H->chi);
    Scalar alpha_a = cocycle_eval(H->alpha, H->chi_inv, H->a);
    if (!H->field->is_one(H->q))
        H->case_tag = 1;
    else
        H->case_tag = H->field->is_zero(alpha_a) ? 2 : 3;
    H->normalization_gamma = std::move(gamma);
    return H;
}

}  // namespace

HopfPtr make_hopf(FieldPtr field, GroupPtr group, Character chi, GroupElement a, Cocycle alpha,
                  QuotientSpec quotient) {
    if (a.G != group) throw error("a must be an element of the given group");
    if (chi.G != group) throw error("chi must be a character of the given group");
    // the defining relation twists by chi^{-1}, so alpha must be a 1-cocycle
    // with respect to chi^{-1}
    if (!cocycle_check(alpha, char_inv(chi)))
        throw error("alpha is not a 1-cocycle compatible with chi");

    HopfPtr H = build(field, group, chi, a, alpha, quotient_none(), std::nullopt);

    // normalize Case 1 presentations to alpha = 0 before attaching a quotient
    std::optional<Scalar> gamma;
    if (H->case_tag == 1 && !H->alpha.is_zero()) {
        CaseNormalizeResult norm = case_normalize(H);
        H = norm.presentation;
        gamma = norm.gamma;
    }

    // validate and normalize the quotient spec
    if (quotient.kind != QuotientSpec::Kind::None) {
        if (quotient.n < 2) throw error("quotient ideal needs n >= 2");
        if (H->q_order != quotient.n)
            throw error("quotient ideal requires chi^{-1}(a) to be a primitive " +
                        std::to_string(quotient.n) + "-th root of unity (its order is " +
                        std::to_string(H->q_order) + ")");
        if (quotient.kind == QuotientSpec::Kind::PowerCentral) {
            bool beta_zero = field->is_zero(quotient.beta);
            bool an_trivial = group_is_identity(group_pow(H->a, quotient.n));
            if (beta_zero || an_trivial) {
                // beta (1 - a^n) = 0, so the ideal is the plain power ideal
                quotient = quotient_power_zero(quotient.n);
            } else if (H->chi_order != quotient.n) {
                throw error(
                    "central power ideal with beta != 0 and a^n != 1 requires |chi| = n "
                    "(|chi| is " +
                    std::to_string(H->chi_order) + ", n is " + std::to_string(quotient.n) + ")");
            }
        }
    }
    return build(H->field, H->group, H->chi, H->a, H->alpha, std::move(quotient),
                 std::move(gamma));
}

CaseNormalizeResult case_normalize(const HopfPtr& H) {
    if (H->case_tag != 1)
        throw error("case normalization applies only when chi^{-1}(a) != 1");
    const Field& F = *H->field;
    if (H->alpha.is_zero()) {
        return {H, F.zero()};  // identity witness
    }
    // x' = x - gamma (1 - a) with gamma = alpha(a) / (1 - chi^{-1}(a))
    Scalar alpha_a = cocycle_eval(H->alpha, H->chi_inv, H->a);
    Scalar gamma = F.div(alpha_a, F.sub(F.one(), H->q));
    HopfPtr norm = build(H->field, H->group, H->chi, H->a, zero_cocycle(H->group, H->field),
                         H->quotient, gamma);
    return {norm, gamma};
}

std::uint32_t HopfElement::max_degree() const {
    std::uint32_t d = 0;
    for (const auto& [lab, c] : terms) d = std::max(d, lab.i);
    return d;
}

HopfElement he_zero() { return {}; }

HopfElement he_one(const HopfPresentation& H) {
    return he_basis(H, group_identity(H.group), 0);
}

HopfElement he_scalar(const HopfPresentation& H, const Scalar& c) {
    return he_scale(H, c, he_one(H));
}

HopfElement he_basis(const HopfPresentation& H, const GroupElement& g, std::uint32_t i) {
    if (H.quotient.kind != QuotientSpec::Kind::None && i >= H.quotient.n)
        throw error("basis degree exceeds the quotient bound");
    HopfElement u;
    u.terms[{group_index(g), i}] = H.field->one();
    return u;
}

HopfElement he_group(const HopfPresentation& H, const GroupElement& g) { return he_basis(H, g, 0); }

HopfElement he_x(const HopfPresentation& H) {
    return he_basis(H, group_identity(H.group), 1);
}

namespace {

void add_term(const Field& F, HopfElement& u, const BasisLabel& lab, const Scalar& c) {
    if (F.is_zero(c)) return;
    auto it = u.terms.find(lab);
    if (it == u.terms.end()) {
        u.terms.emplace(lab, c);
    } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) u.terms.erase(it);
    }
}

void add_tensor_term(const Field& F, TensorElement& u, const TensorLabel& lab, const Scalar& c) {
    if (F.is_zero(c)) return;
    auto it = u.terms.find(lab);
    if (it == u.terms.end()) {
        u.terms.emplace(lab, c);
    } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) u.terms.erase(it);
    }
}

// push a raw (g, degree) term into normal form under the quotient rewrite
void add_reduced(const HopfPresentation& H, HopfElement& out, std::uint64_t g, std::uint32_t deg,
                 const Scalar& c) {
    const Field& F = *H.field;
    if (H.quotient.kind == QuotientSpec::Kind::None || deg < H.quotient.n) {
        add_term(F, out, {g, deg}, c);
        return;
    }
    unsigned n = H.quotient.n;
    if (H.quotient.kind == QuotientSpec::Kind::PowerZero) return;  // x^n = 0
    // x^n = beta (1 - a^n), and a^n commutes with x in the quotient
    GroupElement ge = group_from_index(H.group, g);
    GroupElement gan = group_mul(ge, group_pow(H.a, n));
    add_reduced(H, out, g, deg - n, F.mul(c, H.quotient.beta));
    add_reduced(H, out, group_index(gan), deg - n, F.neg(F.mul(c, H.quotient.beta)));
}

// left multiplication by x in normal form
HopfElement left_x(const HopfPresentation& H, const HopfElement& u) {
    const Field& F = *H.field;
    HopfElement out;
    bool twisted_only = H.alpha.is_zero();
    for (const auto& [lab, c] : u.terms) {
        GroupElement h = group_from_index(H.group, lab.g);
        Scalar tw = F.mul(c, char_eval(H.chi_inv, h));
        add_reduced(H, out, lab.g, lab.i + 1, tw);
        if (!twisted_only) {
            Scalar ah = F.mul(c, cocycle_eval(H.alpha, H.chi_inv, h));
            if (!F.is_zero(ah)) {
                add_reduced(H, out, lab.g, lab.i, ah);
                GroupElement ha = group_mul(h, H.a);
                add_reduced(H, out, group_index(ha), lab.i, F.neg(ah));
            }
        }
    }
    return out;
}

}  // namespace

HopfElement he_add(const HopfPresentation& H, const HopfElement& u, const HopfElement& v) {
    HopfElement out = u;
    for (const auto& [lab, c] : v.terms) add_term(*H.field, out, lab, c);
    return out;
}

HopfElement he_sub(const HopfPresentation& H, const HopfElement& u, const HopfElement& v) {
    HopfElement out = u;
    for (const auto& [lab, c] : v.terms) add_term(*H.field, out, lab, H.field->neg(c));
    return out;
}

HopfElement he_scale(const HopfPresentation& H, const Scalar& c, const HopfElement& u) {
    HopfElement out;
    if (H.field->is_zero(c)) return out;
    for (const auto& [lab, v] : u.terms) add_term(*H.field, out, lab, H.field->mul(c, v));
    return out;
}

HopfElement he_mul(const HopfPresentation& H, const HopfElement& u, const HopfElement& v) {
    const Field& F = *H.field;
    // powers x^i v, built once up to the largest degree in u
    std::uint32_t maxdeg = u.max_degree();
    std::vector<HopfElement> xv(maxdeg + 1);
    xv[0] = v;
    for (std::uint32_t k = 1; k <= maxdeg; ++k) xv[k] = left_x(H, xv[k - 1]);

    HopfElement out;
    for (const auto& [ulab, uc] : u.terms) {
        GroupElement g = group_from_index(H.group, ulab.g);
        for (const auto& [vlab, vc] : xv[ulab.i].terms) {
            GroupElement h = group_from_index(H.group, vlab.g);
            add_term(F, out, {group_index(group_mul(g, h)), vlab.i}, F.mul(uc, vc));
        }
    }
    return out;
}

HopfElement he_pow(const HopfPresentation& H, const HopfElement& u, std::uint64_t e) {
    HopfElement r = he_one(H);
    for (std::uint64_t k = 0; k < e; ++k) r = he_mul(H, r, u);
    return r;
}

std::string he_str(const HopfPresentation& H, const HopfElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [lab, c] : u.terms) {
        std::string piece = H.field->str(c);
        GroupElement g = group_from_index(H.group, lab.g);
        if (!group_is_identity(g)) piece += "*g" + group_element_str(g);
        if (lab.i == 1)
            piece += "*x";
        else if (lab.i > 1)
            piece += "*x^" + std::to_string(lab.i);
        out += (out.empty() ? "" : " + ") + piece;
    }
    return out;
}

TensorElement te_tensor(const HopfPresentation& H, const HopfElement& u, const HopfElement& v) {
    TensorElement out;
    for (const auto& [lu, cu] : u.terms)
        for (const auto& [lv, cv] : v.terms)
            add_tensor_term(*H.field, out, {lu, lv}, H.field->mul(cu, cv));
    return out;
}

TensorElement te_add(const HopfPresentation& H, const TensorElement& u, const TensorElement& v) {
    TensorElement out = u;
    for (const auto& [lab, c] : v.terms) add_tensor_term(*H.field, out, lab, c);
    return out;
}

TensorElement te_sub(const HopfPresentation& H, const TensorElement& u, const TensorElement& v) {
    TensorElement out = u;
    for (const auto& [lab, c] : v.terms) add_tensor_term(*H.field, out, lab, H.field->neg(c));
    return out;
}

TensorElement te_mul(const HopfPresentation& H, const TensorElement& u, const TensorElement& v) {
    const Field& F = *H.field;
    TensorElement out;
    for (const auto& [lu, cu] : u.terms) {
        HopfElement lu_l, lu_r;
        lu_l.terms[lu.l] = F.one();
        lu_r.terms[lu.r] = F.one();
        for (const auto& [lv, cv] : v.terms) {
            HopfElement lv_l, lv_r;
            lv_l.terms[lv.l] = F.one();
            lv_r.terms[lv.r] = F.one();
            HopfElement left = he_mul(H, lu_l, lv_l);
            HopfElement right = he_mul(H, lu_r, lv_r);
            Scalar c = F.mul(cu, cv);
            for (const auto& [ll, cl] : left.terms)
                for (const auto& [lr, cr] : right.terms)
                    add_tensor_term(F, out, {ll, lr}, F.mul(c, F.mul(cl, cr)));
        }
    }
    return out;
}

std::string te_str(const HopfPresentation& H, const TensorElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [lab, c] : u.terms) {
        HopfElement l, r;
        l.terms[lab.l] = H.field->one();
        r.terms[lab.r] = H.field->one();
        std::string piece =
            H.field->str(c) + "*(" + he_str(H, l) + " (x) " + he_str(H, r) + ")";
        out += (out.empty() ? "" : " + ") + piece;
    }
    return out;
}

TensorElement he_comul(const HopfPresentation& H, const HopfElement& u) {
    const Field& F = *H.field;
    // Delta(g x^i) = (g (x) g) Delta(x)^i, multiplied out in H (x) H
    std::uint32_t maxdeg = u.max_degree();
    std::vector<TensorElement> dx_pow(maxdeg + 1);
    {
        TensorElement one = te_tensor(H, he_one(H), he_one(H));
        dx_pow[0] = one;
        if (maxdeg >= 1) {
            TensorElement dx = te_add(H, te_tensor(H, he_x(H), he_group(H, H.a)),
                                      te_tensor(H, he_one(H), he_x(H)));
            for (std::uint32_t k = 1; k <= maxdeg; ++k) dx_pow[k] = te_mul(H, dx_pow[k - 1], dx);
        }
    }
    TensorElement out;
    for (const auto& [lab, c] : u.terms) {
        for (const auto& [tl, tc] : dx_pow[lab.i].terms) {
            GroupElement gl = group_from_index(H.group, tl.l.g);
            GroupElement gr = group_from_index(H.group, tl.r.g);
            GroupElement g = group_from_index(H.group, lab.g);
            TensorLabel shifted{{group_index(group_mul(g, gl)), tl.l.i},
                                {group_index(group_mul(g, gr)), tl.r.i}};
            add_tensor_term(F, out, shifted, F.mul(c, tc));
        }
    }
    return out;
}

Scalar he_counit(const HopfPresentation& H, const HopfElement& u) {
    Scalar acc = H.field->zero();
    for (const auto& [lab, c] : u.terms)
        if (lab.i == 0) acc = H.field->add(acc, c);
    return acc;
}

HopfElement he_antipode(const HopfPresentation& H, const HopfElement& u) {
    const Field& F = *H.field;
    // S(g x^i) = S(x)^i g^{-1} with S(x) = -x a^{-1}
    HopfElement sx = he_scale(H, F.from_int(-1), he_mul(H, he_x(H), he_group(H, group_inv(H.a))));
    std::uint32_t maxdeg = u.max_degree();
    std::vector<HopfElement> sx_pow(maxdeg + 1);
    sx_pow[0] = he_one(H);
    for (std::uint32_t k = 1; k <= maxdeg; ++k) sx_pow[k] = he_mul(H, sx_pow[k - 1], sx);
    HopfElement out;
    for (const auto& [lab, c] : u.terms) {
        GroupElement ginv = group_inv(group_from_index(H.group, lab.g));
        HopfElement piece = he_mul(H, sx_pow[lab.i], he_group(H, ginv));
        out = he_add(H, out, he_scale(H, c, piece));
    }
    return out;
}

// ---- axiom verification ----

namespace {

using Triple = std::map<std::tuple<BasisLabel, BasisLabel, BasisLabel>, Scalar>;

void add_triple(const Field& F, Triple& t, const std::tuple<BasisLabel, BasisLabel, BasisLabel>& k,
                const Scalar& c) {
    if (F.is_zero(c)) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
    } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) t.erase(it);
    }
}

Triple comul_left(const HopfPresentation& H, const TensorElement& u) {
    Triple out;
    for (const auto& [lab, c] : u.terms) {
        HopfElement e;
        e.terms[lab.l] = H.field->one();
        TensorElement d = he_comul(H, e);
        for (const auto& [dl, dc] : d.terms)
            add_triple(*H.field, out, {dl.l, dl.r, lab.r}, H.field->mul(c, dc));
    }
    return out;
}

Triple comul_right(const HopfPresentation& H, const TensorElement& u) {
    Triple out;
    for (const auto& [lab, c] : u.terms) {
        HopfElement e;
        e.terms[lab.r] = H.field->one();
        TensorElement d = he_comul(H, e);
        for (const auto& [dl, dc] : d.terms)
            add_triple(*H.field, out, {lab.l, dl.l, dl.r}, H.field->mul(c, dc));
    }
    return out;
}

std::vector<std::pair<std::string, HopfElement>> generator_set(const HopfPresentation& H) {
    std::vector<std::pair<std::string, HopfElement>> gens;
    for (std::size_t i = 0; i < H.group->ngens(); ++i) {
        std::vector<std::uint64_t> e(H.group->ngens(), 0);
        e[i] = 1;
        GroupElement g = group_element(H.group, e);
        gens.emplace_back("g" + group_element_str(g), he_group(H, g));
    }
    gens.emplace_back("a", he_group(H, H.a));
    gens.emplace_back("x", he_x(H));
    return gens;
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfPtr& Hp, unsigned degree_cap) {
    const HopfPresentation& H = *Hp;
    const Field& F = *H.field;
    AxiomReport report;
    if (degree_cap < 1) throw error("degree cap must be >= 1");
    unsigned cap = degree_cap;
    if (H.quotient.kind != QuotientSpec::Kind::None)
        cap = std::min(cap, H.quotient.n - 1);

    std::vector<GroupElement> heads;
    for (std::size_t i = 0; i < H.group->ngens(); ++i) {
        std::vector<std::uint64_t> e(H.group->ngens(), 0);
        e[i] = 1;
        heads.push_back(group_element(H.group, e));
    }
    heads.push_back(group_identity(H.group));
    heads.push_back(H.a);
    report.basis_range = "g x^i for i <= " + std::to_string(cap) +
                         ", g over the generators, the identity, and a";

    auto record = [&](const std::string& axiom, const std::string& witness, bool pass) {
        report.entries.push_back({axiom, witness, pass});
        if (!pass) report.all_pass = false;
    };

    for (const GroupElement& g : heads) {
        for (unsigned i = 0; i <= cap; ++i) {
            HopfElement u = he_basis(H, g, i);
            std::string w = he_str(H, u);
            TensorElement du = he_comul(H, u);
            // coassociativity
            bool coassoc = comul_left(H, du) == comul_right(H, du);
            record("coassociativity", w, coassoc);
            // counit axiom
            HopfElement left = he_zero(), right = he_zero();
            for (const auto& [lab, c] : du.terms) {
                HopfElement el, er;
                el.terms[lab.l] = F.one();
                er.terms[lab.r] = F.one();
                left = he_add(H, left, he_scale(H, F.mul(c, he_counit(H, el)), er));
                right = he_add(H, right, he_scale(H, F.mul(c, he_counit(H, er)), el));
            }
            record("counit", w, left == u && right == u);
            // antipode axiom
            HopfElement sconv_l = he_zero(), sconv_r = he_zero();
            for (const auto& [lab, c] : du.terms) {
                HopfElement el, er;
                el.terms[lab.l] = F.one();
                er.terms[lab.r] = F.one();
                sconv_l = he_add(H, sconv_l, he_scale(H, c, he_mul(H, he_antipode(H, el), er)));
                sconv_r = he_add(H, sconv_r, he_scale(H, c, he_mul(H, el, he_antipode(H, er))));
            }
            HopfElement eps = he_scalar(H, he_counit(H, u));
            record("antipode", w, sconv_l == eps && sconv_r == eps);
        }
    }

    // Delta is an algebra map on products of generators
    auto gens = generator_set(H);
    for (const auto& [nu, u] : gens) {
        for (const auto& [nv, v] : gens) {
            TensorElement lhs = he_comul(H, he_mul(H, u, v));
            TensorElement rhs = te_mul(H, he_comul(H, u), he_comul(H, v));
            record("comultiplication multiplicative", nu + " * " + nv, lhs == rhs);
        }
    }

    // multiplication is associative when x crosses group elements; this is
    // what breaks on presentations whose chi or alpha data is inconsistent
    if (H.group->order() <= 256) {
        HopfElement x = he_x(H);
        for (const GroupElement& h : group_all_elements(H.group)) {
            for (const GroupElement& k : group_all_elements(H.group)) {
                HopfElement l = he_mul(H, he_mul(H, x, he_group(H, h)), he_group(H, k));
                HopfElement rr = he_mul(H, x, he_group(H, group_mul(h, k)));
                record("multiplication associative",
                       "x * g" + group_element_str(h) + " * g" + group_element_str(k),
                       l == rr);
            }
        }
    }
    return report;
}

std::vector<HopfElement> skew_primitive_space(const HopfPtr& Hp, const GroupElement& g,
                                              unsigned degree_cap) {
    const HopfPresentation& H = *Hp;
    const Field& F = *H.field;
    if (degree_cap < 1) throw error("degree cap must be >= 1");
    unsigned cap = degree_cap;
    if (H.quotient.kind != QuotientSpec::Kind::None)
        cap = std::min(cap, H.quotient.n - 1);

    // columns: basis labels ordered by degree descending, then group index
    std::vector<BasisLabel> cols;
    std::uint64_t gorder = H.group->order();
    for (unsigned d = cap + 1; d-- > 0;)
        for (std::uint64_t gi = 0; gi < gorder; ++gi)
            cols.push_back({gi, d});

    // precompute Delta(x)^i once per degree
    std::vector<TensorElement> dx_pow(cap + 1);
    dx_pow[0] = te_tensor(*Hp, he_one(H), he_one(H));
    if (cap >= 1) {
        TensorElement dx = te_add(H, te_tensor(H, he_x(H), he_group(H, H.a)),
                                  te_tensor(H, he_one(H), he_x(H)));
        for (unsigned k = 1; k <= cap; ++k) dx_pow[k] = te_mul(H, dx_pow[k - 1], dx);
    }

    std::map<TensorLabel, std::size_t> row_index;
    std::vector<std::map<std::size_t, Scalar>> col_entries(cols.size());
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
        const BasisLabel& lab = cols[cidx];
        GroupElement h = group_from_index(H.group, lab.g);
        HopfElement u = he_basis(H, h, lab.i);
        TensorElement d;
        for (const auto& [tl, tc] : dx_pow[lab.i].terms) {
            GroupElement gl = group_mul(h, group_from_index(H.group, tl.l.g));
            GroupElement gr = group_mul(h, group_from_index(H.group, tl.r.g));
            add_tensor_term(F, d, {{group_index(gl), tl.l.i}, {group_index(gr), tl.r.i}}, tc);
        }
        d = te_sub(H, d, te_tensor(H, u, he_group(H, g)));
        d = te_sub(H, d, te_tensor(H, he_one(H), u));
        for (const auto& [tl, tc] : d.terms) {
            auto [it, inserted] = row_index.try_emplace(tl, row_index.size());
            col_entries[cidx][it->second] = tc;
        }
    }

    Mat m(row_index.size(), cols.size(), F.zero());
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        for (const auto& [r, c] : col_entries[cidx]) m.at(r, cidx) = c;

    Mat ker = kernel_basis(F, m);
    std::vector<HopfElement> out;
    for (std::size_t i = 0; i < ker.rows; ++i) {
        HopfElement z;
        for (std::size_t j = 0; j < cols.size(); ++j) add_term(F, z, cols[j], ker.at(i, j));
        out.push_back(std::move(z));
    }
    return out;
}

std::set<std::uint64_t> predicted_primitive_degrees(const HopfPresentation& H,
                                                    const GroupElement& g, unsigned cap) {
    std::set<std::uint64_t> out;
    const std::uint64_t p = H.field->characteristic();
    const std::uint64_t n = H.q_order;
    if (g == H.a) out.insert(1);
    if (p == 0) {
        if (n >= 2 && g == group_pow(H.a, static_cast<long long>(n))) out.insert(n);
        return out;
    }
    if (n >= 2) {
        for (std::uint64_t d = n; d <= cap; d *= p) {
            if (g == group_pow(H.a, static_cast<long long>(d))) out.insert(d);
            if (d > cap / p) break;
        }
    } else {
        // q = 1: char-p families x^{p^r} (Case 2) or x^{p^r} - x^{p^{r-1}} (Case 3)
        std::uint64_t start = H.case_tag == 3 ? p : 1;
        for (std::uint64_t d = start; d <= cap; d *= p) {
            if (g == group_pow(H.a, static_cast<long long>(d))) out.insert(d);
            if (d > cap / p) break;
        }
    }
    return out;
}

RankReport rank_report(const HopfPtr& Hp, unsigned degree_cap) {
    const HopfPresentation& H = *Hp;
    if (H.quotient.kind != QuotientSpec::Kind::None)
        throw error("rank scan applies to the unquotiented extension");
    RankReport report;
    const std::uint64_t p = H.field->characteristic();
    const std::uint64_t n = H.q_order;
    if (p == 0)
        report.classification = n >= 2 ? "2" : "1";
    else
        report.classification = "infinite";

    std::uint64_t aorder = group_element_order(H.a);
    for (std::uint64_t j = 0; j < aorder; ++j) {
        GroupElement g = group_pow(H.a, static_cast<long long>(j));
        std::vector<HopfElement> basis = skew_primitive_space(Hp, g, degree_cap);
        std::set<std::uint64_t> found;
        for (const HopfElement& z : basis) {
            // leading term under the degree-descending column order
            const auto lead = std::max_element(
                z.terms.begin(), z.terms.end(), [](const auto& x, const auto& y) {
                    if (x.first.i != y.first.i) return x.first.i < y.first.i;
                    return x.first.g > y.first.g;
                });
            if (lead != z.terms.end() && lead->first.i >= 1) found.insert(lead->first.i);
        }
        std::set<std::uint64_t> predicted = predicted_primitive_degrees(H, g, degree_cap);
        report.degrees_found.insert(found.begin(), found.end());
        report.degrees_predicted.insert(predicted.begin(), predicted.end());
        report.details.push_back({g, found, predicted});
    }
    report.match = true;
    for (const auto& d : report.details)
        if (d.found != d.predicted) report.match = false;
    return report;
}

}  // namespace hopfore
