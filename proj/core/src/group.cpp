#include "hopfore/group.hpp"

#include <algorithm>
#include <numeric>

namespace hopfore {

GroupPtr AbelianGroup::make(std::vector<std::uint64_t> factors) {
    for (auto n : factors)
        if (n < 1) throw error("invariant factors must be >= 1");
    if (factors.empty()) throw error("group needs at least one invariant factor");
    auto g = std::make_shared<AbelianGroup>();
    g->factors = std::move(factors);
    return g;
}

std::uint64_t AbelianGroup::order() const {
    std::uint64_t o = 1;
    for (auto n : factors) o *= n;
    return o;
}

std::uint64_t AbelianGroup::exponent() const {
    std::uint64_t e = 1;
    for (auto n : factors) e = std::lcm(e, n);
    return e;
}

GroupElement group_identity(const GroupPtr& G) {
    return {G, std::vector<std::uint64_t>(G->ngens(), 0)};
}

GroupElement group_element(const GroupPtr& G, std::vector<std::uint64_t> exponents) {
    if (exponents.size() != G->ngens()) throw error("exponent vector length mismatch");
    for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] %= G->factors[i];
    return {G, std::move(exponents)};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    if (a.G != b.G) throw error("mismatched groups");
    std::vector<std::uint64_t> e(a.e.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (a.e[i] + b.e[i]) % a.G->factors[i];
    return {a.G, std::move(e)};
}

GroupElement group_inv(const GroupElement& a) {
    std::vector<std::uint64_t> e(a.e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = a.e[i] == 0 ? 0 : a.G->factors[i] - a.e[i];
    return {a.G, std::move(e)};
}

GroupElement group_pow(const GroupElement& a, long long k) {
    std::vector<std::uint64_t> e(a.e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long n = static_cast<long long>(a.G->factors[i]);
        long long v = (static_cast<long long>(a.e[i] % n) * (k % n)) % n;
        if (v < 0) v += n;
        e[i] = static_cast<std::uint64_t>(v);
    }
    return {a.G, std::move(e)};
}

bool group_is_identity(const GroupElement& a) {
    return std::all_of(a.e.begin(), a.e.end(), [](std::uint64_t v) { return v == 0; });
}

std::uint64_t group_element_order(const GroupElement& a) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        std::uint64_t n = a.G->factors[i];
        std::uint64_t d = std::gcd(a.e[i], n);
        o = std::lcm(o, n / d);
    }
    return o;
}

std::uint64_t group_index(const GroupElement& a) {
    std::uint64_t idx = 0;
    for (std::size_t i = a.e.size(); i-- > 0;) idx = idx * a.G->factors[i] + a.e[i];
    return idx;
}

GroupElement group_from_index(const GroupPtr& G, std::uint64_t index) {
    std::vector<std::uint64_t> e(G->ngens());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = index % G->factors[i];
        index /= G->factors[i];
    }
    return {G, std::move(e)};
}

std::vector<GroupElement> group_all_elements(const GroupPtr& G) {
    std::vector<GroupElement> out;
    out.reserve(G->order());
    for (std::uint64_t i = 0; i < G->order(); ++i) out.push_back(group_from_index(G, i));
    return out;
}

std::string group_element_str(const GroupElement& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.e[i]);
    }
    return s + "]";
}

Character make_character(const GroupPtr& G, const FieldPtr& F, std::vector<Scalar> images) {
    if (images.size() != G->ngens()) throw error("character image count mismatch");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (F->is_zero(images[i])) throw error("character images must be nonzero");
        if (!F->is_one(F->pow(images[i], static_cast<long long>(G->factors[i]))))
            throw error("character image " + F->str(images[i]) + " violates the order relation on generator " +
                        std::to_string(i));
    }
    return {G, F, std::move(images)};
}

Character trivial_character(const GroupPtr& G, const FieldPtr& F) {
    return {G, F, std::vector<Scalar>(G->ngens(), F->one())};
}

Scalar char_eval(const Character& chi, const GroupElement& g) {
    if (chi.G != g.G) throw error("character/element group mismatch");
    Scalar v = chi.F->one();
    for (std::size_t i = 0; i < g.e.size(); ++i)
        v = chi.F->mul(v, chi.F->pow(chi.images[i], static_cast<long long>(g.e[i])));
    return v;
}

Character char_mul(const Character& a, const Character& b) {
    if (a.G != b.G) throw error("mismatched groups");
    std::vector<Scalar> im(a.images.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.F->mul(a.images[i], b.images[i]);
    return {a.G, a.F, std::move(im)};
}

Character char_inv(const Character& a) {
    std::vector<Scalar> im(a.images.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.F->inv(a.images[i]);
    return {a.G, a.F, std::move(im)};
}

Character char_pow(const Character& a, long long k) {
    std::vector<Scalar> im(a.images.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.F->pow(a.images[i], k);
    return {a.G, a.F, std::move(im)};
}

bool char_is_trivial(const Character& chi) {
    return std::all_of(chi.images.begin(), chi.images.end(),
                       [&](const Scalar& s) { return chi.F->is_one(s); });
}

std::uint64_t char_order(const Character& chi) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < chi.images.size(); ++i) {
        auto ord = chi.F->mult_order(chi.images[i], chi.G->factors[i]);
        if (!ord) throw error("internal: character image order exceeds the generator order");
        o = std::lcm(o, *ord);
    }
    return o;
}

std::string char_str(const Character& chi) {
    std::string s = "[";
    for (std::size_t i = 0; i < chi.images.size(); ++i) {
        if (i) s += ",";
        s += chi.F->str(chi.images[i]);
    }
    return s + "]";
}

bool same_chi_coset(const Character& lambda, const Character& sigma, const Character& chi) {
    if (lambda.G != sigma.G || lambda.G != chi.G) throw error("mismatched groups");
    Character ratio = char_mul(lambda, char_inv(sigma));
    std::uint64_t s = char_order(chi);
    Character power = trivial_character(chi.G, chi.F);
    for (std::uint64_t t = 0; t < s; ++t) {
        if (ratio == power) return true;
        power = char_mul(power, chi);
    }
    return false;
}

Character coset_representative(const Character& lambda, const Character& chi) {
    Character best = lambda;
    Character cur = lambda;
    std::uint64_t s = char_order(chi);
    for (std::uint64_t t = 1; t < s; ++t) {
        cur = char_mul(cur, chi);
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<Character> enumerate_characters(const GroupPtr& G, const FieldPtr& F) {
    // per generator: all field elements of order dividing n_i
    std::vector<std::vector<Scalar>> choices(G->ngens());
    for (std::size_t i = 0; i < G->ngens(); ++i) {
        std::uint64_t n = G->factors[i];
        if (F->is_finite()) {
            for (const Scalar& c : F->all_elements()) {
                if (F->is_zero(c)) continue;
                if (F->is_one(F->pow(c, static_cast<long long>(n)))) choices[i].push_back(c);
            }
        } else {
            // roots of unity in Q(zeta_N) are +-zeta^j
            std::vector<Scalar> torsion;
            Scalar zeta = F->primitive_root_of_unity(F->unit_torsion());
            Scalar u = F->one();
            for (std::uint64_t j = 0; j < F->unit_torsion(); ++j) {
                torsion.push_back(u);
                u = F->mul(u, zeta);
            }
            for (const Scalar& c : torsion)
                if (F->is_one(F->pow(c, static_cast<long long>(n)))) choices[i].push_back(c);
        }
        std::sort(choices[i].begin(), choices[i].end());
        choices[i].erase(std::unique(choices[i].begin(), choices[i].end()), choices[i].end());
    }
    std::vector<Character> out;
    std::vector<std::size_t> idx(G->ngens(), 0);
    for (;;) {
        std::vector<Scalar> images(G->ngens());
        for (std::size_t i = 0; i < G->ngens(); ++i) images[i] = choices[i][idx[i]];
        out.push_back(Character{G, F, std::move(images)});
        std::size_t k = 0;
        while (k < G->ngens()) {
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == G->ngens()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Cocycle::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [&](const Scalar& s) { return F->is_zero(s); });
}

Cocycle make_cocycle(const GroupPtr& G, const FieldPtr& F, std::vector<Scalar> values) {
    if (values.size() != G->ngens()) throw error("cocycle value count mismatch");
    return {G, F, std::move(values)};
}

Cocycle zero_cocycle(const GroupPtr& G, const FieldPtr& F) {
    return {G, F, std::vector<Scalar>(G->ngens(), F->zero())};
}

namespace {

// 1 + w + ... + w^{e-1}
Scalar geometric_sum(const Field& F, const Scalar& w, std::uint64_t e) {
    Scalar acc = F.zero(), pw = F.one();
    for (std::uint64_t i = 0; i < e; ++i) {
        acc = F.add(acc, pw);
        pw = F.mul(pw, w);
    }
    return acc;
}

}  // namespace

bool cocycle_check(const Cocycle& alpha, const Character& chi) {
    if (alpha.G != chi.G) throw error("cocycle/character group mismatch");
    const Field& F = *alpha.F;
    // alpha(g_i^{n_i}) = alpha(g_i)(1 + chi(g_i) + ... + chi(g_i)^{n_i - 1}) = 0
    for (std::size_t i = 0; i < alpha.values.size(); ++i) {
        Scalar total = F.mul(alpha.values[i], geometric_sum(F, chi.images[i], alpha.G->factors[i]));
        if (!F.is_zero(total)) return false;
    }
    // the extension rule respects commutativity only when
    // alpha(g_i)(1 - chi(g_j)) = alpha(g_j)(1 - chi(g_i))
    for (std::size_t i = 0; i < alpha.values.size(); ++i) {
        for (std::size_t j = i + 1; j < alpha.values.size(); ++j) {
            Scalar lhs = F.mul(alpha.values[i], F.sub(F.one(), chi.images[j]));
            Scalar rhs = F.mul(alpha.values[j], F.sub(F.one(), chi.images[i]));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

Scalar cocycle_eval(const Cocycle& alpha, const Character& chi, const GroupElement& g) {
    if (alpha.G != g.G || chi.G != g.G) throw error("cocycle/element group mismatch");
    const Field& F = *alpha.F;
    // alpha(g_1^{e_1} ... g_k^{e_k}) accumulated left to right via
    // alpha(uv) = alpha(u) + chi(u) alpha(v)
    Scalar acc = F.zero();
    Scalar chi_prefix = F.one();
    for (std::size_t i = 0; i < g.e.size(); ++i) {
        Scalar a_pow = F.mul(alpha.values[i], geometric_sum(F, chi.images[i], g.e[i]));
        acc = F.add(acc, F.mul(chi_prefix, a_pow));
        chi_prefix = F.mul(chi_prefix, F.pow(chi.images[i], static_cast<long long>(g.e[i])));
    }
    return acc;
}

}  // namespace hopfore
