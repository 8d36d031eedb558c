#include "hopfore/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace hopfore {

UniPoly poly_zero() { return {}; }

UniPoly poly_const(const Field& F, const Scalar& a) {
    if (F.is_zero(a)) return {};
    return {{a}};
}

UniPoly poly_x(const Field& F) { return {{F.zero(), F.one()}}; }

UniPoly poly_from_coeffs(const Field& F, std::vector<Scalar> coeffs) {
    UniPoly f{std::move(coeffs)};
    poly_trim(F, f);
    return f;
}

UniPoly poly_linear(const Field& F, const Scalar& a) { return {{F.neg(a), F.one()}}; }

void poly_trim(const Field& F, UniPoly& f) {
    while (!f.c.empty() && F.is_zero(f.c.back())) f.c.pop_back();
}

bool poly_eq(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

bool poly_lt(const UniPoly& a, const UniPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

bool poly_is_monic(const Field& F, const UniPoly& f) {
    return !f.c.empty() && F.is_one(f.c.back());
}

UniPoly poly_add(const Field& F, const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Scalar av = i < a.c.size() ? a.c[i] : F.zero();
        Scalar bv = i < b.c.size() ? b.c[i] : F.zero();
        r.c[i] = F.add(av, bv);
    }
    poly_trim(F, r);
    return r;
}

UniPoly poly_sub(const Field& F, const UniPoly& a, const UniPoly& b) {
    return poly_add(F, a, poly_scale(F, F.from_int(-1), b));
}

UniPoly poly_mul(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_trim(F, r);
    return r;
}

UniPoly poly_scale(const Field& F, const Scalar& s, const UniPoly& a) {
    if (F.is_zero(s)) return {};
    UniPoly r = a;
    for (auto& c : r.c) c = F.mul(s, c);
    poly_trim(F, r);
    return r;
}

UniPoly poly_pow(const Field& F, const UniPoly& a, std::uint64_t e) {
    UniPoly r = poly_const(F, F.one());
    UniPoly base = a;
    while (e > 0) {
        if (e & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

std::pair<UniPoly, UniPoly> poly_divmod(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    UniPoly rem = a, quo;
    Scalar lead_inv = F.inv(b.c.back());
    if (rem.c.size() >= b.c.size()) quo.c.assign(rem.c.size() - b.c.size() + 1, F.zero());
    while (rem.c.size() >= b.c.size()) {
        Scalar coef = F.mul(rem.c.back(), lead_inv);
        std::size_t shift = rem.c.size() - b.c.size();
        quo.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(coef, b.c[i]));
        poly_trim(F, rem);
        if (rem.c.size() < b.c.size()) break;
    }
    poly_trim(F, quo);
    return {quo, rem};
}

UniPoly poly_mod(const Field& F, const UniPoly& a, const UniPoly& m) {
    return poly_divmod(F, a, m).second;
}

UniPoly poly_mulmod(const Field& F, const UniPoly& a, const UniPoly& b, const UniPoly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

UniPoly poly_powmod(const Field& F, const UniPoly& a, const mpz_class& e, const UniPoly& m) {
    if (e < 0) throw error("negative exponent in powmod");
    UniPoly r = poly_mod(F, poly_const(F, F.one()), m);
    UniPoly base = poly_mod(F, a, m);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = poly_mulmod(F, r, base, m);
        base = poly_mulmod(F, base, base, m);
        k >>= 1;
    }
    return r;
}

UniPoly poly_make_monic(const Field& F, const UniPoly& f) {
    if (f.is_zero()) return f;
    return poly_scale(F, F.inv(f.c.back()), f);
}

UniPoly poly_derivative(const Field& F, const UniPoly& f) {
    UniPoly r;
    if (f.c.size() < 2) return r;
    r.c.resize(f.c.size() - 1, F.zero());
    for (std::size_t i = 1; i < f.c.size(); ++i)
        r.c[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), f.c[i]);
    poly_trim(F, r);
    return r;
}

Scalar poly_eval(const Field& F, const UniPoly& f, const Scalar& x) {
    Scalar acc = F.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

UniPoly poly_gcd(const Field& F, const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = poly_mod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return poly_make_monic(F, r0);
}

XgcdResult poly_xgcd(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw error("xgcd of two zero polynomials");
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = poly_const(F, F.one()), s1 = poly_zero();
    UniPoly t0 = poly_zero(), t1 = poly_const(F, F.one());
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(F, r0, r1);
        UniPoly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        UniPoly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Scalar lead_inv = F.inv(r0.c.back());
    return {poly_scale(F, lead_inv, r0), poly_scale(F, lead_inv, s0), poly_scale(F, lead_inv, t0)};
}

UniPoly poly_lcm(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly g = poly_gcd(F, a, b);
    return poly_make_monic(F, poly_divmod(F, poly_mul(F, a, b), g).first);
}

// ---- factorization over finite fields ----

namespace {

// coefficientwise p-th root: c -> c^{p^{m-1}}
UniPoly pth_root(const Field& F, const UniPoly& f) {
    std::uint64_t p = F.characteristic();
    UniPoly r;
    r.c.resize(f.c.size() / p + 1, F.zero());
    long long root_exp = 1;
    for (std::size_t i = 1; i < F.degree(); ++i)
        root_exp *= static_cast<long long>(p);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (F.is_zero(f.c[i])) continue;
        if (i % p != 0) throw error("internal: not a p-th power");
        r.c[i / p] = F.pow(f.c[i], root_exp);
    }
    poly_trim(F, r);
    return r;
}

// squarefree decomposition of a monic f: list of (g_i, i) with f = prod g_i^i
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const Field& F,
                                                                   const UniPoly& f) {
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    UniPoly d = poly_derivative(F, f);
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, f)))
            out.emplace_back(g, m * static_cast<unsigned>(F.characteristic()));
        return out;
    }
    UniPoly c = poly_gcd(F, f, d);
    UniPoly w = poly_divmod(F, f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = poly_gcd(F, w, c);
        UniPoly z = poly_divmod(F, w, y).first;
        if (z.degree() > 0) out.emplace_back(poly_make_monic(F, z), i);
        ++i;
        w = std::move(y);
        c = poly_divmod(F, c, w).first;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, c)))
            out.emplace_back(g, m * static_cast<unsigned>(F.characteristic()));
    }
    return out;
}

// distinct-degree: (degree d, product of all irreducible factors of degree d)
std::vector<std::pair<std::size_t, UniPoly>> distinct_degree(const Field& F, UniPoly f) {
    std::vector<std::pair<std::size_t, UniPoly>> out;
    mpz_class q(static_cast<unsigned long>(F.characteristic()));
    mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(F.degree()));
    UniPoly h = poly_mod(F, poly_x(F), f);
    std::size_t d = 0;
    while (f.degree() > 2 * static_cast<long long>(d + 1) - 1) {
        ++d;
        h = poly_powmod(F, h, q, f);
        UniPoly g = poly_gcd(F, poly_sub(F, h, poly_x(F)), f);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            f = poly_divmod(F, f, g).first;
            h = poly_mod(F, h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(static_cast<std::size_t>(f.degree()), f);
    return out;
}

// Cantor-Zassenhaus equal-degree splitting: f is squarefree, all factors of
// degree d
void equal_degree(const Field& F, const UniPoly& f, std::size_t d, std::mt19937_64& rng,
                  std::vector<UniPoly>& out) {
    if (f.degree() == static_cast<long long>(d)) {
        out.push_back(poly_make_monic(F, f));
        return;
    }
    mpz_class q(static_cast<unsigned long>(F.characteristic()));
    mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(F.degree()));
    std::vector<Scalar> elems = F.all_elements();
    for (;;) {
        // random polynomial of degree < deg f
        UniPoly h;
        h.c.resize(static_cast<std::size_t>(f.degree()), F.zero());
        for (auto& c : h.c) c = elems[rng() % elems.size()];
        poly_trim(F, h);
        if (h.degree() < 1) continue;
        UniPoly g = poly_gcd(F, h, f);
        if (g.degree() <= 0) {
            if (F.characteristic() == 2) {
                // trace map over F_2: T(h) = h + h^2 + h^4 + ...
                std::size_t bits = d * F.degree();
                UniPoly t = poly_mod(F, h, f);
                UniPoly pw = t;
                for (std::size_t i = 1; i < bits; ++i) {
                    pw = poly_mulmod(F, pw, pw, f);
                    t = poly_add(F, t, pw);
                }
                g = poly_gcd(F, t, f);
            } else {
                mpz_class e;
                mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                UniPoly t = poly_powmod(F, h, e, f);
                g = poly_gcd(F, poly_sub(F, t, poly_const(F, F.one())), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, poly_divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

// cyclotomic kind: peel linear factors over a finite candidate set
FactorList factor_cyclotomic(const Field& F, UniPoly f) {
    FactorList out;
    out.unit = f.c.back();
    f = poly_make_monic(F, f);

    // trivial roots at zero first
    unsigned zero_mult = 0;
    while (f.degree() > 0 && F.is_zero(f.c[0])) {
        f = poly_divmod(F, f, poly_x(F)).first;
        ++zero_mult;
    }
    if (zero_mult > 0) out.factors.emplace_back(poly_x(F), zero_mult);

    // candidates: roots of unity, times rational candidates harvested from
    // the constant term when it is rational
    std::vector<Scalar> candidates;
    Scalar zeta = F.primitive_root_of_unity(F.unit_torsion());
    Scalar u = F.one();
    for (std::uint64_t i = 0; i < F.unit_torsion(); ++i) {
        candidates.push_back(u);
        u = F.mul(u, zeta);
    }
    std::vector<mpq_class> rationals;
    if (f.degree() > 0 && !F.is_zero(f.c[0])) {
        const auto& rep = f.c[0].cyc_rep();
        bool rational = true;
        for (std::size_t i = 1; i < rep.size(); ++i)
            if (rep[i] != 0) rational = false;
        if (rational) {
            mpz_class num = abs(rep[0].get_num()), den = abs(rep[0].get_den());
            for (mpz_class a = 1; a <= num; ++a) {
                if (num % a != 0) continue;
                for (mpz_class b = 1; b <= den; ++b) {
                    if (den % b != 0) continue;
                    rationals.emplace_back(mpq_class(a, b));
                }
            }
        }
    }
    std::vector<Scalar> full = candidates;
    for (const auto& r : rationals) {
        Scalar rs = F.from_rational(r);
        for (const auto& c : candidates) full.push_back(F.mul(rs, c));
    }
    std::sort(full.begin(), full.end());
    full.erase(std::unique(full.begin(), full.end()), full.end());

    bool progress = true;
    while (f.degree() > 1 && progress) {
        progress = false;
        for (const auto& root : full) {
            if (!F.is_zero(poly_eval(F, f, root))) continue;
            UniPoly lin = poly_linear(F, root);
            unsigned mult = 0;
            while (F.is_zero(poly_eval(F, f, root))) {
                f = poly_divmod(F, f, lin).first;
                ++mult;
            }
            out.factors.emplace_back(lin, mult);
            progress = true;
        }
    }
    if (f.degree() > 1)
        throw error("incomplete factorization: residue of degree " +
                    std::to_string(f.degree()) + " over " + F.descriptor() +
                    " is outside the linear-peeling backend");
    if (f.degree() == 1) out.factors.emplace_back(f, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_lt(a.first, b.first); });
    return out;
}

}  // namespace

FactorList poly_factor(const Field& F, const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw error("cannot factor the zero polynomial");
    if (!F.is_finite()) return factor_cyclotomic(F, f);

    FactorList out;
    out.unit = f.c.back();
    UniPoly monic = poly_make_monic(F, f);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (auto& [sq, mult] : squarefree_decomposition(F, monic)) {
        for (auto& [d, prod] : distinct_degree(F, sq)) {
            std::vector<UniPoly> irr;
            equal_degree(F, prod, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_lt(a.first, b.first); });
    return out;
}

bool poly_is_irreducible(const Field& F, const UniPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    if (!F.is_finite()) {
        FactorList fl = poly_factor(F, f);  // throws if it cannot decide
        return fl.factors.size() == 1 && fl.factors[0].second == 1;
    }
    // f irreducible of degree n iff x^{q^n} = x mod f and
    // gcd(x^{q^{n/r}} - x, f) = 1 for every prime r | n
    std::size_t n = static_cast<std::size_t>(f.degree());
    mpz_class q(static_cast<unsigned long>(F.characteristic()));
    mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(F.degree()));
    mpz_class qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    UniPoly x = poly_x(F);
    if (!poly_eq(poly_powmod(F, x, qn, f), poly_mod(F, x, f))) return false;
    for (std::size_t r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool r_prime = true;
        for (std::size_t d = 2; d * d <= r; ++d)
            if (r % d == 0) r_prime = false;
        if (!r_prime) continue;
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / r));
        UniPoly g = poly_gcd(F, poly_sub(F, poly_powmod(F, x, e, f), x), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<UniPoly> monic_irreducibles(const Field& F, std::size_t degree) {
    if (!F.is_finite()) throw error("irreducible enumeration needs a finite field");
    std::vector<UniPoly> out;
    std::vector<Scalar> elems = F.all_elements();
    std::vector<std::size_t> idx(degree, 0);
    for (;;) {
        UniPoly f;
        f.c.resize(degree + 1, F.zero());
        for (std::size_t i = 0; i < degree; ++i) f.c[i] = elems[idx[i]];
        f.c[degree] = F.one();
        if (poly_is_irreducible(F, f)) out.push_back(f);
        std::size_t k = 0;
        while (k < degree) {
            if (++idx[k] < elems.size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == degree) break;
    }
    std::sort(out.begin(), out.end(), poly_lt);
    return out;
}

Scalar q_binomial(const Field& F, unsigned n, unsigned l, const Scalar& q) {
    if (l > n) throw error("q_binomial requires l <= n");
    if (F.is_zero(q)) throw error("q_binomial requires q != 0");
    // row-by-row Pascal recursion
    std::vector<Scalar> row(1, F.one());
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Scalar> next(m + 1, F.one());
        for (unsigned j = 1; j < m; ++j)
            next[j] = F.add(row[j], F.mul(F.pow(q, static_cast<long long>(m - j)), row[j - 1]));
        row = std::move(next);
    }
    return row[l];
}

std::string poly_str(const Field& F, const UniPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (F.is_zero(f.c[i])) continue;
        std::string cs = F.str(f.c[i]);
        bool needs_parens = cs.find_first_of("+-") != std::string::npos && cs[0] != '-';
        needs_parens = needs_parens || cs.find_first_of("+") != std::string::npos;
        std::string piece;
        if (i == 0) {
            piece = needs_parens ? "(" + cs + ")" : cs;
        } else {
            std::string v = i == 1 ? std::string(1, var)
                                   : std::string(1, var) + "^" + std::to_string(i);
            if (F.is_one(f.c[i]))
                piece = v;
            else
                piece = (needs_parens ? "(" + cs + ")" : cs) + "*" + v;
        }
        if (out.empty())
            out = piece;
        else
            out += " + " + piece;
    }
    return out;
}

UniPoly poly_parse(const Field& F, const std::string& text, char var) {
    // recursive descent over +,-,*,^,(), with scalars handled by the field
    struct Parser {
        const Field& F;
        const std::string& s;
        char var;
        std::size_t pos = 0;

        void skip() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        UniPoly expr() {
            UniPoly v = term();
            for (;;) {
                if (eat('+'))
                    v = poly_add(F, v, term());
                else if (eat('-'))
                    v = poly_sub(F, v, term());
                else
                    return v;
            }
        }
        UniPoly term() {
            UniPoly v = factor();
            for (;;) {
                if (eat('*'))
                    v = poly_mul(F, v, factor());
                else if (eat('/')) {
                    UniPoly d = factor();
                    if (d.degree() != 0) throw error("polynomial division in expression");
                    v = poly_scale(F, F.inv(d.c[0]), v);
                } else
                    return v;
            }
        }
        UniPoly factor() {
            UniPoly v = base();
            if (eat('^')) {
                skip();
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (start == pos) throw error("expected exponent");
                v = poly_pow(F, v, std::stoull(s.substr(start, pos - start)));
            }
            return v;
        }
        UniPoly base() {
            skip();
            if (pos >= s.size()) throw error("unexpected end of polynomial");
            if (eat('(')) {
                UniPoly v = expr();
                if (!eat(')')) throw error("expected ')'");
                return v;
            }
            if (eat('-')) return poly_scale(F, F.from_int(-1), factor());
            char c = s[pos];
            if (c == var) {
                ++pos;
                return poly_x(F);
            }
            if (c == 'z') {
                ++pos;
                return poly_const(F, F.generator());
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                mpz_class n(s.substr(start, pos - start));
                return poly_const(F, F.from_rational(mpq_class(n)));
            }
            throw error(std::string("unexpected character '") + c + "' in polynomial");
        }
    };
    Parser p{F, text, var};
    UniPoly v = p.expr();
    p.skip();
    if (p.pos != text.size()) throw error("trailing junk in polynomial: " + text);
    return v;
}

}  // namespace hopfore
