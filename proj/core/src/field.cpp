#include "hopfore/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopfore {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed residues
    long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw error("not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

// ---- F_p[t] on raw coefficient vectors (ascending, trimmed) ----

using PVec = std::vector<std::uint64_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec psub(const PVec& a, const PVec& b, std::uint64_t p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        r[i] = (av + p - bv) % p;
    }
    ptrim(r);
    return r;
}

PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

// a = q*b + r with deg r < deg b
std::pair<PVec, PVec> pdivmod(PVec a, const PVec& b, std::uint64_t p) {
    if (b.empty()) throw error("polynomial division by zero");
    PVec q;
    std::uint64_t binv = mod_inv(b.back(), p);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        std::uint64_t c = (a.back() * binv) % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
        ptrim(a);
        if (a.size() < b.size()) break;
    }
    ptrim(q);
    return {q, a};
}

// ---- Q[t] helpers for the cyclotomic kind ----

using QVec = std::vector<mpq_class>;

void qtrim(QVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec qmul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

std::pair<QVec, QVec> qdivmod(QVec a, const QVec& b) {
    if (b.empty()) throw error("polynomial division by zero");
    QVec q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
        if (a.size() < b.size()) break;
    }
    qtrim(q);
    return {q, a};
}

// Phi_n via x^n - 1 = prod_{d | n} Phi_d
QVec cyclotomic_polynomial(std::uint64_t n) {
    QVec f(n + 1, mpq_class(0));
    f[0] = -1;
    f[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        QVec phi_d = cyclotomic_polynomial(d);
        auto [q, r] = qdivmod(f, phi_d);
        if (!r.empty()) throw error("internal: cyclotomic division not exact");
        f = q;
    }
    return f;
}

}  // namespace

// ---- Scalar ----

bool Scalar::operator==(const Scalar& o) const { return rep_ == o.rep_; }

bool Scalar::operator<(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) return rep_.index() < o.rep_.index();
    if (std::holds_alternative<PrimeRep>(rep_))
        return std::get<PrimeRep>(rep_) < std::get<PrimeRep>(o.rep_);
    if (std::holds_alternative<ExtRep>(rep_))
        return std::get<ExtRep>(rep_) < std::get<ExtRep>(o.rep_);
    const auto& a = std::get<CycRep>(rep_);
    const auto& b = std::get<CycRep>(o.rep_);
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---- Field construction ----

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw error("field characteristic must be prime: " + std::to_string(p));
    if (p >= (1ull << 31)) throw error("prime too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->char_ = f->p_ = p;
    f->degree_ = 1;
    return f;
}

FieldPtr Field::extension(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    if (!is_prime_u64(p)) throw error("field characteristic must be prime: " + std::to_string(p));
    PVec m = modulus;
    for (auto& c : m) c %= p;
    ptrim(m);
    if (m.size() < 3) throw error("extension modulus must have degree >= 2");
    if (m.back() != 1) throw error("extension modulus must be monic");
    std::size_t d = m.size() - 1;

    // certify irreducibility by trial division over all monic divisors of
    // degree <= d/2 (the fields in play are tiny)
    double candidates = 1;
    for (std::size_t k = 0; k <= d / 2; ++k) candidates *= static_cast<double>(p);
    if (candidates > 2e6) throw error("extension modulus too large to certify irreducible");
    for (std::size_t dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < dd; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PVec cand(dd + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t k = 0; k < dd; ++k) {
                cand[k] = t % p;
                t /= p;
            }
            cand[dd] = 1;
            if (pdivmod(m, cand, p).second.empty())
                throw error("extension modulus is reducible");
        }
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Extension;
    f->char_ = f->p_ = p;
    f->degree_ = d;
    f->ext_modulus_ = std::move(m);
    return f;
}

FieldPtr Field::cyclotomic(std::uint64_t n) {
    if (n < 1) throw error("cyclotomic index must be >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Cyclotomic;
    f->char_ = 0;
    f->cyc_n_ = n;
    f->cyc_modulus_ = cyclotomic_polynomial(n);
    f->degree_ = f->cyc_modulus_.size() - 1;
    return f;
}

std::uint64_t Field::order() const {
    if (!is_finite()) throw error("field is infinite");
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < degree_; ++i) o *= p_;
    return o;
}

std::uint64_t Field::unit_torsion() const {
    if (is_finite()) return order() - 1;
    return cyc_n_ % 2 == 0 ? cyc_n_ : 2 * cyc_n_;
}

std::string Field::descriptor() const {
    switch (kind_) {
        case Kind::Prime:
            return "Fp(" + std::to_string(p_) + ")";
        case Kind::Extension: {
            std::string m;
            for (std::size_t i = ext_modulus_.size(); i-- > 0;) {
                if (ext_modulus_[i] == 0) continue;
                if (!m.empty()) m += " + ";
                std::string c = std::to_string(ext_modulus_[i]);
                if (i == 0)
                    m += c;
                else {
                    m += (ext_modulus_[i] == 1 ? "" : c + "*");
                    m += i == 1 ? "z" : "z^" + std::to_string(i);
                }
            }
            return "Fq(" + std::to_string(p_) + ", " + m + ")";
        }
        case Kind::Cyclotomic:
            return "QZeta(" + std::to_string(cyc_n_) + ")";
    }
    return "?";
}

// ---- element construction / reduction ----

Scalar Field::reduce_ext(std::vector<std::uint64_t> c) const {
    for (auto& v : c) v %= p_;
    ptrim(c);
    PVec r = pdivmod(std::move(c), ext_modulus_, p_).second;
    r.resize(degree_, 0);
    return Scalar(std::move(r));
}

Scalar Field::reduce_cyc(std::vector<mpq_class> c) const {
    qtrim(c);
    QVec r = qdivmod(std::move(c), cyc_modulus_).second;
    r.resize(degree_, mpq_class(0));
    return Scalar(std::move(r));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    switch (kind_) {
        case Kind::Prime: {
            long long m = v % static_cast<long long>(p_);
            if (m < 0) m += static_cast<long long>(p_);
            return Scalar(static_cast<std::uint64_t>(m));
        }
        case Kind::Extension: {
            long long m = v % static_cast<long long>(p_);
            if (m < 0) m += static_cast<long long>(p_);
            Scalar::ExtRep r(degree_, 0);
            r[0] = static_cast<std::uint64_t>(m);
            return Scalar(std::move(r));
        }
        case Kind::Cyclotomic: {
            Scalar::CycRep r(degree_, mpq_class(0));
            r[0] = mpq_class(static_cast<long>(v));
            return Scalar(std::move(r));
        }
    }
    throw error("bad kind");
}

Scalar Field::from_rational(const mpq_class& v) const {
    if (kind_ != Kind::Cyclotomic) {
        // reduce exactly: numerator * denominator^{-1} mod p
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class pz(static_cast<unsigned long>(p_));
        mpz_class nm = num % pz;
        if (nm < 0) nm += pz;
        mpz_class dm = den % pz;
        if (dm == 0) throw error("denominator divisible by the characteristic");
        std::uint64_t n64 = nm.get_ui();
        std::uint64_t d64 = dm.get_ui();
        std::uint64_t val = (n64 * mod_inv(d64, p_)) % p_;
        if (kind_ == Kind::Prime) return Scalar(val);
        Scalar::ExtRep r(degree_, 0);
        r[0] = val;
        return Scalar(std::move(r));
    }
    Scalar::CycRep r(degree_, mpq_class(0));
    r[0] = v;
    return Scalar(std::move(r));
}

Scalar Field::generator() const {
    switch (kind_) {
        case Kind::Prime:
            throw error("prime field has no generator z");
        case Kind::Extension: {
            Scalar::ExtRep r(degree_, 0);
            if (degree_ < 2) throw error("bad degree");
            r[1] = 1;
            return Scalar(std::move(r));
        }
        case Kind::Cyclotomic: {
            if (degree_ == 1) {
                // Q(zeta_1) = Q(zeta_2) = Q: z is rational
                return from_int(cyc_n_ == 1 ? 1 : -1);
            }
            Scalar::CycRep r(degree_, mpq_class(0));
            r[1] = 1;
            return Scalar(std::move(r));
        }
    }
    throw error("bad kind");
}

// ---- arithmetic ----

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case Kind::Prime:
            return Scalar((a.prime_rep() + b.prime_rep()) % p_);
        case Kind::Extension: {
            Scalar::ExtRep r(degree_);
            for (std::size_t i = 0; i < degree_; ++i)
                r[i] = (a.ext_rep()[i] + b.ext_rep()[i]) % p_;
            return Scalar(std::move(r));
        }
        case Kind::Cyclotomic: {
            Scalar::CycRep r(degree_);
            for (std::size_t i = 0; i < degree_; ++i) r[i] = a.cyc_rep()[i] + b.cyc_rep()[i];
            return Scalar(std::move(r));
        }
    }
    throw error("bad kind");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    switch (kind_) {
        case Kind::Prime:
            return Scalar(a.prime_rep() == 0 ? 0 : p_ - a.prime_rep());
        case Kind::Extension: {
            Scalar::ExtRep r(degree_);
            for (std::size_t i = 0; i < degree_; ++i)
                r[i] = a.ext_rep()[i] == 0 ? 0 : p_ - a.ext_rep()[i];
            return Scalar(std::move(r));
        }
        case Kind::Cyclotomic: {
            Scalar::CycRep r(degree_);
            for (std::size_t i = 0; i < degree_; ++i) r[i] = -a.cyc_rep()[i];
            return Scalar(std::move(r));
        }
    }
    throw error("bad kind");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case Kind::Prime:
            return Scalar((a.prime_rep() * b.prime_rep()) % p_);
        case Kind::Extension:
            return reduce_ext(pmul(a.ext_rep(), b.ext_rep(), p_));
        case Kind::Cyclotomic:
            return reduce_cyc(qmul(a.cyc_rep(), b.cyc_rep()));
    }
    throw error("bad kind");
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw error("division by zero");
    switch (kind_) {
        case Kind::Prime:
            return Scalar(mod_inv(a.prime_rep(), p_));
        case Kind::Extension: {
            // extended Euclid in F_p[t] against the modulus
            PVec r0 = ext_modulus_, r1 = a.ext_rep();
            ptrim(r1);
            PVec s0 = {}, s1 = {1};
            while (!r1.empty()) {
                auto [q, r2] = pdivmod(r0, r1, p_);
                PVec s2 = psub(s0, pmul(q, s1, p_), p_);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            if (r0.size() != 1) throw error("not invertible");
            std::uint64_t c = mod_inv(r0[0], p_);
            for (auto& v : s0) v = (v * c) % p_;
            return reduce_ext(std::move(s0));
        }
        case Kind::Cyclotomic: {
            QVec r0 = cyc_modulus_, r1 = a.cyc_rep();
            qtrim(r1);
            QVec s0 = {}, s1 = {mpq_class(1)};
            while (!r1.empty()) {
                auto [q, r2] = qdivmod(r0, r1);
                QVec prod = qmul(q, s1);
                QVec s2(std::max(s0.size(), prod.size()), mpq_class(0));
                for (std::size_t i = 0; i < s2.size(); ++i) {
                    if (i < s0.size()) s2[i] += s0[i];
                    if (i < prod.size()) s2[i] -= prod[i];
                }
                qtrim(s2);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            if (r0.size() != 1) throw error("not invertible");
            mpq_class c = 1 / r0[0];
            for (auto& v : s0) v *= c;
            return reduce_cyc(std::move(s0));
        }
    }
    throw error("bad kind");
}

Scalar Field::pow(const Scalar& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar base = a, r = one();
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue > 0) {
        if (ue & 1) r = mul(r, base);
        base = mul(base, base);
        ue >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> Field::mult_order(const Scalar& a, std::uint64_t bound) const {
    if (is_zero(a)) throw error("zero has no multiplicative order");
    if (bound == 0) bound = unit_torsion();
    Scalar v = a;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (is_one(v)) return k;
        v = mul(v, a);
    }
    return std::nullopt;
}

Scalar Field::primitive_root_of_unity(std::uint64_t n) const {
    if (n == 0) throw error("root-of-unity order must be positive");
    if (n == 1) return one();
    if (char_ != 0 && n % char_ == 0)
        throw error("no primitive " + std::to_string(n) +
                    "-th root of unity in characteristic " + std::to_string(char_));
    if (is_finite()) {
        std::uint64_t m = order() - 1;
        if (m % n != 0)
            throw error("no primitive " + std::to_string(n) + "-th root of unity in " +
                        descriptor());
        for (const Scalar& c : all_elements()) {
            if (is_zero(c)) continue;
            if (auto o = mult_order(c, n); o && *o == n) return c;
        }
        throw error("internal: root scan failed");
    }
    std::uint64_t m = unit_torsion();  // the roots of unity include -1
    if (m % n != 0)
        throw error("no primitive " + std::to_string(n) + "-th root of unity in " + descriptor());
    Scalar u = cyc_n_ % 2 == 0 ? generator() : neg(generator());  // order m
    return pow(u, static_cast<long long>(m / n));
}

std::vector<Scalar> Field::all_elements() const {
    if (!is_finite()) throw error("cannot enumerate an infinite field");
    std::vector<Scalar> out;
    std::uint64_t total = order();
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (kind_ == Kind::Prime) {
            out.push_back(Scalar(idx));
        } else {
            Scalar::ExtRep r(degree_, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < degree_; ++i) {
                r[i] = t % p_;
                t /= p_;
            }
            out.push_back(Scalar(std::move(r)));
        }
    }
    return out;
}

// ---- formatting ----

namespace {

std::string term_str(const std::string& coeff, bool coeff_is_one, std::size_t i) {
    if (i == 0) return coeff;
    std::string v = i == 1 ? "z" : "z^" + std::to_string(i);
    return coeff_is_one ? v : coeff + "*" + v;
}

}  // namespace

std::string Field::str(const Scalar& a) const {
    switch (kind_) {
        case Kind::Prime:
            return std::to_string(a.prime_rep());
        case Kind::Extension: {
            std::string out;
            for (std::size_t i = degree_; i-- > 0;) {
                std::uint64_t c = a.ext_rep()[i];
                if (c == 0) continue;
                if (!out.empty()) out += " + ";
                out += term_str(std::to_string(c), c == 1, i);
            }
            return out.empty() ? "0" : out;
        }
        case Kind::Cyclotomic: {
            std::string out;
            for (std::size_t i = degree_; i-- > 0;) {
                const mpq_class& c = a.cyc_rep()[i];
                if (c == 0) continue;
                bool neg_c = c < 0;
                mpq_class abs_c = neg_c ? mpq_class(-c) : c;
                std::string piece = term_str(abs_c.get_str(), abs_c == 1, i);
                if (out.empty())
                    out = (neg_c ? "-" : "") + piece;
                else
                    out += (neg_c ? " - " : " + ") + piece;
            }
            return out.empty() ? "0" : out;
        }
    }
    throw error("bad kind");
}

// ---- scalar expression parsing ----

namespace {

struct ScalarParser {
    const Field& F;
    const std::string& s;
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

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v = F.add(v, term());
            else if (eat('-'))
                v = F.sub(v, term());
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*'))
                v = F.mul(v, factor());
            else if (eat('/'))
                v = F.div(v, factor());
            else
                return v;
        }
    }

    Scalar factor() {
        Scalar v = base();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw error("expected exponent in scalar expression");
            v = F.pow(v, std::stoll(s.substr(start, pos - start)));
        }
        return v;
    }

    Scalar base() {
        skip();
        if (pos >= s.size()) throw error("unexpected end of scalar expression");
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) throw error("expected ')' in scalar expression");
            return v;
        }
        if (eat('-')) return F.neg(factor());
        char c = s[pos];
        if (c == 'z') {
            ++pos;
            return F.generator();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class n(s.substr(start, pos - start));
            return F.from_rational(mpq_class(n));
        }
        throw error(std::string("unexpected character '") + c + "' in scalar expression");
    }
};

}  // namespace

Scalar Field::parse_scalar(const std::string& text) const {
    ScalarParser p{*this, text};
    Scalar v = p.expr();
    p.skip();
    if (p.pos != text.size()) throw error("trailing junk in scalar expression: " + text);
    return v;
}

FieldPtr Field::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw error("bad field spec: " + spec);
    std::string name = s.substr(0, open);
    std::string args = s.substr(open + 1, s.size() - open - 2);
    if (name == "Fp") return prime(std::stoull(args));
    if (name == "QZeta") return cyclotomic(std::stoull(args));
    if (name == "Fq") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw error("Fq needs a characteristic and a modulus");
        std::uint64_t p = std::stoull(args.substr(0, comma));
        std::string mtext = args.substr(comma + 1);
        // modulus in y or z over F_p: parse coefficientwise
        FieldPtr fp = prime(p);
        for (auto& ch : mtext)
            if (ch == 'y') ch = 'z';
        // parse as a polynomial in z over the *prime* field by collecting
        // monomial terms: reuse the scalar parser over a dummy big extension
        // would be circular, so do a tiny monomial-sum parse here
        std::vector<std::uint64_t> coeffs;
        std::size_t i = 0;
        int sign = 1;
        auto add_term = [&](std::uint64_t c, std::size_t deg) {
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
            std::uint64_t cur = coeffs[deg];
            std::uint64_t cm = c % p;
            coeffs[deg] = sign > 0 ? (cur + cm) % p : (cur + p - cm) % p;
        };
        while (i < mtext.size()) {
            char c = mtext[i];
            if (c == '+') {
                sign = 1;
                ++i;
                continue;
            }
            if (c == '-') {
                sign = -1;
                ++i;
                continue;
            }
            std::uint64_t coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i;
                while (i < mtext.size() && std::isdigit(static_cast<unsigned char>(mtext[i]))) ++i;
                coeff = std::stoull(mtext.substr(start, i - start));
                if (i < mtext.size() && mtext[i] == '*') ++i;
            }
            std::size_t deg = 0;
            if (i < mtext.size() && mtext[i] == 'z') {
                ++i;
                deg = 1;
                if (i < mtext.size() && mtext[i] == '^') {
                    ++i;
                    std::size_t start = i;
                    while (i < mtext.size() && std::isdigit(static_cast<unsigned char>(mtext[i])))
                        ++i;
                    deg = std::stoull(mtext.substr(start, i - start));
                }
            }
            add_term(coeff, deg);
        }
        return extension(p, coeffs);
    }
    throw error("unknown field kind: " + name);
}

}  // namespace hopfore
