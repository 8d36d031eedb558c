#include "hopfore/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfore {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> parse_list(const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw error("expected a bracketed list, got: " + s);
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (t[i] == ',') {
            out.push_back(strip_quotes(trim(cur)));
            cur.clear();
        } else {
            cur += t[i];
        }
    }
    if (!trim(cur).empty()) out.push_back(strip_quotes(trim(cur)));
    return out;
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const std::string& tok : parse_list(text)) out.push_back(std::stoull(tok));
    return out;
}

InstanceConfig parse_config_text(const std::string& text) {
    InstanceConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw error("bad config line: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "field")
            cfg.field_spec = strip_quotes(value);
        else if (key == "group")
            cfg.group = parse_uint_list(value);
        else if (key == "chi")
            cfg.chi = parse_list(value);
        else if (key == "a")
            cfg.a = parse_uint_list(value);
        else if (key == "alpha")
            cfg.alpha = parse_list(value);
        else if (key == "ideal")
            cfg.ideal = strip_quotes(value);
        else if (key == "n")
            cfg.n = static_cast<unsigned>(std::stoul(value));
        else if (key == "beta")
            cfg.beta = strip_quotes(value);
        else if (key == "degree")
            cfg.degree = static_cast<unsigned>(std::stoul(value));
        else if (key == "budget")
            cfg.budget = std::stoull(value);
        else
            throw error("unknown config key: " + key);
    }
    if (cfg.field_spec.empty()) throw error("config is missing the field");
    if (cfg.group.empty()) throw error("config is missing the group");
    return cfg;
}

InstanceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

HopfPtr instantiate(const InstanceConfig& config) {
    FieldPtr F = Field::parse(config.field_spec);
    GroupPtr G = AbelianGroup::make(config.group);
    if (config.chi.size() != G->ngens())
        throw error("chi needs one image per group generator");
    std::vector<Scalar> images;
    for (const std::string& s : config.chi) images.push_back(F->parse_scalar(s));
    Character chi = make_character(G, F, std::move(images));
    GroupElement a = group_element(G, config.a);
    std::vector<Scalar> avals;
    if (config.alpha.empty()) {
        avals.assign(G->ngens(), F->zero());
    } else {
        for (const std::string& s : config.alpha) avals.push_back(F->parse_scalar(s));
    }
    Cocycle alpha = make_cocycle(G, F, std::move(avals));

    std::string ideal = config.ideal;
    ideal.erase(std::remove_if(ideal.begin(), ideal.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                ideal.end());
    QuotientSpec quotient = quotient_none();
    if (ideal == "none" || ideal.empty()) {
        quotient = quotient_none();
    } else if (ideal == "x^n") {
        if (config.n == 0) throw error("ideal x^n needs the key n");
        quotient = quotient_power_zero(config.n);
    } else if (ideal == "x^n-beta*(1-a^n)") {
        if (config.n == 0) throw error("the central power ideal needs the key n");
        quotient = quotient_power_central(config.n, F->parse_scalar(config.beta));
    } else {
        throw error("unknown ideal form: " + config.ideal);
    }
    return make_hopf(F, G, chi, a, alpha, quotient);
}

// ---- module expressions ----

namespace {

struct ExprParser {
    const HopfPtr& H;
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

    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // raw argument up to a top-level ',' or ')'
    std::string raw_argument() {
        skip();
        std::size_t depth = 0, start = pos;
        bool quoted = false;
        while (pos < s.size()) {
            char c = s[pos];
            if (quoted) {
                if (c == '"') quoted = false;
            } else if (c == '"') {
                quoted = true;
            } else if (c == '(' || c == '[') {
                ++depth;
            } else if (c == ')' || c == ']') {
                if (depth == 0) break;
                --depth;
            } else if (c == ',' && depth == 0) {
                break;
            }
            ++pos;
        }
        return s.substr(start, pos - start);
    }

    Character parse_lambda(const std::string& value) {
        std::vector<std::string> toks = parse_list(trim(value));
        if (toks.size() != H->group->ngens())
            throw error("lambda needs one image per group generator");
        std::vector<Scalar> images;
        for (const std::string& t : toks) images.push_back(H->field->parse_scalar(t));
        return make_character(H->group, H->field, std::move(images));
    }

    WeightModule expr() {
        std::string name = ident();
        if (!eat('(')) throw error("expected '(' after " + name);
        WeightModule result = call(name);
        if (!eat(')')) throw error("expected ')' closing " + name);
        return result;
    }

    WeightModule call(const std::string& name) {
        if (name == "tensor" || name == "sum") {
            WeightModule a = expr();
            if (!eat(',')) throw error(name + " needs two arguments");
            WeightModule b = expr();
            return name == "tensor" ? mod_tensor(a, b) : mod_direct_sum(a, b);
        }
        // keyword arguments
        std::map<std::string, std::string> kv;
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == ')') break;
            std::string key = ident();
            if (!eat('=')) throw error("expected '=' after " + key);
            kv[key] = trim(raw_argument());
            if (!eat(',')) break;
        }
        auto need = [&](const std::string& key) {
            auto it = kv.find(key);
            if (it == kv.end()) throw error(name + " needs the argument " + key);
            return it->second;
        };
        if (name == "V") return make_simple_onedim(H, parse_lambda(need("lambda")));
        if (name == "Vt")
            return make_serial(H, parse_lambda(need("lambda")),
                               static_cast<unsigned>(std::stoul(need("t"))));
        if (name == "Block") {
            UniPoly f = poly_parse(*H->field, strip_quotes(need("f")));
            unsigned r = kv.count("r") ? static_cast<unsigned>(std::stoul(kv["r"])) : 1;
            return make_block(H, parse_lambda(need("lambda")), f, r);
        }
        if (name == "Verma") return make_verma_quotient(H, parse_lambda(need("lambda")));
        throw error("unknown module constructor: " + name);
    }
};

}  // namespace

WeightModule parse_module_expr(const HopfPtr& H, const std::string& expr) {
    ExprParser p{H, expr};
    WeightModule m = p.expr();
    p.skip();
    if (p.pos != expr.size()) throw error("trailing junk in module expression: " + expr);
    return m;
}

std::optional<ModuleLabel> parse_label_expr(const HopfPtr& H, const std::string& expr) {
    ExprParser probe{H, expr};
    std::string name = probe.ident();
    if (name != "V" && name != "Vt" && name != "Block") return std::nullopt;
    ExprParser p{H, expr};
    p.ident();
    if (!p.eat('(')) return std::nullopt;
    std::map<std::string, std::string> kv;
    for (;;) {
        p.skip();
        if (p.pos < expr.size() && expr[p.pos] == ')') break;
        std::string key = p.ident();
        if (!p.eat('=')) return std::nullopt;
        kv[key] = trim(p.raw_argument());
        if (!p.eat(',')) break;
    }
    if (!p.eat(')')) return std::nullopt;
    p.skip();
    if (p.pos != expr.size()) return std::nullopt;
    try {
        if (name == "V") return label_simple(p.parse_lambda(kv.at("lambda")));
        if (name == "Vt")
            return label_serial(p.parse_lambda(kv.at("lambda")),
                                static_cast<unsigned>(std::stoul(kv.at("t"))));
        UniPoly f = poly_parse(*H->field, strip_quotes(kv.at("f")));
        unsigned r = kv.count("r") ? static_cast<unsigned>(std::stoul(kv["r"])) : 1;
        return label_block(H, p.parse_lambda(kv.at("lambda")), f, r);
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

}  // namespace hopfore
