#include "hopfore/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfore {

using nlohmann::json;

namespace {

json scalar_to_json(const Field& F, const Scalar& s) {
    if (F.kind() == Field::Kind::Prime) return s.prime_rep();
    return F.str(s);
}

json character_to_json(const Character& c) {
    json out = json::array();
    for (const Scalar& im : c.images) out.push_back(scalar_to_json(*c.F, im));
    return out;
}

json config_echo(const InstanceConfig& config) {
    json j;
    j["field"] = config.field_spec;
    j["group"] = config.group;
    j["chi"] = config.chi;
    j["a"] = config.a;
    j["alpha"] = config.alpha;
    j["ideal"] = config.ideal;
    if (config.ideal != "none") {
        j["n"] = config.n;
        if (config.ideal != "x^n") j["beta"] = config.beta;
    }
    return j;
}

Report base_report(const std::string& command, const InstanceConfig& config,
                   const CommandOptions& opt) {
    Report r;
    r.doc["schema"] = 1;
    r.doc["command"] = command;
    r.doc["instance"] = config_echo(config);
    r.doc["seed"] = opt.seed;
    return r;
}

unsigned effective_degree(const InstanceConfig& config, const CommandOptions& opt) {
    return opt.degree ? opt.degree : config.degree;
}

std::uint64_t effective_budget(const InstanceConfig& config, const CommandOptions& opt) {
    return opt.budget ? opt.budget : config.budget;
}

json mat_to_json(const Field& F, const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(F, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json label_to_json(const HopfPtr& H, const ModuleLabel& label) {
    json j;
    switch (label.kind) {
        case ModuleLabel::Kind::Simple1:
            j["kind"] = "Simple1";
            j["lambda"] = character_to_json(label.lambda);
            break;
        case ModuleLabel::Kind::Serial:
            j["kind"] = "Serial";
            j["lambda"] = character_to_json(label.lambda);
            j["t"] = label.t;
            break;
        case ModuleLabel::Kind::Block:
            j["kind"] = "Block";
            j["coset"] = character_to_json(label.lambda);
            j["f"] = poly_str(*H->field, label.f);
            j["r"] = label.t;
            break;
    }
    return j;
}

json decomposition_to_json(const HopfPtr& H, const DecompositionReport& report) {
    json j;
    j["provenance"] = report.provenance;
    json parts = json::array();
    for (const auto& [label, mult] : report.parts) {
        json p;
        p["label"] = label_to_json(H, label);
        p["multiplicity"] = mult;
        p["dim"] = label_dim(H, label);
        parts.push_back(std::move(p));
    }
    j["parts"] = std::move(parts);
    if (report.witness) j["witness"] = mat_to_json(*H->field, *report.witness);
    return j;
}

std::string Report::to_json() const { return doc.dump(2) + "\n"; }

namespace {

void render(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << prefix << it.key() << ":\n";
                render(it.value(), prefix + "  ", out);
            } else {
                out << prefix << it.key() << " = " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << prefix << "-\n";
                render(v, prefix + "  ", out);
            } else {
                out << prefix << "- " << v.dump() << "\n";
            }
        }
    } else {
        out << prefix << j.dump() << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    render(doc, "", out);
    out << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

Report cmd_verify_hopf(const InstanceConfig& config, const CommandOptions& opt) {
    Report r = base_report("verify-hopf", config, opt);
    HopfPtr H = instantiate(config);
    unsigned degree = effective_degree(config, opt);
    AxiomReport axioms = verify_hopf_axioms(H, degree);
    r.doc["degree"] = degree;
    r.doc["basis_range"] = axioms.basis_range;
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // axiom -> (pass, fail)
    json failures = json::array();
    for (const auto& e : axioms.entries) {
        auto& c = counts[e.axiom];
        if (e.pass)
            ++c.first;
        else {
            ++c.second;
            json f;
            f["axiom"] = e.axiom;
            f["witness"] = e.witness;
            failures.push_back(std::move(f));
        }
    }
    json summary = json::array();
    for (const auto& [axiom, c] : counts) {
        json s;
        s["axiom"] = axiom;
        s["checked"] = c.first + c.second;
        s["failed"] = c.second;
        summary.push_back(std::move(s));
    }
    r.doc["axioms"] = std::move(summary);
    r.doc["failures"] = std::move(failures);
    r.pass = axioms.all_pass;
    r.doc["pass"] = r.pass;
    return r;
}

Report cmd_rank(const InstanceConfig& config, const CommandOptions& opt) {
    Report r = base_report("rank", config, opt);
    HopfPtr H = instantiate(config);
    unsigned degree = effective_degree(config, opt);
    RankReport rank = rank_report(H, degree);
    r.doc["degree"] = degree;
    r.doc["rank"] = rank.classification;
    r.doc["degrees_found"] = rank.degrees_found;
    r.doc["degrees_predicted"] = rank.degrees_predicted;
    json details = json::array();
    for (const auto& d : rank.details) {
        json e;
        e["g"] = group_element_str(d.g);
        e["found"] = d.found;
        e["predicted"] = d.predicted;
        details.push_back(std::move(e));
    }
    r.doc["per_grouplike"] = std::move(details);
    r.pass = rank.match;
    r.doc["pass"] = r.pass;
    return r;
}

Report cmd_primitives(const InstanceConfig& config, const CommandOptions& opt,
                      const std::vector<std::uint64_t>& g_exponents) {
    Report r = base_report("primitives", config, opt);
    HopfPtr H = instantiate(config);
    unsigned degree = effective_degree(config, opt);
    GroupElement g = group_element(H->group, g_exponents);
    std::vector<HopfElement> basis = skew_primitive_space(H, g, degree);
    r.doc["degree"] = degree;
    r.doc["g"] = group_element_str(g);
    json out = json::array();
    for (const HopfElement& z : basis) out.push_back(he_str(*H, z));
    r.doc["basis"] = std::move(out);
    r.doc["dimension"] = basis.size();
    r.doc["pass"] = true;
    return r;
}

Report cmd_list_simples(const InstanceConfig& config, const CommandOptions& opt) {
    Report r = base_report("list-simples", config, opt);
    HopfPtr H = instantiate(config);
    SimplesCensus census = list_simples(H);
    json labels = json::array();
    std::size_t onedim = 0, block = 0;
    for (const ModuleLabel& l : census.simples) {
        labels.push_back(label_to_json(H, l));
        if (l.kind == ModuleLabel::Kind::Simple1)
            ++onedim;
        else
            ++block;
    }
    r.doc["simples"] = std::move(labels);
    r.doc["one_dimensional_count"] = onedim;
    r.doc["block_count"] = block;
    r.doc["character_count"] = census.character_count;
    r.doc["coset_count"] = census.coset_count;
    if (census.block_family)
        r.doc["block_family"] =
            "V(sigma, f) for each coset and each monic irreducible f != y";
    r.doc["pass"] = true;
    return r;
}

Report cmd_classify(const InstanceConfig& config, const CommandOptions& opt,
                    const std::string& module_expr) {
    Report r = base_report("classify", config, opt);
    HopfPtr H = instantiate(config);
    WeightModule M = parse_module_expr(H, module_expr);
    r.doc["module"] = module_expr;
    r.doc["module_dim"] = M.dim();
    DecompositionReport dec = classify(M, opt.seed);
    r.doc["decomposition"] = decomposition_to_json(H, dec);
    bool ok = dec.total_dim(H) == M.dim();
    if (opt.with_oracle) {
        OracleSplit split = oracle_split(M, opt.seed);
        r.doc["oracle_block_dims"] = split.block_dims;
        std::vector<std::size_t> dims;
        for (const auto& [label, mult] : dec.parts)
            for (unsigned k = 0; k < mult; ++k) dims.push_back(label_dim(H, label));
        std::sort(dims.begin(), dims.end());
        r.doc["classified_block_dims"] = dims;
        ok = ok && dims == split.block_dims;
    }
    r.pass = ok;
    r.doc["pass"] = r.pass;
    return r;
}

Report cmd_tensor(const InstanceConfig& config, const CommandOptions& opt,
                  const std::string& expr_a, const std::string& expr_b) {
    Report r = base_report("tensor", config, opt);
    HopfPtr H = instantiate(config);
    WeightModule A = parse_module_expr(H, expr_a);
    WeightModule B = parse_module_expr(H, expr_b);
    r.doc["left"] = expr_a;
    r.doc["right"] = expr_b;
    WeightModule T = mod_tensor(A, B);
    r.doc["tensor_dim"] = T.dim();
    DecompositionReport dec = classify(T, opt.seed);
    r.doc["decomposition"] = decomposition_to_json(H, dec);

    bool ok = dec.total_dim(H) == T.dim();
    auto la = parse_label_expr(H, expr_a);
    auto lb = parse_label_expr(H, expr_b);
    if (la && lb) {
        if (auto predicted = predicted_tensor(H, *la, *lb)) {
            r.doc["predicted"] = decomposition_to_json(H, *predicted);
            bool agree = predicted->same_labels(dec);
            r.doc["prediction_matches"] = agree;
            ok = ok && agree;
        } else {
            r.doc["predicted"] = "unsupported";
        }
    }
    if (opt.with_oracle) {
        OracleSplit split = oracle_split(T, opt.seed);
        r.doc["oracle_block_dims"] = split.block_dims;
        std::vector<std::size_t> dims;
        for (const auto& [label, mult] : dec.parts)
            for (unsigned k = 0; k < mult; ++k) dims.push_back(label_dim(H, label));
        std::sort(dims.begin(), dims.end());
        ok = ok && dims == split.block_dims;
    }
    r.pass = ok;
    r.doc["pass"] = r.pass;
    return r;
}

Report cmd_series(const InstanceConfig& config, const CommandOptions& opt,
                  const std::string& module_expr) {
    Report r = base_report("series", config, opt);
    HopfPtr H = instantiate(config);
    WeightModule M = parse_module_expr(H, module_expr);
    r.doc["module"] = module_expr;
    SeriesReport s = series(M, opt.seed);
    r.doc["radical_dims"] = s.radical_dims;
    r.doc["socle_dims"] = s.socle_dims;
    r.doc["radical_length"] = s.radical_length;
    json layers = json::array();
    for (const auto& layer : s.radical_layers) {
        json l = json::array();
        for (const auto& [label, mult] : layer) {
            json e;
            e["label"] = label_to_json(H, label);
            e["multiplicity"] = mult;
            l.push_back(std::move(e));
        }
        layers.push_back(std::move(l));
    }
    r.doc["radical_layers"] = std::move(layers);
    bool ok = true;
    if (opt.with_oracle) {
        std::uint64_t budget = effective_budget(config, opt);
        Mat orad = oracle_radical(M, budget);
        Mat osoc = oracle_socle(M, budget);
        Mat arad = radical(M, opt.seed);
        Mat asoc = socle(M, opt.seed);
        r.doc["oracle_radical_dim"] = orad.rows;
        r.doc["oracle_socle_dim"] = osoc.rows;
        ok = orad == arad && osoc == asoc;
        r.doc["oracle_agrees"] = ok;
    }
    r.pass = ok;
    r.doc["pass"] = r.pass;
    return r;
}

Report cmd_projectives(const InstanceConfig& config, const CommandOptions& opt) {
    Report r = base_report("projectives", config, opt);
    HopfPtr H = instantiate(config);
    std::vector<ProjectiveEntry> table = projectives_report(H);
    json rows = json::array();
    for (const auto& e : table) {
        json row;
        row["simple"] = label_to_json(H, e.simple);
        row["cover"] = label_to_json(H, e.cover);
        rows.push_back(std::move(row));
    }
    r.doc["covers"] = std::move(rows);
    r.doc["pass"] = true;
    return r;
}

}  // namespace hopfore
