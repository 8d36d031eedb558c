// Instance configuration: a flat key-value text format (one assignment per
// line, '#' comments) naming the field, the group, the character chi, the
// grouplike a, the cocycle alpha, and the quotient ideal; plus the tiny
// prefix grammar for module expressions.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfore/module.hpp"

namespace hopfore {

struct InstanceConfig {
    std::string field_spec;                 // field = "Fp(5)"
    std::vector<std::uint64_t> group;       // group = [4] or [2, 8]
    std::vector<std::string> chi;           // chi = [2] (field literals)
    std::vector<std::uint64_t> a;           // a = [1] (exponent vector)
    std::vector<std::string> alpha;         // alpha = [0]
    std::string ideal = "none";             // "none" | "x^n" | "x^n - beta*(1-a^n)"
    unsigned n = 0;
    std::string beta = "1";
    unsigned degree = 8;                    // default degree cap
    std::uint64_t budget = 500000;          // oracle budget
};

InstanceConfig parse_config_text(const std::string& text);
InstanceConfig load_config(const std::string& path);

// builds the validated presentation, reporting the violated constraint on
// failure
HopfPtr instantiate(const InstanceConfig& config);

// module expressions: V(lambda=[3]) | Vt(lambda=[1], t=4) |
// Block(lambda=[3], f="y-2", r=1) | tensor(A, B) | sum(A, B)
WeightModule parse_module_expr(const HopfPtr& H, const std::string& expr);
// the label of a plain constructor expression, when the expression is one
std::optional<ModuleLabel> parse_label_expr(const HopfPtr& H, const std::string& expr);

std::vector<std::uint64_t> parse_uint_list(const std::string& text);

}  // namespace hopfore
