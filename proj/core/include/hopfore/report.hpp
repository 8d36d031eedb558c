// Structured reports for the CLI commands. Reports are byte-identical for a
// fixed (config, command, seed); wall-clock timing never enters the document.

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hopfore/analysis.hpp"
#include "hopfore/config.hpp"
#include "hopfore/oracle.hpp"

namespace hopfore {

struct Report {
    nlohmann::json doc;
    bool pass = true;

    std::string to_json() const;
    std::string to_text() const;
};

struct CommandOptions {
    std::uint64_t seed = 0;
    unsigned degree = 0;  // 0: use the config default
    bool with_oracle = false;
    std::uint64_t budget = 0;  // 0: use the config default
};

Report cmd_verify_hopf(const InstanceConfig& config, const CommandOptions& opt);
Report cmd_rank(const InstanceConfig& config, const CommandOptions& opt);
Report cmd_primitives(const InstanceConfig& config, const CommandOptions& opt,
                      const std::vector<std::uint64_t>& g_exponents);
Report cmd_list_simples(const InstanceConfig& config, const CommandOptions& opt);
Report cmd_classify(const InstanceConfig& config, const CommandOptions& opt,
                    const std::string& module_expr);
Report cmd_tensor(const InstanceConfig& config, const CommandOptions& opt,
                  const std::string& expr_a, const std::string& expr_b);
Report cmd_series(const InstanceConfig& config, const CommandOptions& opt,
                  const std::string& module_expr);
Report cmd_projectives(const InstanceConfig& config, const CommandOptions& opt);

nlohmann::json label_to_json(const HopfPtr& H, const ModuleLabel& label);
nlohmann::json decomposition_to_json(const HopfPtr& H, const DecompositionReport& report);

}  // namespace hopfore
