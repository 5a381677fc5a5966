#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "branchcheck/report.hpp"
#include "branchcheck/so_pair.hpp"

namespace branchcheck {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Bad flags or unmet preconditions; the CLI exits with status 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Scenario { so_pair, diag_pair, branching, ortho, all };
std::string_view scenario_name(Scenario s);

struct RunConfig {
    Scenario scenario = Scenario::all;
    int n = 3;
    int max_degree = 8;
    std::optional<Rational> lambda;  // nullopt: formal
    std::optional<Rational> mu;
    int N = 3;
    int cutoff = 8;
    std::uint64_t seed = 0;
    int property_cases = 200;
    std::filesystem::path golden_dir;
};

/// Truncated series check sum_{j<=J} q^j (1-q)^{-(n-1)} = (1-q)^{-n} through q^J.
VerificationRecord hilbert_check(int n, int J, std::string_view anchor = "so-pair/branching-character");
/// Coefficients of q^0..q^J of (1-q)^{-m}.
std::vector<Integer> inverse_power_series(int m, int J);

struct DiracReport {
    std::string lhs;               // (lambda, rho(n_-))
    std::vector<std::string> rhs;  // (lambda - j, rho(n_-')), j = 0..J
    Records records;
};
/// Generic-lambda weight labels and the ef + fe = Cas - h^2/2 record. Throws
/// usage_error naming the first vanishing ladder constant when lambda is not
/// generic up to J.
DiracReport dirac_weights(const SoPairContext& ctx, int J);

struct RunResult {
    Records records;  // sorted by check-id
    std::vector<std::string> notes;  // human-readable lines for the text report
    int exit_code = 0;
};

/// Runs the configured scenario. Throws usage_error on invalid configs.
RunResult run_suite(const RunConfig& config);

std::string report_text(const RunConfig& config, const RunResult& result);
std::string report_json(const RunConfig& config, const RunResult& result);

/// Parses "formal" (nullopt) or a rational such as -3/2.
std::optional<Rational> parse_parameter(const std::string& text);

}  // namespace branchcheck
