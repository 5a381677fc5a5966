#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "branchcheck/polyring.hpp"
#include "branchcheck/report.hpp"

namespace branchcheck {

struct Transcription {
    std::string name;
    std::string vars;  // xi, x or t
    std::string expr;
};

/// Reads `name | vars | expr` lines; '#' starts a comment line.
std::vector<Transcription> read_transcriptions(const std::filesystem::path& file);
/// Reads `key = rendering` lines.
std::map<std::string, std::string> read_canonical(const std::filesystem::path& file);

/// Dimensions for which the xi entries are instantiated.
inline const std::vector<int>& golden_dimensions() {
    static const std::vector<int> dims{3, 5};
    return dims;
}

/// Computed value behind a golden key such as so.n03.Q.F2, ortho.C3, diag.P2.
GeoPoly golden_value(const std::string& key);
/// All keys, sorted.
std::vector<std::string> golden_keys();

/// Renders every computed golden as `key = rendering` lines.
std::string render_canonical();

/// For each key: parsed transcription, computed value and frozen rendering in
/// dir/canonical.txt must agree byte for byte.
Records verify_goldens(const std::filesystem::path& dir);

}  // namespace branchcheck
