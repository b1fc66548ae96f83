#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgecol/driver.hpp"
#include "edgecol/io.hpp"
#include "edgecol/pipeline.hpp"

namespace edgecol {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int improper = 1;
inline constexpr int input = 2;
inline constexpr int hypothesis = 3;
inline constexpr int pipeline = 4;
}  // namespace exit_code

nlohmann::ordered_json to_json(const PipelineReport& r);
nlohmann::ordered_json to_json(const ReductionTrace& t);

struct ColorOutcome {
  int exit = exit_code::ok;
  nlohmann::ordered_json report;
  std::optional<ColoringFile> coloring;
};

ColorOutcome color_graph(const SimpleGraph& g, const ConstantsProfile& profile, std::uint64_t seed, bool timing);

struct VerifyOutcome {
  int exit = exit_code::ok;
  nlohmann::ordered_json report;
};

// Input errors (edges missing from g) are reported with exit code 2.
VerifyOutcome verify_coloring(const SimpleGraph& g, const ColoringFile& c);

// FNV-1a of the name, used to seed bench instances.
std::uint64_t seed_from_name(const std::string& name);

nlohmann::ordered_json bench_directory(const std::string& dir, const ConstantsProfile& profile, std::uint64_t seed,
                                       int jobs, bool timing);

// Entry point behind the edgecol binary; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgecol
