#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "veralg/config.hpp"

namespace veralg {

struct RunFlags {
  std::optional<int> i;  // 1-based, overrides the config
  std::optional<int> p;  // reduce the datum modulo another prime
};

// command in {roots, build, decompose, semisimplify, check}. Each stage includes the
// ones before it. Throws InvalidArgument for an unknown command or a missing i.
nlohmann::json run_report(const std::string& command, const DatumConfig& cfg, const RunFlags& flags = {});

// Overall verdict of a check report (true for the other commands).
bool report_ok(const nlohmann::json& report);

std::string render_text(const nlohmann::json& report);
std::string render_json(const nlohmann::json& report);

// One line per differing leaf, "path: expected X, got Y". Empty on a match.
std::vector<std::string> json_diff(const nlohmann::json& expected, const nlohmann::json& actual);
// Throws GoldenMissing when the file is absent, ParseError when it is not JSON.
std::vector<std::string> compare_golden(const nlohmann::json& report, const std::string& golden_path);

}  // namespace veralg
