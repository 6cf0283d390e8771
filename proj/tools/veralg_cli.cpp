#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "veralg/error.hpp"
#include "veralg/report.hpp"

namespace fs = std::filesystem;
using veralg::Error;
using nlohmann::json;

namespace {

std::vector<fs::path> configs_in(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".datum") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contragredient Lie algebras and their semisimplification in Ver_p"};
  std::string command, config, format = "text", golden, write_golden;
  std::optional<int> i, p;
  bool all = false;
  app.add_option("command", command, "roots | build | decompose | semisimplify | check")
      ->required()
      ->check(CLI::IsMember({"roots", "build", "decompose", "semisimplify", "check"}));
  app.add_option("config", config, ".datum file, or a directory with --all");
  app.add_option("--i", i, "distinguished index (1-based)");
  app.add_option("-p", p, "reduce the matrix modulo this prime instead");
  app.add_option("--format", format, "output format (default text)")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--golden", golden, "compare against a golden report");
  app.add_option("--write-golden", write_golden, "write the JSON report to this path");
  app.add_flag("--all", all, "check every .datum file in the directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    veralg::RunFlags flags{i, p};
    json rep;
    if (all) {
      if (command != "check") throw Error(veralg::ErrorCode::InvalidArgument, "--all only works with check");
      const fs::path dir = config.empty() ? fs::path("data") : fs::path(config);
      rep = {{"command", "check"}, {"configs", json::object()}};
      bool ok = true;
      for (const auto& path : configs_in(dir)) {
        auto r = veralg::run_report("check", veralg::parse_config(path.string()), flags);
        ok = ok && veralg::report_ok(r);
        rep["configs"][path.stem().string()] = r["check"];
      }
      rep["check"] = {{"ok", ok}};
    } else {
      if (config.empty()) throw Error(veralg::ErrorCode::InvalidArgument, "missing config path");
      rep = veralg::run_report(command, veralg::parse_config(config), flags);
    }

    std::cout << (format == "json" ? veralg::render_json(rep) : veralg::render_text(rep));
    if (!write_golden.empty()) {
      std::ofstream out(write_golden, std::ios::binary);
      out << veralg::render_json(rep);
    }
    int code = veralg::report_ok(rep) ? 0 : 1;
    if (!golden.empty()) {
      const auto diff = veralg::compare_golden(rep, golden);
      for (const auto& d : diff) std::cerr << "golden: " << d << "\n";
      if (!diff.empty()) code = 1;
    }
    return code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
