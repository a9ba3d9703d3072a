// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pointex/pointex.h"

namespace {

int exit_code(px_status s) {
  switch (s) {
    case PX_OK: return 0;
    case PX_ERR_INPUT:
    case PX_ERR_NULL: return 2;
    case PX_ERR_RESOURCE: return 4;
    default: return 3;
  }
}

std::string stem_of(const std::string& path) {
  std::string base = path.substr(path.find_last_of('/') + 1);
  std::size_t dot = base.rfind('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-variety and resolution toolkit for quadratic algebras"};
  app.set_version_flag("--version", std::string(px_version()));
  app.require_subcommand(1);

  std::string input, json_path, write_path;
  std::map<std::string, std::string> options;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", input, "presentation file")->required();
    sub->add_option("--json", json_path, "JSON report path; '-' prints JSON on stdout and text on stderr");
    for (const char* key : {"length", "cap", "order", "side", "seed", "max-degree"}) {
      std::string k = key;
      sub->add_option_function<std::string>(
          "--" + k, [&options, k](const std::string& v) { options[k == "max-degree" ? "max_degree" : k] = v; });
    }
  };

  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> help = {
      {"resolve", "linear resolutions of the trivial module, verified"},
      {"point-variety", "point varieties from the second differentials"},
      {"check-g1", "semi-standard and point-exact in degree 1; sigma samples"},
      {"check-point-exact", "rank identities on the point variety up to --max-degree"},
      {"quotient", "quotient by --element: normality, regularity, presentation"},
      {"shamash", "resolution of the quotient by --element from the ambient one"},
      {"sigma", "sigma at --point and the pointwise complex along its orbit"},
      {"report", "resolutions, point varieties, G1 and point-exactness together"}};
  for (int i = 0; i < px_subcommand_count(); ++i) {
    std::string name = px_subcommand_name(i);
    CLI::App* sub = app.add_subcommand(name, help.count(name) ? help.at(name) : name);
    add_common(sub);
    subs[name] = sub;
  }
  for (const char* name : {"resolve", "point-variety", "check-g1", "check-point-exact", "quotient", "shamash", "sigma",
                           "report"}) {
    subs[name]->add_option_function<std::string>("--element", [&options](const std::string& v) {
      options["element"] = v;
    }, name == std::string("quotient") || name == std::string("shamash") ? "element (required)" : "quotient by this element first");
  }
  subs["quotient"]->add_option("--write", write_path, "write the quotient presentation here");
  subs["sigma"]->add_option_function<std::string>("--point", [&options](const std::string& v) { options["point"] = v; },
                                                  "comma-separated coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  px_session* session = nullptr;
  px_status s = px_session_from_file(input.c_str(), &session);
  if (s != PX_OK) {
    std::cerr << "error: " << px_last_error() << "\n";
    return exit_code(s);
  }
  for (const auto& [k, v] : options) {
    s = px_set_option(session, k.c_str(), v.c_str());
    if (s != PX_OK) {
      std::cerr << "error: --" << k << ": " << px_last_error() << "\n";
      px_session_free(session);
      return exit_code(s);
    }
  }
  px_result* result = nullptr;
  s = px_run(session, subcommand.c_str(), &result);
  px_session_free(session);
  if (s != PX_OK) {
    std::cerr << "error: " << px_last_error() << "\n";
    return exit_code(s);
  }

  const std::string json = px_result_json(result), text = px_result_text(result);
  px_result_free(result);
  if (json_path == "-") {
    std::cout << json;
    std::cerr << text;
  } else {
    if (json_path.empty()) json_path = stem_of(input) + "." + subcommand + ".json";
    if (!write_file(json_path, json)) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    std::cout << text << "json: " << json_path << "\n";
  }
  if (!write_path.empty()) {
    auto doc = nlohmann::json::parse(json);
    if (!write_file(write_path, doc["results"]["presentation"].get<std::string>())) {
      std::cerr << "error: cannot write " << write_path << "\n";
      return 2;
    }
  }
  return 0;
}
