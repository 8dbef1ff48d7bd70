#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperarith::cli {

using Json = nlohmann::json;

struct Options {
  bool approx = false;
  std::size_t jobs = 1;
  /// Bundled data root; relative inputs are looked up here when not found.
  std::string data_dir;
};

/// Outcome of one subcommand: the report and whether any primary verdict is No.
struct Outcome {
  Json report;
  std::string text;
  bool negative = false;
};

Outcome form_check(const std::vector<std::string>& files, const Options& opt);
Outcome form_commensurable(const std::string& first, const std::string& second, const Options& opt);
Outcome hybrid_verify(const std::vector<std::string>& files, const Options& opt);
Outcome hybrid_angle(const std::string& file, const std::string& e, const std::string& z, const Options& opt);
Outcome coxeter_analyze(const std::vector<std::string>& files, const Options& opt);
Outcome links_compose(const std::vector<std::string>& inputs, const std::string& table, const Options& opt);

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(const std::string& bytes);

std::string yes_no(bool b);

}  // namespace hyperarith::cli
