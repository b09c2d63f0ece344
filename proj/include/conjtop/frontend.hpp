#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "conjtop/model.hpp"

namespace conjtop {

struct RunArgs {
  std::optional<std::string> h;       // hyperplane class, e.g. "(1,1)"
  std::optional<long long> chi;
  std::optional<std::string> type;
  bool h1_trivial = false;
  std::optional<std::string> cut;     // complex whose top cells form the cut chain
  std::vector<std::string> curves;    // curve subcomplexes
};

/// Outcome of one command. Every entry appears in both the human and the
/// machine section; the machine section lists keys in sorted order.
class Report {
 public:
  std::string command;
  std::string object;
  int status = 0;  // 0 pass, 1 model-integrity violation, 2 input error

  void add(const std::string& key, const std::string& value, const std::string& label = "");
  void add(const std::string& key, long long value, const std::string& label = "");
  void add_flag(const std::string& key, bool value, const std::string& label = "");
  void fail(int status, const std::string& message);

  const std::vector<std::tuple<std::string, std::string, std::string>>& entries() const noexcept { return entries_; }
  std::optional<std::string> value(const std::string& key) const;
  std::string human() const;
  std::string machine() const;
  std::string text(bool machine_only) const;

 private:
  std::vector<std::tuple<std::string, std::string, std::string>> entries_;  // key, label, value
};

const std::vector<std::string>& command_names();

/// Dispatches a command against a model. Never throws: input errors and
/// model-integrity violations are recorded in the report status.
Report run(const std::string& command, const std::string& object, const RunArgs& args, const ModelFile& model);

/// Parses "(1,0,1)", "1,0,1" or "1 0 1".
BitVector parse_class(const std::string& text);

}  // namespace conjtop
