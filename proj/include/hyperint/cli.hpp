#pragma once

// Request dispatch and report rendering for the command-line front end.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperint/options.hpp"

namespace hyperint::cli {

extern const std::vector<std::string> kCommands;

struct Request {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> declarations;  // "alpha: t^2-2"
  int vars = 0;                           // 0: inferred from the inputs
  Options opt;
};

struct Report {
  Request request;
  int vars = 0;
  bool certified = false;
  std::string error_type, error_message;  // empty on success
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::string>> lines;  // text rendering of result
  double seconds = 0;
};

Report run(const Request& req);

std::string render_text(const Report& r);
nlohmann::ordered_json render_json(const Report& r);

// One request per line: `command: input | input ...`. Lines `with name: poly`
// declare algebraic numbers for the requests below them; `#` starts a comment.
std::vector<Request> parse_batch(std::istream& in, const Request& defaults);

// 0 when every report is certified, 1 otherwise, 2 on malformed input.
int exit_code(const std::vector<Report>& reports);

}  // namespace hyperint::cli
