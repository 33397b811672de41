#ifndef GLTD_TOOLS_CLI_HPP
#define GLTD_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gltd/ktheory.hpp"

namespace gltd::cli {

enum class Verb { Components, KGroup, Llc, BaseChange, AutoInduce, KMap, RepringBc };
enum class Format { Json, Table };
enum class HomKind { BaseChange, AutoInduce };

const char* to_string(Verb v) noexcept;

/// Bad command line: unknown verb or flag, missing or invalid option, or an
/// unreadable payload. The message names the offending flag.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Command {
  Verb verb = Verb::Components;
  Format format = Format::Json;

  std::optional<Field> field;
  std::optional<int> n;
  std::optional<int> max_label;
  std::optional<int> degree;
  std::optional<HomKind> map;

  // Payload documents: --param, --point, --class, --element.
  std::optional<nlohmann::json> param;
  std::optional<nlohmann::json> point;
  std::optional<nlohmann::json> kclass;
  std::optional<nlohmann::json> element;
};

/// Parses arguments (without the program name). A payload given as "-" is
/// read from `stdin_source`, "@path" from a file, anything else as inline
/// JSON. Throws UsageError.
Command parse_command(const std::vector<std::string>& args, std::istream& stdin_source);

/// Runs the command. Library errors propagate as gltd::Error.
nlohmann::json execute(const Command& cmd);

/// json: canonical serialization (sorted keys, two-space indent, trailing
/// newline). table: human-readable summary.
std::string render(const nlohmann::json& doc, Format format);

/// Full front end: parse, execute, print. Returns the process exit code
/// (0 success, 2 usage or validation error, 3 internal error).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace gltd::cli

#endif // GLTD_TOOLS_CLI_HPP
