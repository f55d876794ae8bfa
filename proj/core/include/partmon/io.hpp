#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "partmon/core.hpp"
#include "partmon/precedence.hpp"

namespace partmon {
namespace io {

/// Malformed input text. line/column are 1-based; the message already
/// contains both.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// Instance file: `#` comment lines, one `m <int>` line and one
/// `values <int> <int> ...` line, in any order.
Instance parse_instance_file(std::istream& in);
Instance parse_instance_text(const std::string& text);

/// Precedence file: one `m <int>` line first, then one line per job in
/// list order: `job <id> <time> [dep-id ...]`. Dependencies must refer
/// to previously declared jobs.
PrecedenceInstance parse_precedence_file(std::istream& in);
PrecedenceInstance parse_precedence_text(const std::string& text);

/// Comma-joined numbers: "18,10,6,4".
std::string format_values(const std::vector<Value>& values);

/// Parts as one-based index lists joined by `|`; an empty part prints
/// as `-`: "1|2,3,4" or "1|-".
std::string format_parts(const std::vector<std::vector<std::size_t>>& parts);

/// "m=<m> values=<v,v,...>" — the instance portion of every
/// machine-readable record.
std::string instance_record(const Instance& inst);

/// Splits a machine-readable record line into its key=value pairs.
std::map<std::string, std::string> parse_record(const std::string& line);

/// Rebuilds an Instance from a record containing m= and values= keys.
Instance instance_from_record(const std::map<std::string, std::string>& record);

/// Parses "18,10,6,4" back into numbers.
std::vector<Value> parse_value_list(const std::string& text);

}  // namespace io
}  // namespace partmon
