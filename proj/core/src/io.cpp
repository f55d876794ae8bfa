#include "partmon/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace partmon {
namespace io {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

// Whitespace-split with column positions; a trailing '\r' is dropped.
std::vector<Token> tokenize(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::uint64_t parse_u64(const Token& tok, std::size_t line) {
    std::uint64_t out = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, tok.column, "number '" + tok.text + "' is too large");
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, tok.column, "expected a non-negative integer, got '" +
                                               tok.text + "'");
    return out;
}

}  // namespace

Instance parse_instance_file(std::istream& in) {
    std::optional<std::size_t> m;
    std::optional<std::vector<Value>> values;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#')
            continue;
        const Token& head = tokens[0];
        if (head.text == "m") {
            if (m)
                throw ParseError(lineno, head.column, "duplicate 'm' line");
            if (tokens.size() != 2)
                throw ParseError(lineno, head.column, "'m' line needs exactly one integer");
            const std::uint64_t parsed = parse_u64(tokens[1], lineno);
            if (parsed < 2)
                throw ParseError(lineno, tokens[1].column, "bin count must be at least 2");
            m = static_cast<std::size_t>(parsed);
        } else if (head.text == "values") {
            if (values)
                throw ParseError(lineno, head.column, "duplicate 'values' line");
            if (tokens.size() < 2)
                throw ParseError(lineno, head.column, "'values' line needs at least one value");
            std::vector<Value> v;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const Value value = parse_u64(tokens[i], lineno);
                if (value < 1)
                    throw ParseError(lineno, tokens[i].column, "values must be positive");
                v.push_back(value);
            }
            values = std::move(v);
        } else {
            throw ParseError(lineno, head.column,
                             "unknown directive '" + head.text + "' (expected 'm' or 'values')");
        }
    }
    if (!m)
        throw ParseError(lineno + 1, 1, "missing 'm' line");
    if (!values)
        throw ParseError(lineno + 1, 1, "missing 'values' line");
    return Instance(std::move(*values), *m);
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance_file(in);
}

PrecedenceInstance parse_precedence_file(std::istream& in) {
    std::optional<std::size_t> m;
    std::vector<Job> jobs;
    std::vector<std::vector<std::size_t>> deps_of;
    std::unordered_map<std::string, std::size_t> index_of;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#')
            continue;
        const Token& head = tokens[0];
        if (head.text == "m") {
            if (m)
                throw ParseError(lineno, head.column, "duplicate 'm' line");
            if (!jobs.empty())
                throw ParseError(lineno, head.column, "'m' line must come before job lines");
            if (tokens.size() != 2)
                throw ParseError(lineno, head.column, "'m' line needs exactly one integer");
            const std::uint64_t parsed = parse_u64(tokens[1], lineno);
            if (parsed < 1)
                throw ParseError(lineno, tokens[1].column, "machine count must be at least 1");
            m = static_cast<std::size_t>(parsed);
        } else if (head.text == "job") {
            if (!m)
                throw ParseError(lineno, head.column, "'m' line must come before job lines");
            if (tokens.size() < 3)
                throw ParseError(lineno, head.column, "job line needs an id and a time");
            const Token& id = tokens[1];
            if (index_of.count(id.text))
                throw ParseError(lineno, id.column, "duplicate job id '" + id.text + "'");
            const Value time = parse_u64(tokens[2], lineno);
            if (time < 1)
                throw ParseError(lineno, tokens[2].column, "processing time must be positive");
            std::vector<std::size_t> deps;
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                auto it = index_of.find(tokens[i].text);
                if (it == index_of.end())
                    throw ParseError(lineno, tokens[i].column,
                                     "dependency '" + tokens[i].text +
                                         "' is not a previously declared job");
                deps.push_back(it->second);
            }
            index_of.emplace(id.text, jobs.size());
            jobs.push_back({id.text, time});
            deps_of.push_back(std::move(deps));
        } else {
            throw ParseError(lineno, head.column,
                             "unknown directive '" + head.text + "' (expected 'm' or 'job')");
        }
    }
    if (!m)
        throw ParseError(lineno + 1, 1, "missing 'm' line");
    return PrecedenceInstance(std::move(jobs), std::move(deps_of), *m);
}

PrecedenceInstance parse_precedence_text(const std::string& text) {
    std::istringstream in(text);
    return parse_precedence_file(in);
}

std::string format_values(const std::vector<Value>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_parts(const std::vector<std::vector<std::size_t>>& parts) {
    std::string out;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j > 0)
            out += '|';
        if (parts[j].empty()) {
            out += '-';
            continue;
        }
        for (std::size_t k = 0; k < parts[j].size(); ++k) {
            if (k > 0)
                out += ',';
            out += std::to_string(parts[j][k] + 1);  // one-based in output
        }
    }
    return out;
}

std::string instance_record(const Instance& inst) {
    return "m=" + std::to_string(inst.bins()) + " values=" + format_values(inst.values());
}

std::map<std::string, std::string> parse_record(const std::string& line) {
    std::map<std::string, std::string> record;
    for (const Token& tok : tokenize(line)) {
        const std::size_t eq = tok.text.find('=');
        if (eq == std::string::npos)
            throw InputError("record field '" + tok.text + "' is not key=value");
        record[tok.text.substr(0, eq)] = tok.text.substr(eq + 1);
    }
    return record;
}

std::vector<Value> parse_value_list(const std::string& text) {
    std::vector<Value> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        std::uint64_t out = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), out);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw InputError("bad number '" + item + "' in value list");
        values.push_back(out);
        pos = comma + 1;
    }
    return values;
}

Instance instance_from_record(const std::map<std::string, std::string>& record) {
    const auto m_it = record.find("m");
    const auto values_it = record.find("values");
    if (m_it == record.end() || values_it == record.end())
        throw InputError("record is missing m= or values=");
    std::uint64_t m = 0;
    const std::string& mtext = m_it->second;
    auto [ptr, ec] = std::from_chars(mtext.data(), mtext.data() + mtext.size(), m);
    if (ec != std::errc() || ptr != mtext.data() + mtext.size())
        throw InputError("bad m '" + mtext + "' in record");
    return Instance(parse_value_list(values_it->second), static_cast<std::size_t>(m));
}

}  // namespace io
}  // namespace partmon
