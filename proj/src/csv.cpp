#include "confcarbon/csv.hpp"
#include "confcarbon/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace confcarbon::csv {

std::vector<Row> parse(std::string_view text, std::string_view sourceName)
{
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }

    std::vector<Row> rows;
    Row current;
    std::string field;
    bool inQuotes     = false;
    bool fieldQuoted  = false;
    bool rowHasData   = false;
    std::size_t line  = 1;
    std::size_t start = 1;

    auto endField = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        fieldQuoted = false;
    };

    auto endRow = [&] {
        if (rowHasData || !current.fields.empty() || !field.empty() || fieldQuoted) {
            endField();
            current.line = start;
            rows.push_back(std::move(current));
        }
        current    = Row{};
        field.clear();
        fieldQuoted = false;
        rowHasData = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (inQuotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    inQuotes = false;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.push_back(c);
            }
            continue;
        }

        switch (c) {
        case '"':
            if (!field.empty()) {
                throw ParseError(std::string(sourceName) + ":" + std::to_string(line) + ": unexpected quote inside unquoted field");
            }
            if (!rowHasData) {
                start = line;
            }
            inQuotes    = true;
            fieldQuoted = true;
            rowHasData  = true;
            break;
        case ',':
            if (!rowHasData) {
                start = line;
            }
            rowHasData = true;
            endField();
            break;
        case '\r':
            break;
        case '\n':
            endRow();
            ++line;
            break;
        default:
            if (!rowHasData) {
                start = line;
            }
            rowHasData = true;
            field.push_back(c);
        }
    }

    if (inQuotes) {
        throw ParseError(std::string(sourceName) + ":" + std::to_string(start) + ": unterminated quoted field");
    }
    endRow();
    return rows;
}

std::string escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }

    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += escape(fields[i]);
    }
    return out;
}

std::optional<double> to_double(std::string_view field)
{
    field = trim(field);
    if (field.empty()) {
        return std::nullopt;
    }
    if (field.front() == '+') {
        field.remove_prefix(1);
    }

    double value   = 0.0;
    const auto end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<long long> to_integer(std::string_view field)
{
    field = trim(field);
    long long value = 0;
    const auto end  = field.data() + field.size();
    auto [ptr, ec]  = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double value, int decimals)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
    std::string out(buf.data(), ptr);
    if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string_view trim(std::string_view s) noexcept
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

}
