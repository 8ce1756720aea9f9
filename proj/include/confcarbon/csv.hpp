#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon::csv {

struct Row
{
    std::size_t line = 0; // 1-based line on which the record starts
    std::vector<std::string> fields;
};

// RFC-4180 reader: quoted fields, doubled quotes, embedded separators and
// newlines, CRLF or LF line endings. A leading UTF-8 BOM is skipped. Blank
// lines are ignored. Throws ParseError on an unterminated quote.
std::vector<Row> parse(std::string_view text, std::string_view sourceName);

// Quotes the field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

// Strict numeric parsing: the whole field must be consumed.
std::optional<double> to_double(std::string_view field);
std::optional<long long> to_integer(std::string_view field);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Fixed-point formatting with the given number of decimals. Negative zero is
// printed without a sign.
std::string format_fixed(double value, int decimals);

std::string_view trim(std::string_view s) noexcept;

}
