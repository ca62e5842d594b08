#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

namespace scuba::csv {

enum class ColumnType { text, integer, real };

struct Column {
    std::string name;
    ColumnType type = ColumnType::text;
    int precision = 4;  // real columns only
};

struct Schema {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::size_t> keys;  // column indices that order the rows

    std::string header() const {
        std::string out;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += (c ? "," : "") + columns[c].name;
        }
        return out;
    }

    std::size_t index_of(std::string_view column) const {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].name == column) {
                return c;
            }
        }
        throw std::out_of_range("schema " + name + " has no column " + std::string(column));
    }
};

/// Empty, integer, real or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;
using Row = std::vector<Cell>;

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Schema make(std::string name, std::vector<Column> columns, std::vector<std::string_view> keys) {
    Schema s{std::move(name), std::move(columns), {}};
    for (auto k : keys) {
        s.keys.push_back(s.index_of(k));
    }
    return s;
}

inline const std::vector<Schema>& registry() {
    using T = ColumnType;
    static const std::vector<Schema> schemas = {
        make("neutral_degree",
             {{"problem", T::text}, {"q", T::integer}, {"k", T::integer}, {"l", T::integer},
              {"samples", T::integer}, {"mean_degree", T::real, 4}},
             {"problem", "q", "k", "l"}),
        make("neutral_proportion",
             {{"problem", T::text}, {"n", T::integer}, {"l", T::integer}, {"samples", T::integer},
              {"concentration", T::real, 6}, {"mean_proportion", T::real, 6}},
             {"problem", "n", "l"}),
        make("summary",
             {{"problem", T::text}, {"heuristic", T::text}, {"n", T::integer}, {"q", T::integer},
              {"k", T::integer}, {"l", T::integer}, {"runs", T::integer}, {"mean_fitness", T::real, 4},
              {"stddev_fitness", T::real, 4}, {"best_fitness", T::real, 4}, {"best_raw", T::integer},
              {"mean_evaluations", T::real, 1}, {"mean_steps", T::real, 4}, {"mean_flat", T::real, 4},
              {"mean_gate", T::real, 4}},
             {"problem", "n", "q", "k", "l", "heuristic"}),
        make("runs",
             {{"problem", T::text}, {"heuristic", T::text}, {"run", T::integer}, {"seed", T::text},
              {"initial_fitness", T::integer}, {"final_fitness", T::integer}, {"final_normalized", T::real, 4},
              {"steps", T::integer}, {"flat_count", T::integer}, {"gate_count", T::integer},
              {"evaluations", T::integer}},
             {"run"}),
        make("trace",
             {{"run", T::integer}, {"move", T::integer}, {"kind", T::text}, {"fitness_before", T::integer},
              {"fitness_after", T::integer}, {"evaluations", T::integer}},
             {"run", "move"}),
    };
    return schemas;
}

inline std::string format_real(double v, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("csv: cannot format real");
    }
    std::string out(buf, res.ptr);
    if (out.find_first_not_of("-0.") == std::string::npos) {
        // Avoid "-0.0000".
        out.erase(0, out.front() == '-' ? 1 : 0);
    }
    return out;
}

inline bool conforms(const Column& col, const Cell& cell) {
    switch (col.type) {
        case ColumnType::text: return std::holds_alternative<std::string>(cell) || std::holds_alternative<std::monostate>(cell);
        case ColumnType::integer: return std::holds_alternative<std::int64_t>(cell) || std::holds_alternative<std::monostate>(cell);
        case ColumnType::real: return std::holds_alternative<double>(cell) || std::holds_alternative<std::monostate>(cell);
    }
    return false;
}

inline std::string format_cell(const Column& col, const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell)) {
        return {};
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_real(*d, col.precision);
    }
    const auto& s = std::get<std::string>(cell);
    if (s.find_first_of(",\"\n\r") != std::string::npos) {
        throw SchemaError("csv: text cell contains a separator: " + s);
    }
    return s;
}

}  // namespace detail

/// Looks up one of the fixed schemas by name.
inline const Schema& schema(std::string_view name) {
    for (const auto& s : detail::registry()) {
        if (s.name == name) {
            return s;
        }
    }
    throw SchemaError("unknown csv schema: " + std::string(name));
}

inline void check(const Schema& schema, const Row& row) {
    if (row.size() != schema.columns.size()) {
        throw SchemaError("csv: row width does not match schema " + schema.name);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (!detail::conforms(schema.columns[c], row[c])) {
            throw SchemaError("csv: column " + schema.columns[c].name + " has the wrong type");
        }
    }
}

/// Stable-sorts rows by the schema's key columns.
inline void sort_rows(const Schema& schema, std::vector<Row>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        for (std::size_t k : schema.keys) {
            if (a[k] != b[k]) {
                return a[k] < b[k];
            }
        }
        return false;
    });
}

/// Header line, then one record per row in key order. Reals use fixed
/// notation with the column's precision, independent of the locale.
inline std::string emit(const Schema& schema, std::vector<Row> rows) {
    for (const Row& r : rows) {
        check(schema, r);
    }
    sort_rows(schema, rows);
    std::string out = schema.header() + "\n";
    for (const Row& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) {
                out += ',';
            }
            out += detail::format_cell(schema.columns[c], r[c]);
        }
        out += '\n';
    }
    return out;
}

inline std::vector<Row> parse(std::string_view text, const Schema& schema) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    }
    if (lines.empty() || lines.front() != schema.header()) {
        throw SchemaError("csv: header does not match schema " + schema.name);
    }
    std::vector<Row> rows;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        std::string_view line = lines[l];
        Row row;
        std::size_t c = 0;
        for (;; ++c) {
            const auto comma = line.find(',');
            const std::string_view field = line.substr(0, comma);
            if (c >= schema.columns.size()) {
                throw SchemaError("csv: too many fields");
            }
            const Column& col = schema.columns[c];
            if (field.empty()) {
                row.emplace_back(std::monostate{});
            } else if (col.type == ColumnType::text) {
                row.emplace_back(std::string(field));
            } else if (col.type == ColumnType::integer) {
                std::int64_t v = 0;
                const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
                if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
                    throw SchemaError("csv: bad integer in column " + col.name);
                }
                row.emplace_back(v);
            } else {
                double v = 0.0;
                const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
                if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
                    throw SchemaError("csv: bad number in column " + col.name);
                }
                row.emplace_back(v);
            }
            if (comma == std::string_view::npos) {
                break;
            }
            line.remove_prefix(comma + 1);
        }
        if (row.size() != schema.columns.size()) {
            throw SchemaError("csv: too few fields");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace scuba::csv
