#ifndef STATEX_REPORT_HPP
#define STATEX_REPORT_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pipeline.hpp"

namespace statex {

enum class Schema { long_form, wide };

enum class CellType { text, number, boolean };

struct Column {
    std::string_view name;
    CellType type;
};

// Long form has one row per result with its verdict; wide form has one
// column per statistic family, with the document identifier in front.
inline constexpr Column kLongColumns[] = {
    {"source", CellType::text},      {"raw", CellType::text},         {"test_type", CellType::text},
    {"df1", CellType::number},       {"df2", CellType::number},       {"test_comp", CellType::text},
    {"test_value", CellType::number}, {"p_comp", CellType::text},     {"reported_p", CellType::number},
    {"computed_p", CellType::number}, {"error", CellType::boolean},   {"decision_error", CellType::boolean},
    {"one_tailed_in_txt", CellType::boolean},
};

inline constexpr Column kWideColumns[] = {
    {"source", CellType::text}, {"result", CellType::text}, {"Z_op", CellType::text},   {"Z", CellType::number},
    {"F_op", CellType::text},   {"F", CellType::number},    {"t_op", CellType::text},   {"t", CellType::number},
    {"d", CellType::number},    {"r_op", CellType::text},   {"r", CellType::number},    {"R2_op", CellType::text},
    {"R2", CellType::number},   {"U_op", CellType::text},   {"U", CellType::number},    {"H_op", CellType::text},
    {"H", CellType::number},    {"G2_op", CellType::text},  {"G2", CellType::number},   {"Chi2", CellType::number},
    {"Q_op", CellType::text},   {"Q", CellType::number},    {"df1", CellType::number},  {"df2", CellType::number},
    {"beta", CellType::number}, {"SEbeta", CellType::number}, {"Zest", CellType::number}, {"p_op", CellType::text},
    {"p", CellType::number},    {"recalculatedP", CellType::number},
};

inline std::span<const Column> columns(Schema s)
{
    if (s == Schema::wide) return kWideColumns;
    return kLongColumns;
}

/// One output line; cells are aligned with columns(schema). Absent cells are
/// empty in CSV and null in JSON.
struct OutputRow {
    std::vector<std::optional<std::string>> cells;

    bool operator==(const OutputRow&) const = default;
};

namespace detail {

inline std::optional<std::string> num_cell(const std::optional<double>& v)
{
    if (!v) return std::nullopt;
    return shortest(*v);
}

inline std::optional<std::string> bool_cell(const std::optional<bool>& v)
{
    if (!v) return std::nullopt;
    return std::string(*v ? "TRUE" : "FALSE");
}

inline std::optional<std::string> comp_cell(const std::optional<Comparator>& c)
{
    if (!c) return std::nullopt;
    return std::string(to_string(*c));
}

inline std::size_t column_index(Schema s, std::string_view name)
{
    auto cols = columns(s);
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i].name == name) return i;
    throw std::logic_error("unknown column");
}

/// Degrees of freedom as laid out in the reference tables: single-df t and r
/// go to df2, the chi-square family to df1.
inline std::pair<std::optional<double>, std::optional<double>> table_df(const ParsedResult& r)
{
    switch (r.kind) {
    case StatKind::t:
    case StatKind::r: return {std::nullopt, r.df1};
    default: return {r.df1, r.df2};
    }
}

} // namespace detail

inline OutputRow make_row(std::string_view source, const Extraction& x, Schema schema)
{
    const ParsedResult& r = x.result;
    const Verdict& v = x.verdict;
    OutputRow row;
    row.cells.resize(columns(schema).size());
    auto set = [&](std::string_view name, std::optional<std::string> value) {
        row.cells[detail::column_index(schema, name)] = std::move(value);
    };
    auto [df1, df2] = detail::table_df(r);
    std::optional<double> computed;
    if (v.recomputed) computed = v.recomputed->value;

    set("source", std::string(source));
    if (schema == Schema::long_form) {
        set("raw", x.raw);
        set("test_type", std::string(to_string(r.kind)));
        set("df1", detail::num_cell(df1));
        set("df2", detail::num_cell(df2));
        set("test_comp", detail::comp_cell(r.stat_value ? r.stat_comp : std::nullopt));
        set("test_value", detail::num_cell(r.stat_value));
        set("p_comp", detail::comp_cell(r.p_comp));
        set("reported_p", detail::num_cell(r.reported_p));
        set("computed_p", detail::num_cell(computed));
        set("error", detail::bool_cell(v.error));
        set("decision_error", detail::bool_cell(v.decision_error));
        set("one_tailed_in_txt", detail::bool_cell(v.one_tailed_in_txt));
        return row;
    }

    set("result", x.raw);
    const char* stat_col = nullptr;
    switch (r.kind) {
    case StatKind::Z: stat_col = "Z"; break;
    case StatKind::F: stat_col = "F"; break;
    case StatKind::t: stat_col = "t"; break;
    case StatKind::r: stat_col = "r"; break;
    case StatKind::R2: stat_col = "R2"; break;
    case StatKind::U: stat_col = "U"; break;
    case StatKind::H: stat_col = "H"; break;
    case StatKind::G2: stat_col = "G2"; break;
    case StatKind::Chi2: stat_col = "Chi2"; break;
    case StatKind::Q: stat_col = "Q"; break;
    default: break;
    }
    if (stat_col && r.stat_value) {
        set(stat_col, detail::num_cell(r.stat_value));
        if (r.kind != StatKind::Chi2) set(std::string(stat_col) + "_op", detail::comp_cell(r.stat_comp));
    }
    if (r.r2 && r.kind != StatKind::R2) {
        set("R2_op", std::string("="));
        set("R2", detail::num_cell(r.r2));
    }
    set("d", detail::num_cell(r.d));
    set("df1", detail::num_cell(df1));
    set("df2", detail::num_cell(df2));
    if (r.kind == StatKind::BetaSE) {
        set("beta", detail::num_cell(r.beta));
        set("SEbeta", detail::num_cell(r.se_beta));
        set("Zest", detail::num_cell(r.stat_value));
    }
    set("p_op", detail::comp_cell(r.p_comp));
    set("p", detail::num_cell(r.reported_p));
    set("recalculatedP", detail::num_cell(computed));
    return row;
}

namespace detail {

inline void csv_field(std::string& out, std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
        out.append(s);
        return;
    }
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

} // namespace detail

/// RFC 4180 CSV with a header row.
inline std::string emit_csv(const std::vector<OutputRow>& rows, Schema schema)
{
    std::string out;
    auto cols = columns(schema);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out.push_back(',');
        detail::csv_field(out, cols[i].name);
    }
    out.push_back('\n');
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (i) out.push_back(',');
            if (row.cells[i]) detail::csv_field(out, *row.cells[i]);
        }
        out.push_back('\n');
    }
    return out;
}

/// Array of objects; numbers and booleans are typed, absent cells are null.
inline std::string emit_json(const std::vector<OutputRow>& rows, Schema schema)
{
    auto cols = columns(schema);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto& cell = row.cells[i];
            auto& slot = obj[std::string(cols[i].name)];
            if (!cell) {
                slot = nullptr;
            } else if (cols[i].type == CellType::number) {
                slot = std::stod(*cell);
            } else if (cols[i].type == CellType::boolean) {
                slot = *cell == "TRUE";
            } else {
                slot = *cell;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

/// Splits RFC 4180 CSV into records of fields. Accepts LF or CRLF endings.
inline std::vector<std::vector<std::string>> parse_csv_records(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field.push_back(c);
        }
    }
    if (quoted) throw std::invalid_argument("parse_csv: unterminated quoted field");
    if (any || !field.empty() || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

/// Inverse of emit_csv: the header must match the schema.
inline std::vector<OutputRow> parse_csv(std::string_view text, Schema schema)
{
    auto records = parse_csv_records(text);
    auto cols = columns(schema);
    if (records.empty()) throw std::invalid_argument("parse_csv: missing header");
    const auto& header = records.front();
    if (header.size() != cols.size()) throw std::invalid_argument("parse_csv: header does not match schema");
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (header[i] != cols[i].name) throw std::invalid_argument("parse_csv: header does not match schema");
    std::vector<OutputRow> rows;
    for (std::size_t k = 1; k < records.size(); ++k) {
        if (records[k].size() != cols.size()) throw std::invalid_argument("parse_csv: wrong field count");
        OutputRow row;
        for (auto& f : records[k]) {
            if (f.empty()) row.cells.emplace_back();
            else row.cells.emplace_back(std::move(f));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace statex

#endif
