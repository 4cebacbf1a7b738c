#include "subsetsums/table_io.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace subsetsums {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return '"' + s + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i <= line.size()) {
        std::string field;
        if (i < line.size() && line[i] == '"') {
            const std::size_t close = line.find('"', i + 1);
            if (close == std::string::npos) throw std::invalid_argument("unterminated quote in CSV line: " + line);
            field = line.substr(i + 1, close - i - 1);
            i = close + 1;
            if (i < line.size() && line[i] != ',') throw std::invalid_argument("malformed CSV line: " + line);
        } else {
            const std::size_t comma = line.find(',', i);
            const std::size_t end = comma == std::string::npos ? line.size() : comma;
            field = line.substr(i, end - i);
            i = end;
        }
        fields.push_back(std::move(field));
        if (i == line.size()) break;
        ++i;  // skip the comma
    }
    return fields;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected unsigned integer, got '" + s + "'");
    }
    return v;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

ordered_json bound_row_json(const BoundRow& r) {
    ordered_json j;
    j["group"] = r.group;
    j["n"] = r.report.n;
    j["h"] = r.report.h;
    j["parity"] = r.report.parity == Parity::even ? "even" : "odd";
    j["deviation"] = r.report.deviation.str();
    j["lhs_fourth"] = r.report.comparison.lhs.str();
    j["rhs_fourth"] = r.report.comparison.rhs.str();
    j["bound_float"] = r.report.bound_float;
    j["holds"] = r.report.comparison.holds;
    return j;
}

ordered_json ratio_row_json(const RatioRow& r) {
    ordered_json j;
    j["group"] = r.group;
    j["n"] = r.report.n;
    j["h"] = r.report.h;
    j["parity"] = r.report.parity == Parity::even ? "even" : "odd";
    j["min"] = r.report.min_count.str();
    j["max"] = r.report.max_count.str();
    j["ratio"] = r.report.ratio;
    j["one_minus_x"] = r.report.one_minus_x;
    j["lhs_fourth"] = r.report.comparison.lhs.str();
    j["rhs_fourth"] = r.report.comparison.rhs.str();
    j["holds"] = r.report.holds;
    return j;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::invalid_argument("double formatting failed");
    return std::string(buf, ptr);
}

void write_count_rows_csv(std::ostream& os, const GroupSpec& g, const CountRows& rows) {
    const std::string group = csv_field(g.str());
    os << "group,h,a_index,count\n";
    for (const auto& [h, row] : rows) {
        for (std::uint64_t a = 0; a < row.size(); ++a) {
            os << group << ',' << h << ',' << a << ',' << row[a].str() << '\n';
        }
    }
}

void write_count_rows_json(std::ostream& os, const GroupSpec& g, const CountRows& rows) {
    ordered_json j;
    j["group"] = g.str();
    j["n"] = g.order();
    j["rows"] = ordered_json::array();
    for (const auto& [h, row] : rows) {
        ordered_json rj;
        rj["h"] = h;
        rj["counts"] = ordered_json::array();
        for (const auto& v : row) rj["counts"].push_back(v.str());
        j["rows"].push_back(std::move(rj));
    }
    os << j.dump(2) << '\n';
}

void write_count_table_csv(std::ostream& os, const CountTable& table) {
    CountRows rows;
    for (int h = 0; h <= table.hmax(); ++h) rows.emplace_back(h, table.row(h));
    write_count_rows_csv(os, table.group(), rows);
}

void write_count_table_json(std::ostream& os, const CountTable& table) {
    ordered_json j;
    j["group"] = table.group().str();
    j["n"] = table.group().order();
    j["hmax"] = table.hmax();
    j["rows"] = ordered_json::array();
    for (int h = 0; h <= table.hmax(); ++h) {
        ordered_json row;
        row["h"] = h;
        row["counts"] = ordered_json::array();
        for (const auto& v : table.row(h)) row["counts"].push_back(v.str());
        j["rows"].push_back(std::move(row));
    }
    os << j.dump(2) << '\n';
}

CountTable read_count_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || strip_cr(line) != "group,h,a_index,count") {
        throw std::invalid_argument("missing count table CSV header");
    }
    std::string group_str;
    bool saw_group = false;  // the trivial group serializes as "", so an empty
                             // group_str cannot double as the first-row sentinel
    int hmax = -1;
    std::vector<std::vector<std::optional<BigNat>>> rows;
    std::uint64_t n = 0;
    while (std::getline(is, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) throw std::invalid_argument("expected 4 CSV fields, got line: " + line);
        if (!saw_group) {
            group_str = fields[0];
            n = GroupSpec::parse(group_str).order();
            saw_group = true;
        } else if (fields[0] != group_str) {
            throw std::invalid_argument("count table mixes groups '" + group_str + "' and '" + fields[0] + "'");
        }
        const int h = static_cast<int>(parse_u64(fields[1]));
        const std::uint64_t a = parse_u64(fields[2]);
        if (a >= n) throw std::invalid_argument("a_index " + fields[2] + " out of range");
        if (h > hmax) {
            hmax = h;
            rows.resize(static_cast<std::size_t>(hmax) + 1);
        }
        auto& row = rows[static_cast<std::size_t>(h)];
        if (row.empty()) row.resize(n);
        if (row[a].has_value()) throw std::invalid_argument("duplicate count for h=" + fields[1] + " a=" + fields[2]);
        row[a] = BigNat(fields[3]);
    }
    if (!saw_group) throw std::invalid_argument("count table CSV has no data rows");
    CountTable table(GroupSpec::parse(group_str), hmax);
    for (int h = 0; h <= hmax; ++h) {
        auto& row = rows[static_cast<std::size_t>(h)];
        if (row.empty()) throw std::invalid_argument("missing row h=" + std::to_string(h));
        for (std::uint64_t a = 0; a < n; ++a) {
            if (!row[a].has_value()) {
                throw std::invalid_argument("missing count for h=" + std::to_string(h) + " a=" + std::to_string(a));
            }
            table.at(h, a) = std::move(*row[a]);
        }
    }
    return table;
}

CountTable read_count_table_json(std::istream& is) {
    const auto j = ordered_json::parse(is);
    const auto group = GroupSpec::parse(j.at("group").get<std::string>());
    const int hmax = j.at("hmax").get<int>();
    CountTable table(group, hmax);
    const auto& rows = j.at("rows");
    if (rows.size() != static_cast<std::size_t>(hmax) + 1) {
        throw std::invalid_argument("count table JSON has wrong row count");
    }
    for (const auto& row : rows) {
        const int h = row.at("h").get<int>();
        const auto& counts = row.at("counts");
        if (counts.size() != group.order()) throw std::invalid_argument("count row length mismatch");
        for (std::uint64_t a = 0; a < counts.size(); ++a) {
            table.at(h, a) = BigNat(counts[a].get<std::string>());
        }
    }
    return table;
}

void write_bound_rows_csv(std::ostream& os, const std::vector<BoundRow>& rows) {
    os << "group,n,h,deviation,bound_float,holds\n";
    for (const auto& r : rows) {
        os << csv_field(r.group) << ',' << r.report.n << ',' << r.report.h << ','
           << r.report.deviation.str() << ',' << format_double(r.report.bound_float) << ','
           << (r.report.comparison.holds ? "true" : "false") << '\n';
    }
}

void write_bound_rows_json(std::ostream& os, const std::vector<BoundRow>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) j.push_back(bound_row_json(r));
    os << j.dump(2) << '\n';
}

void write_ratio_rows_csv(std::ostream& os, const std::vector<RatioRow>& rows) {
    os << "group,n,h,min,max,ratio,one_minus_x\n";
    for (const auto& r : rows) {
        os << csv_field(r.group) << ',' << r.report.n << ',' << r.report.h << ','
           << r.report.min_count.str() << ',' << r.report.max_count.str() << ','
           << format_double(r.report.ratio) << ',' << format_double(r.report.one_minus_x) << '\n';
    }
}

void write_ratio_rows_json(std::ostream& os, const std::vector<RatioRow>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) j.push_back(ratio_row_json(r));
    os << j.dump(2) << '\n';
}

void write_codebook_text(std::ostream& os, const Codebook& book,
                         const std::optional<DistanceCheck>& distance) {
    os << "n=" << book.group.order() << " h=" << book.h
       << " a=" << book.group.index(book.a) << " group=" << book.group.str();
    if (distance.has_value()) {
        os << " d=";
        if (distance->min_distance.has_value()) os << *distance->min_distance;
        else os << "inf";
    }
    os << '\n';
    for (const auto& w : book.words) os << w.str() << '\n';
}

void write_codebook_json(std::ostream& os, const Codebook& book,
                         const std::optional<DistanceCheck>& distance) {
    ordered_json j;
    j["group"] = book.group.str();
    j["n"] = book.group.order();
    j["h"] = book.h;
    j["a_index"] = book.group.index(book.a);
    j["words"] = ordered_json::array();
    for (const auto& w : book.words) j["words"].push_back(w.str());
    if (distance.has_value()) {
        if (distance->min_distance.has_value()) j["min_distance"] = *distance->min_distance;
        else j["min_distance"] = nullptr;
        j["distance_exhaustive"] = distance->exhaustive;
        j["pairs_checked"] = distance->pairs_checked;
    }
    os << j.dump(2) << '\n';
}

Codebook read_codebook_text(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty codebook file");
    line = strip_cr(line);
    std::istringstream header(line);
    std::string token;
    std::uint64_t n = 0;
    int h = -1;
    std::uint64_t a_index = 0;
    std::string group_str;
    bool saw_n = false, saw_h = false, saw_a = false, saw_group = false;
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed codebook header token: " + token);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "n") { n = parse_u64(value); saw_n = true; }
        else if (key == "h") { h = static_cast<int>(parse_u64(value)); saw_h = true; }
        else if (key == "a") { a_index = parse_u64(value); saw_a = true; }
        else if (key == "group") { group_str = value; saw_group = true; }
        else if (key == "d") { /* informational */ }
        else throw std::invalid_argument("unknown codebook header key: " + key);
    }
    if (!(saw_n && saw_h && saw_a && saw_group)) throw std::invalid_argument("incomplete codebook header");
    GroupSpec group = GroupSpec::parse(group_str);
    if (group.order() != n) throw std::invalid_argument("codebook header n does not match group order");
    Codebook book{group, h, group.element(a_index), {}};
    while (std::getline(is, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line.size() != n) throw std::invalid_argument("codebook word length mismatch");
        Word w(n);
        for (std::uint64_t p = 0; p < n; ++p) {
            if (line[p] == '1') w.set(p);
            else if (line[p] != '0') throw std::invalid_argument("codebook word has non-binary character");
        }
        book.words.push_back(std::move(w));
    }
    return book;
}

}  // namespace subsetsums
