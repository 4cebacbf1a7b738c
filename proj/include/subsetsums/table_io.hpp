#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsetsums/bounds.hpp"
#include "subsetsums/codebook.hpp"
#include "subsetsums/counting.hpp"

namespace subsetsums {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Count tables.
//   CSV: header "group,h,a_index,count", one row per (h, a_index) in
//   ascending order; the group field is quoted because it contains commas.
//   JSON: {"group","n","hmax","rows":[{"h","counts":[decimal strings]}]}.
void write_count_table_csv(std::ostream& os, const CountTable& table);
void write_count_table_json(std::ostream& os, const CountTable& table);
CountTable read_count_table_csv(std::istream& is);
CountTable read_count_table_json(std::istream& is);

// Row-range variants for partial exports; these files are one-way (the
// readers above require full tables starting at h = 0).
using CountRows = std::vector<std::pair<int, std::vector<BigNat>>>;
void write_count_rows_csv(std::ostream& os, const GroupSpec& g, const CountRows& rows);
void write_count_rows_json(std::ostream& os, const GroupSpec& g, const CountRows& rows);

// Deviation bound reports, one line per (group, h).
//   CSV: "group,n,h,deviation,bound_float,holds".
//   JSON adds the exact comparison as decimal strings lhs_fourth/rhs_fourth.
struct BoundRow {
    std::string group;
    BoundReport report;
};
void write_bound_rows_csv(std::ostream& os, const std::vector<BoundRow>& rows);
void write_bound_rows_json(std::ostream& os, const std::vector<BoundRow>& rows);

// Ratio certificate rows.
//   CSV: "group,n,h,min,max,ratio,one_minus_x".
//   JSON adds holds and the exact comparison.
struct RatioRow {
    std::string group;
    RatioBoundReport report;
};
void write_ratio_rows_csv(std::ostream& os, const std::vector<RatioRow>& rows);
void write_ratio_rows_json(std::ostream& os, const std::vector<RatioRow>& rows);

// Codebooks.
//   Text: header "n=<n> h=<h> a=<a_index> group=<orders>" with an optional
//   trailing " d=<min|inf>" when a distance check is supplied, then one
//   0/1 word per line in lexicographic order.
//   JSON: {"group","n","h","a_index","words":[...]} plus distance fields
//   when supplied.
void write_codebook_text(std::ostream& os, const Codebook& book,
                         const std::optional<DistanceCheck>& distance = std::nullopt);
void write_codebook_json(std::ostream& os, const Codebook& book,
                         const std::optional<DistanceCheck>& distance = std::nullopt);
Codebook read_codebook_text(std::istream& is);

}  // namespace subsetsums
