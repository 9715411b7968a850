#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanind/search.hpp"
#include "spanind/sets.hpp"
#include "spanind/sphere.hpp"

namespace spanind {

using nlohmann::json;

// Elements of rank-1 groups serialize as plain integers, higher ranks
// as arrays of residues; parsers accept both forms.
json element_to_json(const AbelianGroup& g, const GroupElement& e);
GroupElement element_from_json(const AbelianGroup& g, const json& j);

json set_to_json(const AbelianGroup& g, const std::vector<GroupElement>& set);
std::vector<GroupElement> set_from_json(const AbelianGroup& g, const json& j);

json coeff_to_json(const CoeffVector& v);
CoeffVector coeff_from_json(const json& j);

json certificate_to_json(const SubsetCertificate& cert);
SubsetCertificate certificate_from_json(const json& j);

json duality_to_json(const DualityReport& rep);
json design_report_to_json(const DesignReport& rep);
json search_result_to_json(const SearchResult& res);

/// Row serialization excludes node counters so that equal-flag runs are
/// byte-identical whether rows came from search or cache.
json table_row_to_json(const TableRow& row);
json table_to_json(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);

/// One point per row, decimal with 17 significant digits (exact double
/// round trip).
void write_points_csv(std::ostream& os, const PointSet& points);
PointSet read_points_csv(std::istream& is);

}  // namespace spanind
