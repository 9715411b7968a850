#include "spanind/json_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace spanind {

json element_to_json(const AbelianGroup& g, const GroupElement& e) {
    if (g.rank() == 1) return e[0];
    return json(e);
}

GroupElement element_from_json(const AbelianGroup& g, const json& j) {
    if (j.is_number_integer()) return g.make_element({j.get<std::int64_t>()});
    return g.make_element(j.get<GroupElement>());
}

json set_to_json(const AbelianGroup& g, const std::vector<GroupElement>& set) {
    json out = json::array();
    for (const auto& e : set) out.push_back(element_to_json(g, e));
    return out;
}

std::vector<GroupElement> set_from_json(const AbelianGroup& g, const json& j) {
    std::vector<GroupElement> out;
    for (const auto& item : j) out.push_back(element_from_json(g, item));
    return out;
}

json coeff_to_json(const CoeffVector& v) { return json(v.lambdas); }

CoeffVector coeff_from_json(const json& j) {
    CoeffVector v;
    v.lambdas = j.get<std::vector<int>>();
    return v;
}

namespace {

ClaimKind claim_kind_from_name(const std::string& name) {
    if (name == "spanning") return ClaimKind::Spanning;
    if (name == "independent") return ClaimKind::Independent;
    if (name == "perfect") return ClaimKind::Perfect;
    if (name == "tight") return ClaimKind::Tight;
    throw std::invalid_argument("unknown claim kind: " + name);
}

}  // namespace

json certificate_to_json(const SubsetCertificate& cert) {
    json out;
    out["group"] = cert.group.to_string();
    out["set"] = set_to_json(cert.group, cert.set);
    out["claim"] = {{"kind", claim_kind_name(cert.claim.kind)}, {"param", cert.claim.param}};
    out["verified"] = cert.verified;
    out["relation"] = cert.relation ? coeff_to_json(*cert.relation) : json(nullptr);
    out["unreached"] =
        cert.unreached ? element_to_json(cert.group, *cert.unreached) : json(nullptr);
    return out;
}

SubsetCertificate certificate_from_json(const json& j) {
    AbelianGroup g = AbelianGroup::parse(j.at("group").get<std::string>());
    SubsetCertificate cert{g,
                           set_from_json(g, j.at("set")),
                           {claim_kind_from_name(j.at("claim").at("kind").get<std::string>()),
                            j.at("claim").at("param").get<int>()},
                           j.at("verified").get<bool>(),
                           std::nullopt,
                           std::nullopt};
    if (j.contains("relation") && !j.at("relation").is_null()) {
        cert.relation = coeff_from_json(j.at("relation"));
    }
    if (j.contains("unreached") && !j.at("unreached").is_null()) {
        cert.unreached = element_from_json(g, j.at("unreached"));
    }
    return cert;
}

json duality_to_json(const DualityReport& rep) {
    json out;
    out["m"] = rep.m;
    out["n"] = rep.n;
    out["span"] = rep.span ? json(*rep.span) : json(nullptr);
    out["ind"] = rep.ind.infinite ? json("infinite") : json(rep.ind.value);
    out["theorem_applies"] = rep.theorem_applies;
    if (!rep.skip_reason.empty()) out["skip_reason"] = rep.skip_reason;
    if (rep.theorem_applies) {
        out["lower_bound"] = rep.lower_bound.str();
        out["upper_bound"] = rep.upper_bound.str();
        out["order_in_bounds"] = rep.order_in_bounds;
        out["t_at_most_2s"] = rep.t_at_most_2s;
    }
    out["t_equals_2s"] = rep.t_equals_2s;
    out["perfect"] = rep.perfect;
    out["tight"] = rep.tight;
    out["equivalence_consistent"] = rep.equivalence_consistent;
    out["all_assertions_hold"] = rep.all_assertions_hold();
    return out;
}

json design_report_to_json(const DesignReport& rep) {
    json degrees = json::array();
    for (const auto& dv : rep.degrees) {
        degrees.push_back(
            {{"degree", dv.degree}, {"max_error", dv.max_error}, {"pass", dv.pass}});
    }
    return json{{"t", rep.t_checked},
                {"tolerance", rep.tolerance},
                {"max_moment_error", rep.max_moment_error},
                {"monomials_checked", rep.monomials_checked},
                {"worst_monomial", rep.worst_monomial},
                {"degrees", degrees},
                {"pass", rep.pass()}};
}

json search_result_to_json(const SearchResult& res) {
    return json{{"value", res.value},
                {"proved_optimal", res.proved_optimal},
                {"nodes_explored", res.nodes_explored},
                {"certificate", certificate_to_json(res.certificate)}};
}

json table_row_to_json(const TableRow& row) {
    return json{{"n", row.n},
                {"value", row.value},
                {"extremal", row.extremal},
                {"proved", row.proved},
                {"certificate", certificate_to_json(row.certificate)}};
}

json table_to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) out.push_back(table_row_to_json(row));
    return out;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "n,value,extremal,proved,set\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.value) + ',' +
               (row.extremal ? "1" : "0") + ',' + (row.proved ? "1" : "0") + ',' +
               format_subset(row.certificate.set) + '\n';
    }
    return out;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::string out;
    char buf[64];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%6lld  %4d %s%s  ", static_cast<long long>(row.n),
                      row.value, row.extremal ? "*" : " ", row.proved ? " " : "?");
        out += buf;
        out += '{' + format_subset(row.certificate.set) + "}\n";
    }
    return out;
}

void write_points_csv(std::ostream& os, const PointSet& points) {
    char buf[64];
    for (const auto& row : points.points) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
            if (i) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

PointSet read_points_csv(std::istream& is) {
    PointSet out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) row.push_back(std::stod(item));
        if (out.points.empty()) {
            out.ambient = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != out.ambient) {
            throw std::invalid_argument("ragged point CSV");
        }
        out.points.push_back(std::move(row));
    }
    return out;
}

}  // namespace spanind
