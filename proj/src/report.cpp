#include "flatpart/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace flatpart {

bool Finding::all_equal() const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].second != values[0].second) return false;
    return true;
}

DiscrepancyReport discrepancy_report(const std::vector<TriangleSource>& sources) {
    std::map<int, std::vector<const TriangleSource*>> groups;
    for (const auto& src : sources) groups[src.triangle.s()].push_back(&src);

    DiscrepancyReport report;
    for (const auto& [s, group] : groups) {
        if (group.size() < 2) continue;
        std::vector<int> rows;
        for (const TriangleSource* src : group)
            for (int n : src->triangle.row_indices()) rows.push_back(n);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

        for (int n : rows) {
            std::vector<const TriangleSource*> covering;
            int len = 0;
            for (const TriangleSource* src : group)
                if (src->triangle.covers(n)) {
                    covering.push_back(src);
                    len = std::max(len, src->triangle.row_length(n));
                }
            if (covering.size() < 2) continue;
            for (int k = 1; k <= len; ++k) {
                Finding f;
                f.s = s;
                f.n = n;
                f.k = k;
                for (const TriangleSource* src : covering)
                    f.values.emplace_back(src->label, src->triangle.value(n, k));
                if (!f.all_equal()) report.findings.push_back(std::move(f));
            }
        }
    }
    return report;
}

std::string render_report_text(const DiscrepancyReport& report) {
    std::ostringstream out;
    if (report.empty()) {
        out << "no discrepancies\n";
        return out.str();
    }
    for (const Finding& f : report.findings) {
        out << "s=" << f.s << " n=" << f.n << " k=" << f.k << ":";
        for (const auto& [label, value] : f.values) out << " " << label << "=" << value;
        out << "\n";
    }
    return out.str();
}

void write_report_csv(std::ostream& out, const DiscrepancyReport& report) {
    out << "s,n,k,source,value\n";
    for (const Finding& f : report.findings)
        for (const auto& [label, value] : f.values)
            out << f.s << "," << f.n << "," << f.k << "," << label << "," << value << "\n";
}

void write_report_jsonl(std::ostream& out, const DiscrepancyReport& report) {
    for (const Finding& f : report.findings) {
        nlohmann::ordered_json j;
        j["s"] = f.s;
        j["n"] = f.n;
        j["k"] = f.k;
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const auto& [label, value] : f.values) values[label] = value.str();
        j["values"] = values;
        out << j.dump() << "\n";
    }
}

}  // namespace flatpart
