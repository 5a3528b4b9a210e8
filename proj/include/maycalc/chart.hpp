#pragma once
// Sphere Ext charts from May E2 data.

#include <string>
#include <vector>

#include "json.hpp"
#include "maycalc/certify.hpp"

namespace maycalc {

struct ChartCell
{
    Int s = 0, t = 0;
    std::size_t e1 = 0, e2 = 0;
    std::string certification;
    std::vector<std::string> reps;
    bool operator==(const ChartCell&) const = default;
};

struct Chart
{
    int p = 3;
    Int s_min = 0, s_max = -1, t_min = 0, t_max = -1;
    std::vector<ChartCell> cells;  // nonempty E1 cells, sorted by (t, s)
    bool operator==(const Chart&) const = default;
};

struct ChartWindow
{
    Int s_min = 0, s_max = -1, t_min = 0, t_max = -1;
    std::size_t max_cells = 500000;
};

Chart build_chart(const SphereExt& ext, const ChartWindow& w);

nlohmann::json chart_to_json(const Chart& c);
Chart chart_from_json(const nlohmann::json& j);
std::string chart_to_tsv(const Chart& c);
std::string chart_to_svg(const Chart& c);

// Writes format json|svg|tsv to path; throws IOError / InvalidParams.
void emit_chart(const Chart& c, const std::string& format, const std::string& path);

}  // namespace maycalc
