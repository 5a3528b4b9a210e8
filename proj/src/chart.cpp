#include "maycalc/chart.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "maycalc/serialize.hpp"

namespace maycalc {

using nlohmann::json;

Chart build_chart(const SphereExt& ext, const ChartWindow& w)
{
    Chart c;
    c.p = ext.ctx().p();
    c.s_min = std::max<Int>(0, w.s_min);
    c.s_max = w.s_max;
    c.t_min = std::max<Int>(0, w.t_min);
    c.t_max = w.t_max;
    Int ns = std::max<Int>(0, c.s_max - c.s_min + 1), nt = std::max<Int>(0, c.t_max - c.t_min + 1);
    if (ns * nt > static_cast<Int>(w.max_cells))
        throw Error(ErrorCode::WindowTooLarge, "chart window has " + std::to_string(ns * nt) + " cells");
    for (Int t = c.t_min; t <= c.t_max; ++t)
        for (Int s = c.s_min; s <= c.s_max; ++s) {
            if (enumerate_basis(ext.ctx(), s, t).empty())
                continue;
            Certificate cert = ext.dim(s, t);
            ChartCell cell;
            cell.s = s;
            cell.t = t;
            cell.e1 = cert.evidence->e1_total;
            cell.e2 = cert.evidence->e2_total;
            cell.certification = cert.label();
            for (const auto& r : cert.evidence->representatives())
                cell.reps.push_back(to_string(r));
            c.cells.push_back(std::move(cell));
        }
    return c;
}

json chart_to_json(const Chart& c)
{
    json cells = json::array();
    for (const auto& x : c.cells)
        cells.push_back({{"s", x.s},
                         {"t", x.t},
                         {"e1", x.e1},
                         {"e2", x.e2},
                         {"certification", x.certification},
                         {"reps", x.reps}});
    return {{"schema", kSchema},
            {"kind", "chart"},
            {"p", c.p},
            {"window", {{"s_min", c.s_min}, {"s_max", c.s_max}, {"t_min", c.t_min}, {"t_max", c.t_max}}},
            {"cells", cells}};
}

Chart chart_from_json(const json& j)
{
    if (j.at("schema") != kSchema || j.at("kind") != "chart")
        throw Error(ErrorCode::ParseError, "not a mayv1 chart document");
    Chart c;
    c.p = j.at("p");
    const auto& w = j.at("window");
    c.s_min = w.at("s_min");
    c.s_max = w.at("s_max");
    c.t_min = w.at("t_min");
    c.t_max = w.at("t_max");
    for (const auto& x : j.at("cells")) {
        ChartCell cell;
        cell.s = x.at("s");
        cell.t = x.at("t");
        cell.e1 = x.at("e1");
        cell.e2 = x.at("e2");
        cell.certification = x.at("certification");
        cell.reps = x.at("reps").get<std::vector<std::string>>();
        c.cells.push_back(std::move(cell));
    }
    return c;
}

std::string chart_to_tsv(const Chart& c)
{
    std::ostringstream os;
    os << "# schema=" << kSchema << " p=" << c.p << " s=" << c.s_min << ".." << c.s_max << " t=" << c.t_min << ".."
       << c.t_max << "\n";
    os << "s\tt\tstem\te1\te2\tcertification\treps\n";
    for (const auto& x : c.cells) {
        os << x.s << '\t' << x.t << '\t' << x.t - x.s << '\t' << x.e1 << '\t' << x.e2 << '\t' << x.certification
           << '\t';
        for (std::size_t k = 0; k < x.reps.size(); ++k)
            os << (k ? "; " : "") << x.reps[k];
        os << '\n';
    }
    return os.str();
}

std::string chart_to_svg(const Chart& c)
{
    const int cw = 14, ch = 24, margin = 30;
    Int stem_lo = 0, stem_hi = 0, s_hi = 0;
    for (const auto& x : c.cells) {
        stem_hi = std::max(stem_hi, x.t - x.s);
        s_hi = std::max(s_hi, x.s);
    }
    if (!c.cells.empty()) {
        stem_lo = c.cells.front().t - c.cells.front().s;
        for (const auto& x : c.cells)
            stem_lo = std::min(stem_lo, x.t - x.s);
    }
    const Int width = (stem_hi - stem_lo + 1) * cw + 2 * margin;
    const Int height = (s_hi + 1) * ch + 2 * margin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<!-- schema=" << kSchema << " p=" << c.p << " x=t-s y=s -->\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
       << height - margin << "\" stroke=\"#888\"/>\n";
    for (const auto& x : c.cells) {
        if (x.e2 == 0)
            continue;
        const bool hollow = x.certification.rfind("UpperBound", 0) == 0;
        const Int cx = margin + (x.t - x.s - stem_lo) * cw + cw / 2;
        const Int cy = height - margin - x.s * ch - ch / 2;
        for (std::size_t k = 0; k < x.e2; ++k) {
            os << "<circle cx=\"" << cx + static_cast<Int>(k) * 4 << "\" cy=\"" << cy << "\" r=\"3\" "
               << (hollow ? "fill=\"none\" stroke=\"black\"" : "fill=\"black\"") << "><title>(" << x.s << "," << x.t
               << ") " << x.certification << "</title></circle>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void emit_chart(const Chart& c, const std::string& format, const std::string& path)
{
    std::string body;
    if (format == "json")
        body = chart_to_json(c).dump(1) + "\n";
    else if (format == "tsv")
        body = chart_to_tsv(c);
    else if (format == "svg")
        body = chart_to_svg(c);
    else
        throw Error(ErrorCode::InvalidParams, "unknown chart format '" + format + "'");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IOError, "cannot open '" + path + "' for writing");
    out << body;
    if (!out)
        throw Error(ErrorCode::IOError, "write to '" + path + "' failed");
}

}  // namespace maycalc
