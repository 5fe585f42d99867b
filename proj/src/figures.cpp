#include "entb/figures.hpp"

#include "entb/errors.hpp"
#include "entb/poly_estimators.hpp"
#include "entb/relations.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace entb {

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string emit_fig1(const std::vector<int>& degrees, std::size_t points) {
    if (degrees.empty()) throw DomainError("need at least one degree");
    points = std::max<std::size_t>(points, 2);
    std::ostringstream out;
    out << "x,y";
    for (int n : degrees) out << ",f" << n << "neg";
    for (int n : degrees) out << ",g" << n;
    out << "\n";
    for (std::size_t i = 0; i < points; ++i) {
        double x = (i + 1 == points) ? 1.0 : static_cast<double>(i) / (points - 1);
        double y = xlnx(x);
        out << csv_num(x) << "," << csv_num(y);
        for (int n : degrees) {
            double fneg = -eval_f(n, x);
            if (fneg < y - 1e-12)
                throw CheckFailure("estimator row check failed: -f_" + std::to_string(n) +
                                   " dips below x ln x at x=" + std::to_string(x));
            out << "," << csv_num(fneg);
        }
        for (int n : degrees) {
            double g = eval_g(n, x);
            if (g < y - 1e-12)
                throw CheckFailure("estimator row check failed: g_" + std::to_string(n) +
                                   " dips below x ln x at x=" + std::to_string(x));
            out << "," << csv_num(g);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

const std::map<std::string, DesignName>& figure_bindings() {
    static const std::map<std::string, DesignName> map = {
        {"fig2", DesignName::Octahedron},
        {"fig3", DesignName::Mub3},
        {"fig4", DesignName::Icosahedron},
        {"fig5", DesignName::Icosidodecahedron},
        {"fig6", DesignName::McLarenSnubCube},
    };
    return map;
}

}  // namespace

std::string emit_entropy_figure(const FigureSpec& spec) {
    auto it = figure_bindings().find(spec.id);
    if (it == figure_bindings().end()) throw InvalidTag("unknown figure id '" + spec.id + "'");
    const QuantumDesign design = builtin_design(it->second);
    const std::size_t points = std::max<std::size_t>(spec.points, 2);
    const bool mub_figure = spec.id == "fig3";

    std::ostringstream out;
    out << "lambda,H_exact,LT,UT,LCh,UCh,ID\n";
    for (std::size_t i = 0; i < points; ++i) {
        double lam = (i + 1 == points) ? 0.5 : 0.5 * static_cast<double>(i) / (points - 1);
        QuantumState rho = QuantumState::from_bloch({0.0, 0.0, 1.0 - 2.0 * lam});
        RelationResult taylor = prop2_bounds(design, rho, Method::Taylor);
        RelationResult cheb = prop2_bounds(design, rho, Method::Chebyshev);
        double h = taylor.average_entropy;
        double id_bound;
        if (mub_figure) {
            double purity = (1.0 - lam) * (1.0 - lam) + lam * lam;
            id_bound = mub_bound(purity);
        } else {
            id_bound = id_estimate(beta_bar(design, rho, 2, false), design.K());
        }
        auto check = [&](double lo, double hi, const char* what) {
            if (lo > h + 1e-10 || h > hi + 1e-10)
                throw CheckFailure(std::string("figure sandwich violated (") + what +
                                   ") at lambda=" + std::to_string(lam));
        };
        check(taylor.lower, taylor.upper, "taylor");
        check(cheb.lower, cheb.upper, "cheb");
        out << csv_num(lam) << "," << csv_num(h) << "," << csv_num(taylor.lower) << ","
            << csv_num(taylor.upper) << "," << csv_num(cheb.lower) << "," << csv_num(cheb.upper)
            << "," << csv_num(id_bound) << "\n";
    }
    return out.str();
}

std::string figure_csv(const FigureSpec& spec) {
    if (spec.id == "fig1") return emit_fig1({3, 5, 7}, spec.points);
    return emit_entropy_figure(spec);
}

namespace {

std::vector<std::vector<double>> parse_csv_columns(const std::string& csv,
                                                   std::vector<std::string>& header) {
    std::istringstream in(csv);
    std::string line;
    std::vector<std::vector<double>> cols;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            if (first) {
                header.push_back(cell);
                cols.emplace_back();
            } else {
                if (c >= cols.size()) throw DomainError("ragged CSV row");
                cols[c].push_back(std::stod(cell));
            }
            ++c;
        }
        first = false;
    }
    return cols;
}

}  // namespace

std::string svg_from_csv(const std::string& csv) {
    std::vector<std::string> header;
    auto cols = parse_csv_columns(csv, header);
    if (cols.size() < 2 || cols[0].empty()) throw DomainError("CSV has no plottable data");

    const double width = 720, height = 480, margin = 56;
    double xmin = cols[0].front(), xmax = cols[0].back();
    double ymin = 1e300, ymax = -1e300;
    for (std::size_t c = 1; c < cols.size(); ++c)
        for (double v : cols[c]) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax <= ymin) ymax = ymin + 1.0;
    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
        << "\" height=\"" << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t c = 1; c < cols.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\"" << palette[(c - 1) % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < cols[c].size(); ++i)
            out << px(cols[0][i]) << "," << py(cols[c][i]) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 16.0 * c
            << "\" font-size=\"12\" fill=\"" << palette[(c - 1) % 8] << "\">" << header[c]
            << "</text>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 4
        << "\" font-size=\"12\" text-anchor=\"middle\">" << header[0] << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace entb
