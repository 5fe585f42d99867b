#pragma once

// CSV figure emission: the estimator-function overview plot and the
// entropy-estimate sweeps versus the minimal eigenvalue for each built-in
// design. Every row is sandwich-checked before it is written.

#include <cstddef>
#include <string>
#include <vector>

namespace entb {

struct FigureSpec {
    std::string id;            // fig1..fig6
    std::size_t points = 501;  // abscissa grid size, endpoints included
};

// Columns: x, y, f3neg, f5neg, f7neg, g3, g5, g7 with y = x ln x.
std::string emit_fig1(const std::vector<int>& degrees, std::size_t points);

// Columns: lambda, H_exact, LT, UT, LCh, UCh, ID for the design bound to the
// figure id (fig2..fig6); the state has qubit eigenvalues (1-lambda, lambda).
std::string emit_entropy_figure(const FigureSpec& spec);

// Dispatch on the figure id.
std::string figure_csv(const FigureSpec& spec);

// Minimal line-plot rendering of an emitted CSV (cosmetic; CSV is the contract).
std::string svg_from_csv(const std::string& csv);

// 17-significant-digit formatting used for all CSV numeric fields.
std::string csv_num(double v);

}  // namespace entb
