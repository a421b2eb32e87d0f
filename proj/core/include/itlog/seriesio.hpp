#ifndef ITLOG_SERIESIO_HPP
#define ITLOG_SERIESIO_HPP

#include <iosfwd>
#include <string>

#include "itlog/diffpoly.hpp"
#include "itlog/series.hpp"

namespace itlog {

// Series text format: first line `order N`, then one line per non-zero
// coefficient, `k <num>/<den>` (exact) or `k <re> <im>` (float). UTF-8,
// LF line endings.
void write_series(std::ostream& os, const RSeries& s);
void write_series(std::ostream& os, const CSeries& s);
RSeries read_rseries(std::istream& is);
CSeries read_cseries(std::istream& is);

std::string series_to_string(const RSeries& s);
RSeries rseries_from_string(const std::string& text);

// Differential polynomial text: terms ascending by rank, monomials rendered
// as `X^a (X')^b (X'')^c ...` with integer coefficients.
std::string diffpoly_to_string(const IntDiffPoly& p, const std::string& symbol = "X");
std::string diffpoly_to_string(const PolyDiffPoly& p, const std::string& symbol = "Y");
IntDiffPoly parse_diffpoly(const std::string& text, const std::string& symbol = "X");

}  // namespace itlog

#endif
