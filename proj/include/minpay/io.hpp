#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "minpay/automata.hpp"
#include "minpay/currency.hpp"
#include "minpay/error.hpp"
#include "minpay/fractal.hpp"
#include "minpay/simulate.hpp"

namespace minpay {

/// Plain-text PBM (magic `P1`): header, then one line of 0/1 digits per row.
inline std::string to_pbm(const BinaryGrid& grid) {
    std::string out = "P1\n";
    out += std::to_string(grid.cols);
    out += ' ';
    out += std::to_string(grid.rows);
    out += '\n';
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) out += grid.at(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

/// Rasterize a delay plot with the y axis pointing up: the origin lands in
/// the bottom-left corner of the image, matching the plotted figures.
inline BinaryGrid raster_from_points(const DelayPlot& plot) {
    if (plot.points.empty()) fail(errc::empty_set, "cannot rasterize an empty point set");
    const int side = static_cast<int>(plot.extent);
    BinaryGrid grid(side, side);
    for (const LatticePoint& p : plot.points)
        grid.set(side - 1 - static_cast<int>(p.y), static_cast<int>(p.x), 1);
    return grid;
}

/// SVG with one unit square per 1-cell, emitted in row-major order so the
/// file is byte-identical across runs.
inline std::string to_svg(const BinaryGrid& grid) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << grid.cols << ' '
        << grid.rows << "\" shape-rendering=\"crispEdges\">\n";
    out << "<rect width=\"" << grid.cols << "\" height=\"" << grid.rows
        << "\" fill=\"white\"/>\n";
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c)
            if (grid.at(r, c))
                out << "<rect x=\"" << c << "\" y=\"" << r << "\" width=\"1\" height=\"1\"/>\n";
    out << "</svg>\n";
    return out.str();
}

/// CSV of the point set in its canonical (lexicographically sorted) order.
inline std::string points_to_csv(const DelayPlot& plot) {
    std::string out = "x,y\n";
    for (const LatticePoint& p : plot.points) {
        out += std::to_string(p.x);
        out += ',';
        out += std::to_string(p.y);
        out += '\n';
    }
    return out;
}

/// Per-step CSV of a run; t counts purchases starting at 1.
inline void run_to_csv(std::ostream& out, const SimulationRun& run) {
    out << "t,price,change_value,purse_size\n";
    for (std::size_t i = 0; i < run.prices.size(); ++i)
        out << (i + 1) << ',' << run.prices[i] << ',' << run.change_values[i] << ','
            << run.purse_sizes[i] << '\n';
}

inline std::string stats_to_json(const CoinStats& stats) {
    nlohmann::ordered_json j;
    j["mean"] = stats.mean.to_double();
    j["max"] = stats.max;
    j["histogram"] = stats.histogram;
    return j.dump(2) + "\n";
}

/// Parses {"name": str, "coins": [int...], "banknote": int}; the result is
/// validated like any built-in currency.
inline CurrencySpec currency_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        fail(errc::bad_currency_file, "currency file is not a JSON object");
    if (!j.contains("name") || !j["name"].is_string())
        fail(errc::bad_currency_file, "currency file needs a string \"name\"");
    if (!j.contains("coins") || !j["coins"].is_array())
        fail(errc::bad_currency_file, "currency file needs an integer array \"coins\"");
    if (!j.contains("banknote") || !j["banknote"].is_number_integer())
        fail(errc::bad_currency_file, "currency file needs an integer \"banknote\"");
    CurrencySpec spec;
    spec.name = j["name"].get<std::string>();
    for (const auto& c : j["coins"]) {
        if (!c.is_number_integer())
            fail(errc::bad_currency_file, "coin denominations must be integers");
        spec.coins.push_back(c.get<Money>());
    }
    spec.banknote = j["banknote"].get<Money>();
    return validate(spec);
}

inline CurrencySpec load_currency_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::bad_currency_file, "cannot open currency file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return currency_from_json(buf.str());
}

}  // namespace minpay
