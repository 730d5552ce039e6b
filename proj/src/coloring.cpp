#include "bwc/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace bwc {

Coloring::Coloring(const BoardSpec& spec, CellSet black, CellSet white)
    : spec_(spec), black_(std::move(black)), white_(std::move(white)) {
    if (black_.rows() != spec_.rows || black_.cols() != spec_.cols ||
        white_.rows() != spec_.rows || white_.cols() != spec_.cols)
        throw std::invalid_argument("cell sets belong to a different board");
    if (black_.intersects(white_))
        throw std::invalid_argument("black and white sets overlap");
}

CellSet Coloring::uncolored() const {
    return (black_ | white_).complement();
}

VerifyReport verify(const Coloring& c) {
    VerifyReport r;
    r.black = c.black_count();
    r.white = c.white_count();
    r.uncolored = c.uncolored_count();
    r.valid = true;
    for (Cell b : c.black().cells()) {
        CellSet hit = attacks(c.spec(), b) & c.white();
        if (!hit.empty()) {
            r.valid = false;
            r.violation = std::pair{b, c.spec().cell_at(hit.first_index())};
            return r;
        }
    }
    return r;
}

CellSet forced_uncolored(const BoardSpec& spec, const CellSet& black) {
    return attack_closure(spec, black) - black;
}

int n_value(const BoardSpec& spec, const CellSet& black) {
    return forced_uncolored(spec, black).count();
}

std::pair<int, CellSet> max_white(const BoardSpec& spec, const CellSet& black) {
    CellSet white = (black | forced_uncolored(spec, black)).complement();
    return {white.count(), white};
}

ColumnProfile column_profile(const BoardSpec& spec, const CellSet& black) {
    if (black.rows() != spec.rows || black.cols() != spec.cols)
        throw std::invalid_argument("cell set belongs to a different board");
    const int m = spec.rows, n = spec.cols;
    ColumnProfile p;
    p.counts.assign(static_cast<std::size_t>(n), 0);
    p.flags.assign(static_cast<std::size_t>(n), {});
    std::vector<int> lowest_rows(static_cast<std::size_t>(n), 0);
    black.for_each_index([&](int idx) {
        int col = idx % n;
        int row = idx / n + 1;
        p.counts[static_cast<std::size_t>(col)]++;
        lowest_rows[static_cast<std::size_t>(col)] =
            std::max(lowest_rows[static_cast<std::size_t>(col)], row);
    });
    for (int k = 0; k < n; ++k) {
        int b = p.counts[static_cast<std::size_t>(k)];
        ColumnFlags& f = p.flags[static_cast<std::size_t>(k)];
        f.empty = b == 0;
        f.full = b == m;
        f.almost_full = b == m - 1 || b == m - 2;
        f.compact = b > 0 && lowest_rows[static_cast<std::size_t>(k)] == b;
    }
    return p;
}

ColumnProfile column_profile(const Coloring& c) {
    return column_profile(c.spec(), c.black());
}

namespace {

using json = nlohmann::json;

json cells_to_json(const CellSet& s) {
    json arr = json::array();
    for (Cell c : s.cells()) arr.push_back(json::array({c.row, c.col}));
    return arr;
}

CellSet cells_from_json(const BoardSpec& spec, const json& arr, const char* field) {
    if (!arr.is_array())
        throw std::runtime_error(std::string("placement field '") + field + "' must be a list");
    CellSet out(spec);
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::runtime_error(std::string("placement field '") + field +
                                     "' entries must be [row, col] integer pairs");
        Cell c{e[0].get<int>(), e[1].get<int>()};
        if (!spec.in_bounds(c))
            throw std::runtime_error(std::string("placement field '") + field +
                                     "' has a cell out of range");
        if (out.contains(c))
            throw std::runtime_error(std::string("placement field '") + field +
                                     "' has a duplicate cell");
        out.add(c);
    }
    return out;
}

}  // namespace

std::string write_placement(const Coloring& c) {
    nlohmann::ordered_json doc;
    doc["rows"] = c.spec().rows;
    doc["cols"] = c.spec().cols;
    doc["piece"] = piece_name(c.spec().piece);
    doc["black"] = cells_to_json(c.black());
    doc["white"] = cells_to_json(c.white());
    return doc.dump(2) + "\n";
}

Coloring read_placement(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("placement is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("placement must be a JSON object");
    for (const char* field : {"rows", "cols", "piece", "black", "white"})
        if (!doc.contains(field))
            throw std::runtime_error(std::string("placement missing field '") + field + "'");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        throw std::runtime_error("placement fields 'rows'/'cols' must be integers");
    int rows = doc["rows"].get<int>();
    int cols = doc["cols"].get<int>();
    if (rows < 1 || cols < 1) throw std::runtime_error("placement dimensions must be positive");
    if (!doc["piece"].is_string())
        throw std::runtime_error("placement field 'piece' must be a string");
    Piece piece;
    try {
        piece = piece_from_name(doc["piece"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
    BoardSpec spec(rows, cols, piece);
    CellSet black = cells_from_json(spec, doc["black"], "black");
    CellSet white = cells_from_json(spec, doc["white"], "white");
    if (black.intersects(white))
        throw std::runtime_error("placement black and white sets overlap");
    return Coloring(spec, std::move(black), std::move(white));
}

}  // namespace bwc
