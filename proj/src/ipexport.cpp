#include "bwc/ipexport.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bwc {

namespace {

std::string cell_suffix(const BoardSpec& spec, int idx) {
    Cell c = spec.cell_at(idx);
    return std::to_string(c.row) + "_" + std::to_string(c.col);
}

}  // namespace

IpModel build_ip(const BoardSpec& spec) {
    return build_ip(spec, std::nullopt);
}

IpModel build_ip(const BoardSpec& spec, std::optional<long long> fixed_b) {
    IpModel m{spec, {}, {}, fixed_b};
    const int cells = spec.cell_count();
    m.variables.reserve(static_cast<std::size_t>(2 * cells + 3));
    m.variables.push_back("theta");
    m.variables.push_back("b");
    m.variables.push_back("w");
    for (int i = 0; i < cells; ++i) m.variables.push_back("x_" + cell_suffix(spec, i));
    for (int i = 0; i < cells; ++i) m.variables.push_back("y_" + cell_suffix(spec, i));

    IpConstraint balB{"balB", {}, 'E', 0};
    for (int i = 0; i < cells; ++i) balB.terms.push_back({m.var_x(i), 1});
    balB.terms.push_back({m.var_b(), -1});
    m.constraints.push_back(std::move(balB));

    IpConstraint balW{"balW", {}, 'E', 0};
    for (int i = 0; i < cells; ++i) balW.terms.push_back({m.var_y(i), 1});
    balW.terms.push_back({m.var_w(), -1});
    m.constraints.push_back(std::move(balW));

    m.constraints.push_back({"minB", {{m.var_theta(), 1}, {m.var_b(), -1}}, 'L', 0});
    m.constraints.push_back({"minW", {{m.var_theta(), 1}, {m.var_w(), -1}}, 'L', 0});

    for (int i = 0; i < cells; ++i) {
        CellSet nbhd = closed_neighborhood(spec, spec.cell_at(i));
        const long long size = nbhd.count();
        IpConstraint row{"nbhd_" + cell_suffix(spec, i), {}, 'L', size};
        nbhd.for_each_index([&](int j) { row.terms.push_back({m.var_y(j), 1}); });
        row.terms.push_back({m.var_x(i), size});
        m.constraints.push_back(std::move(row));
    }
    return m;
}

std::string write_lp(const IpModel& model) {
    std::ostringstream out;
    const long long cells = model.spec.cell_count();
    out << "\\ balanced anticoloring model, " << piece_name(model.spec.piece) << " "
        << model.spec.rows << "x" << model.spec.cols << "\n";
    out << "Maximize\n obj: theta\nSubject To\n";
    for (const IpConstraint& c : model.constraints) {
        out << " " << c.name << ":";
        for (auto [var, coeff] : c.terms) {
            if (coeff >= 0)
                out << " + ";
            else
                out << " - ";
            long long mag = coeff < 0 ? -coeff : coeff;
            if (mag != 1) out << mag << " ";
            out << model.variables[static_cast<std::size_t>(var)];
        }
        out << (c.sense == 'E' ? " = " : " <= ") << c.rhs << "\n";
    }
    out << "Bounds\n";
    out << " 0 <= theta <= " << cells / 2 << "\n";
    if (model.fixed_b)
        out << " b = " << *model.fixed_b << "\n";
    else
        out << " 0 <= b <= " << cells << "\n";
    out << " 0 <= w <= " << cells << "\n";
    out << "Generals\n b w\nBinaries\n";
    for (int i = 0; i < cells; ++i)
        out << " " << model.variables[static_cast<std::size_t>(model.var_x(i))];
    out << "\n";
    for (int i = 0; i < cells; ++i)
        out << " " << model.variables[static_cast<std::size_t>(model.var_y(i))];
    out << "\nEnd\n";
    return out.str();
}

namespace {

struct LpReader {
    std::istringstream in;
    explicit LpReader(const std::string& text) : in(text) {}

    // Lines, comment lines dropped, trailing whitespace trimmed.
    std::vector<std::string> lines() {
        std::vector<std::string> out;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '\\') continue;
            while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
                line.pop_back();
            if (!line.empty()) out.push_back(line);
        }
        return out;
    }
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
}

int var_index(const IpModel& m, const std::string& name) {
    auto it = std::find(m.variables.begin(), m.variables.end(), name);
    if (it == m.variables.end()) throw std::runtime_error("lp: unknown variable " + name);
    return static_cast<int>(it - m.variables.begin());
}

IpConstraint parse_row(const IpModel& m, const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("lp: constraint without name");
    IpConstraint c;
    c.name = line.substr(0, colon);
    c.name.erase(0, c.name.find_first_not_of(' '));
    auto toks = tokens_of(line.substr(colon + 1));
    std::size_t i = 0;
    long long sign = 1;
    while (i < toks.size()) {
        if (toks[i] == "<=" || toks[i] == "=") {
            c.sense = toks[i] == "=" ? 'E' : 'L';
            if (i + 1 >= toks.size()) throw std::runtime_error("lp: missing rhs");
            c.rhs = std::stoll(toks[i + 1]);
            return c;
        }
        if (toks[i] == "+") {
            sign = 1;
            ++i;
            continue;
        }
        if (toks[i] == "-") {
            sign = -1;
            ++i;
            continue;
        }
        long long coeff = 1;
        if (!toks[i].empty() && (std::isdigit(static_cast<unsigned char>(toks[i][0])))) {
            coeff = std::stoll(toks[i]);
            ++i;
            if (i >= toks.size()) throw std::runtime_error("lp: coefficient without variable");
        }
        c.terms.push_back({var_index(m, toks[i]), sign * coeff});
        sign = 1;
        ++i;
    }
    throw std::runtime_error("lp: constraint without relation");
}

}  // namespace

IpModel parse_lp(const std::string& text) {
    auto lines = LpReader(text).lines();
    std::size_t i = 0;
    auto expect = [&](const std::string& s) {
        if (i >= lines.size() || lines[i] != s)
            throw std::runtime_error("lp: expected '" + s + "'");
        ++i;
    };
    // Header comment carries the board; it is stripped by the reader, so the
    // board is recovered from the variable names instead.
    expect("Maximize");
    if (i >= lines.size() || tokens_of(lines[i]) != std::vector<std::string>{"obj:", "theta"})
        throw std::runtime_error("lp: unsupported objective");
    ++i;
    expect("Subject To");
    std::vector<std::string> rows;
    while (i < lines.size() && lines[i] != "Bounds") rows.push_back(lines[i++]);
    expect("Bounds");
    std::vector<std::string> bounds;
    while (i < lines.size() && lines[i] != "Generals") bounds.push_back(lines[i++]);
    expect("Generals");
    while (i < lines.size() && lines[i] != "Binaries") ++i;
    expect("Binaries");
    int max_row = 0, max_col = 0;
    std::vector<std::string> binaries;
    while (i < lines.size() && lines[i] != "End") {
        for (const auto& t : tokens_of(lines[i])) binaries.push_back(t);
        ++i;
    }
    expect("End");
    for (const auto& name : binaries) {
        if (name.size() < 5 || name[1] != '_') throw std::runtime_error("lp: bad binary " + name);
        auto us = name.find('_', 2);
        max_row = std::max(max_row, std::stoi(name.substr(2, us - 2)));
        max_col = std::max(max_col, std::stoi(name.substr(us + 1)));
    }
    if (max_row == 0 || max_col == 0) throw std::runtime_error("lp: no binaries");

    std::optional<long long> fixed_b;
    for (const auto& bl : bounds) {
        auto toks = tokens_of(bl);
        if (toks.size() == 3 && toks[0] == "b" && toks[1] == "=") fixed_b = std::stoll(toks[2]);
    }
    IpModel model = build_ip(BoardSpec(max_row, max_col, Piece::knight), fixed_b);
    model.constraints.clear();
    for (const auto& row : rows) model.constraints.push_back(parse_row(model, row));
    return model;
}

std::vector<long long> assignment_from_coloring(const IpModel& model, const Coloring& c) {
    if (!c.spec().same_board(model.spec))
        throw std::invalid_argument("coloring belongs to a different board");
    std::vector<long long> a(model.variables.size(), 0);
    a[static_cast<std::size_t>(model.var_b())] = c.black_count();
    a[static_cast<std::size_t>(model.var_w())] = c.white_count();
    a[static_cast<std::size_t>(model.var_theta())] =
        std::min(c.black_count(), c.white_count());
    c.black().for_each_index(
        [&](int i) { a[static_cast<std::size_t>(model.var_x(i))] = 1; });
    c.white().for_each_index(
        [&](int i) { a[static_cast<std::size_t>(model.var_y(i))] = 1; });
    return a;
}

Coloring coloring_from_assignment(const IpModel& model,
                                  const std::vector<long long>& assignment) {
    if (assignment.size() != model.variables.size())
        throw std::invalid_argument("assignment length does not match the model");
    CellSet black(model.spec), white(model.spec);
    for (int i = 0; i < model.spec.cell_count(); ++i) {
        if (assignment[static_cast<std::size_t>(model.var_x(i))]) black.add(i);
        if (assignment[static_cast<std::size_t>(model.var_y(i))]) white.add(i);
    }
    return Coloring(model.spec, std::move(black), std::move(white));
}

std::optional<std::string> first_violated(const IpModel& model,
                                          const std::vector<long long>& assignment) {
    if (assignment.size() != model.variables.size())
        throw std::invalid_argument("assignment length does not match the model");
    for (const IpConstraint& c : model.constraints) {
        long long lhs = 0;
        for (auto [var, coeff] : c.terms)
            lhs += coeff * assignment[static_cast<std::size_t>(var)];
        if (c.sense == 'E' ? lhs != c.rhs : lhs > c.rhs) return c.name;
    }
    if (model.fixed_b &&
        assignment[static_cast<std::size_t>(model.var_b())] != *model.fixed_b)
        return "fixed_b_bound";
    return std::nullopt;
}

}  // namespace bwc
