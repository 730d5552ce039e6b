#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bwc/construct.hpp"
#include "bwc/formula.hpp"
#include "bwc/ipexport.hpp"
#include "bwc/oracle.hpp"
#include "bwc/transform.hpp"

namespace {

using bwc::BoardSpec;
using bwc::Coloring;
using json = nlohmann::ordered_json;

// All file outputs go through a temp-write + rename so a failing command
// never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_board(const Coloring& c) {
    std::string out;
    for (int r = 1; r <= c.spec().rows; ++r) {
        for (int k = 1; k <= c.spec().cols; ++k) {
            bwc::Cell cell{r, k};
            if (c.black().contains(cell))
                out += 'B';
            else if (c.white().contains(cell))
                out += 'W';
            else
                out += '.';
        }
        out += '\n';
    }
    return out;
}

json violation_json(const bwc::VerifyReport& rep) {
    if (!rep.violation) return nullptr;
    return json::array({json::array({rep.violation->first.row, rep.violation->first.col}),
                        json::array({rep.violation->second.row, rep.violation->second.col})});
}

bwc::SearchBudget make_budget(std::optional<int> max_sep, std::optional<long long> max_nodes,
                              std::optional<double> time_limit) {
    bwc::SearchBudget b;
    b.max_separator_size = max_sep;
    b.max_nodes = max_nodes;
    b.time_limit_seconds = time_limit;
    return b;
}

int cmd_phi(int m, int n, bool as_json) {
    bwc::PhiResult r = bwc::phi_knight(m, n);
    if (as_json) {
        json out{{"m", r.m},
                 {"n", r.n},
                 {"value", r.value},
                 {"uncolored", r.uncolored_target},
                 {"regime", bwc::regime_name(r.regime)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "value " << r.value << "\n"
                  << "uncolored " << r.uncolored_target << "\n"
                  << "regime " << bwc::regime_name(r.regime) << "\n";
    }
    return 0;
}

int cmd_construct(int m, int n, const std::string& out_path, bool render) {
    // construct() re-verifies internally; a certificate failure there is a
    // broken invariant of this binary (exit 3), not a user error (exit 2).
    std::optional<bwc::Construction> built;
    try {
        built.emplace(bwc::construct(m, n));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::runtime_error& e) {
        std::cerr << "internal error: construction failed its own certificate: " << e.what()
                  << "\n";
        return 3;
    }
    if (!out_path.empty()) write_file_atomic(out_path, bwc::write_placement(built->coloring));
    if (render) std::cout << render_board(built->coloring);
    std::cout << "b " << built->certificate.black << "\n"
              << "w " << built->certificate.white << "\n"
              << "uncolored " << built->certificate.uncolored << "\n";
    return 0;
}

int cmd_verify(const std::string& in_path, bool as_json) {
    Coloring c = bwc::read_placement(read_file(in_path));
    bwc::VerifyReport rep = bwc::verify(c);
    if (as_json) {
        json out{{"valid", rep.valid},
                 {"black", rep.black},
                 {"white", rep.white},
                 {"uncolored", rep.uncolored},
                 {"violation", violation_json(rep)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "valid " << (rep.valid ? "true" : "false") << "\n"
                  << "b " << rep.black << "\n"
                  << "w " << rep.white << "\n"
                  << "uncolored " << rep.uncolored << "\n";
        if (rep.violation)
            std::cout << "violation (" << rep.violation->first.row << ","
                      << rep.violation->first.col << ") (" << rep.violation->second.row << ","
                      << rep.violation->second.col << ")\n";
    }
    return rep.valid ? 0 : 1;
}

int cmd_solve(int m, int n, const std::string& piece, std::optional<int> max_sep,
              std::optional<long long> max_nodes, std::optional<double> time_limit,
              int threads, const std::string& witness_path) {
    BoardSpec spec(m, n, bwc::piece_from_name(piece));
    bwc::SolveResult res =
        bwc::solve_balanced(spec, make_budget(max_sep, max_nodes, time_limit), threads);
    std::cout << "value " << res.value << "\n"
              << "separator " << res.separator_size << "\n"
              << "proven " << (res.proven_optimal ? "true" : "false") << "\n"
              << "nodes " << res.explored << "\n";
    if (!witness_path.empty())
        write_file_atomic(witness_path, bwc::write_placement(res.witness));
    return 0;
}

int cmd_obwc(int m, int n, int b, const std::string& piece, std::optional<long long> max_nodes,
             std::optional<double> time_limit, const std::string& witness_path) {
    BoardSpec spec(m, n, bwc::piece_from_name(piece));
    bwc::SolveResult res =
        bwc::solve_fixed_b(spec, b, make_budget(std::nullopt, max_nodes, time_limit));
    std::cout << "w " << res.value << "\n"
              << "b " << b << "\n"
              << "separator " << res.separator_size << "\n"
              << "proven " << (res.proven_optimal ? "true" : "false") << "\n"
              << "nodes " << res.explored << "\n";
    if (!witness_path.empty())
        write_file_atomic(witness_path, bwc::write_placement(res.witness));
    return 0;
}

int cmd_normalize(const std::string& in_path, const std::string& trace_path,
                  const std::string& out_path) {
    Coloring c = bwc::read_placement(read_file(in_path));
    auto [result, trace] = bwc::normalize(c.spec(), c.black());
    if (!trace_path.empty()) write_file_atomic(trace_path, bwc::trace_report(trace));
    if (!out_path.empty()) {
        Coloring normalized(c.spec(), result, bwc::CellSet(c.spec()));
        write_file_atomic(out_path, bwc::write_placement(normalized));
    }
    std::cout << "n_initial " << trace.steps.front().n_value << "\n"
              << "n_final " << trace.steps.back().n_value << "\n"
              << "steps " << trace.steps.size() << "\n"
              << "monotone " << (trace.monotone ? "true" : "false") << "\n";
    return 0;
}

int cmd_export_ip(int m, int n, const std::string& piece, std::optional<long long> fix_b,
                  const std::string& out_path) {
    BoardSpec spec(m, n, bwc::piece_from_name(piece));
    std::string text = bwc::write_lp(bwc::build_ip(spec, fix_b));
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
    return 0;
}

int cmd_gen_table(const std::string& out_path) {
    std::ostringstream out;
    for (int m = 3; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            bwc::SearchBudget budget;
            budget.max_separator_size = m * n;  // lifts the size guard; bound still closes
            bwc::SolveResult res = bwc::solve_balanced(BoardSpec(m, n, bwc::Piece::knight),
                                                       budget, 4);
            if (!res.proven_optimal)
                throw std::runtime_error("table generation did not prove optimality");
            out << m << ' ' << n << ' ' << res.value << '\n';
        }
    if (out_path.empty())
        std::cout << out.str();
    else
        write_file_atomic(out_path, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced black-and-white anticoloring toolkit for chessboards"};
    app.require_subcommand(1);

    int m = 0, n = 0, b = 0, threads = 1;
    bool as_json = false, render = false;
    std::string in_path, out_path, trace_path, witness_path, piece = "knight";
    std::optional<int> max_sep;
    std::optional<long long> max_nodes, fix_b;
    std::optional<double> time_limit;

    auto* phi = app.add_subcommand("phi", "closed-form optimal balanced value");
    phi->add_option("--m", m, "rows")->required();
    phi->add_option("--n", n, "cols")->required();
    phi->add_flag("--json", as_json, "JSON output");

    auto* con = app.add_subcommand(
        "construct", "emit an optimal placement (row 1 at top, column 1 at left)");
    con->add_option("--m", m, "rows")->required();
    con->add_option("--n", n, "cols")->required();
    con->add_option("--out", out_path, "placement file to write");
    con->add_flag("--render", render, "print the board as B/W/. rows, top-down");

    auto* ver = app.add_subcommand("verify", "check a placement file");
    ver->add_option("--in", in_path, "placement file")->required();
    ver->add_flag("--json", as_json, "JSON output");

    auto* sol = app.add_subcommand("solve", "exact balanced optimum by separator search");
    sol->add_option("--m", m, "rows")->required();
    sol->add_option("--n", n, "cols")->required();
    sol->add_option("--piece", piece, "piece kind (default knight)");
    sol->add_option("--max-sep", max_sep, "stop after this separator size");
    sol->add_option("--max-nodes", max_nodes, "stop after this many evaluated subsets");
    sol->add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    sol->add_option("--threads", threads, "worker threads (default 1)");
    sol->add_option("--witness", witness_path, "write the witness placement here");

    auto* ob = app.add_subcommand("obwc", "exact max white count for a fixed black count");
    ob->add_option("--m", m, "rows")->required();
    ob->add_option("--n", n, "cols")->required();
    ob->add_option("--b", b, "black count")->required();
    ob->add_option("--piece", piece, "piece kind (default knight)");
    ob->add_option("--max-nodes", max_nodes, "stop after this many evaluated subsets");
    ob->add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    ob->add_option("--witness", witness_path, "write the witness placement here");

    auto* nor = app.add_subcommand("normalize", "run the column-normalization pipeline");
    nor->add_option("--in", in_path, "placement file (black set is normalized)")->required();
    nor->add_option("--trace", trace_path, "write the step/N trace here");
    nor->add_option("--out", out_path, "write the normalized black set as a placement");

    auto* exp = app.add_subcommand("export-ip", "write the integer program in LP format");
    exp->add_option("--m", m, "rows")->required();
    exp->add_option("--n", n, "cols")->required();
    exp->add_option("--piece", piece, "piece kind (default knight)");
    exp->add_option("--fix-b", fix_b, "fix the black count (the fixed-b variant)");
    exp->add_option("--out", out_path, "LP file to write (stdout when omitted)");

    auto* gen = app.add_subcommand("gen-table", "regenerate the small-board value table");
    gen->add_option("--out", out_path, "table file to write (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (phi->parsed()) return cmd_phi(m, n, as_json);
        if (con->parsed()) return cmd_construct(m, n, out_path, render);
        if (ver->parsed()) return cmd_verify(in_path, as_json);
        if (sol->parsed())
            return cmd_solve(m, n, piece, max_sep, max_nodes, time_limit, threads,
                             witness_path);
        if (ob->parsed())
            return cmd_obwc(m, n, b, piece, max_nodes, time_limit, witness_path);
        if (nor->parsed()) return cmd_normalize(in_path, trace_path, out_path);
        if (exp->parsed()) return cmd_export_ip(m, n, piece, fix_b, out_path);
        if (gen->parsed()) return cmd_gen_table(out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
