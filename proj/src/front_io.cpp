#include "front_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cchp {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool parse_number(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    while (end && (*end == ' ' || *end == '\t')) ++end;
    return end != begin && end && *end == '\0';
}

}  // namespace

std::string front_to_csv(const std::vector<Individual>& members) {
    std::ostringstream out;
    const std::size_t dim = members.empty() ? 3 : members.front().decision.size();
    for (std::size_t t = 0; t < dim / 3; ++t) {
        out << "grid_" << t << ",pgu_fuel_" << t << ",boiler_fuel_" << t << ",";
    }
    out << "cost,pec,cde,violation\n";
    for (const Individual& m : members) {
        for (const double v : m.decision) out << fmt(v) << ',';
        out << fmt(m.objectives.cost) << ',' << fmt(m.objectives.pec) << ','
            << fmt(m.objectives.cde) << ',' << fmt(m.violation.total) << '\n';
    }
    return out.str();
}

std::vector<Individual> parse_front_csv(const std::string& text, const std::string& origin) {
    std::vector<Individual> members;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t expected_cols = 0;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto check_shape = [&](std::size_t n) {
        if (n < 7 || (n - 4) % 3 != 0) fail("expected 3*T+4 columns, got " + std::to_string(n));
        if (expected_cols == 0) {
            expected_cols = n;
        } else if (n != expected_cols) {
            fail("inconsistent column count");
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> cells = split_cells(line);
        double first;
        if (!parse_number(cells.front(), first)) {
            if (!members.empty() || expected_cols != 0) fail("unexpected non-numeric row");
            check_shape(cells.size());
            continue;
        }
        check_shape(cells.size());

        Individual ind;
        const std::size_t dim = cells.size() - 4;
        ind.decision.resize(dim);
        std::vector<double> values(cells.size());
        values[0] = first;
        for (std::size_t k = 1; k < cells.size(); ++k) {
            if (!parse_number(cells[k], values[k])) {
                fail("column " + std::to_string(k + 1) + " is not a number");
            }
        }
        for (std::size_t k = 0; k < dim; ++k) ind.decision[k] = values[k];
        ind.objectives.cost = values[dim];
        ind.objectives.pec = values[dim + 1];
        ind.objectives.cde = values[dim + 2];
        ind.violation.total = values[dim + 3];
        members.push_back(std::move(ind));
    }
    return members;
}

std::vector<Individual> load_front_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open front file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_front_csv(buf.str(), path);
}

void save_front_csv(const std::string& path, const std::vector<Individual>& members) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write front file: " + path);
    out << front_to_csv(members);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cchp
