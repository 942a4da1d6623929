#include "ccsync/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccsync {

namespace fs = std::filesystem;

void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    if (!fs::exists(dir)) throw std::runtime_error("output directory does not exist: " + dir.string());
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + target.string());
    }
}

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string csv_encode(const std::vector<std::string>& header, const Matrix& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (long r = 0; r < values.rows(); ++r) {
        for (long c = 0; c < values.cols(); ++c) {
            if (c) out << ',';
            out << format_number(values(r, c));
        }
        out << '\n';
    }
    return out.str();
}

CsvData read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty CSV: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    CsvData data;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) data.header.push_back(cell);
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != data.header.size())
            throw std::runtime_error("ragged CSV row in " + path);
        rows.push_back(std::move(row));
    }
    data.values.resize(static_cast<long>(rows.size()), static_cast<long>(data.header.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            data.values(static_cast<long>(r), static_cast<long>(c)) = rows[r][c];
    return data;
}

std::string trajectory_to_csv(const Trajectory& traj) {
    return csv_encode(traj.variable_names, traj.samples);
}

Trajectory trajectory_from_csv(const std::string& path, double dt) {
    const CsvData data = read_csv(path);
    if (data.values.rows() < 1) throw std::runtime_error("trajectory CSV has no rows: " + path);
    Trajectory t;
    t.variable_names = data.header;
    t.samples = data.values;
    t.dt = dt;
    return t;
}

}  // namespace ccsync
