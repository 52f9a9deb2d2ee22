#include "gardner/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "gardner/basis.hpp"

namespace gardner {

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

void dump_json(const std::filesystem::path& file, const nlohmann::json& j) {
    auto out = open_out(file);
    out << j.dump(2) << '\n';
}

}  // namespace

void write_profile(const std::filesystem::path& file, const CoefficientState& state,
                   const GridSpec& grid, double lambda,
                   const std::function<double(double, double)>& exact, OutputFormat format) {
    const NodalWeights w = nodal_weights(lambda, grid.h());
    const auto u = nodal_values(state.delta_coeffs(), w);
    const auto v = nodal_values(state.phi_coeffs(), w);

    if (format == OutputFormat::csv) {
        auto out = open_out(file);
        out << "x,u_numeric,v_numeric,u_exact,error\n";
        for (int j = 0; j <= grid.n_intervals; ++j) {
            const double x = grid.node(j);
            out << format_double(x) << ',' << format_double(u[static_cast<size_t>(j)]) << ','
                << format_double(v[static_cast<size_t>(j)]);
            if (exact) {
                const double ue = exact(x, state.time);
                out << ',' << format_double(ue) << ','
                    << format_double(ue - u[static_cast<size_t>(j)]);
            } else {
                out << ",,";
            }
            out << '\n';
        }
        return;
    }

    nlohmann::json j;
    j["time"] = state.time;
    auto& cols = j["columns"];
    for (int m = 0; m <= grid.n_intervals; ++m) {
        const double x = grid.node(m);
        cols["x"].push_back(x);
        cols["u_numeric"].push_back(u[static_cast<size_t>(m)]);
        cols["v_numeric"].push_back(v[static_cast<size_t>(m)]);
        if (exact) {
            const double ue = exact(x, state.time);
            cols["u_exact"].push_back(ue);
            cols["error"].push_back(ue - u[static_cast<size_t>(m)]);
        } else {
            cols["u_exact"].push_back(nullptr);
            cols["error"].push_back(nullptr);
        }
    }
    dump_json(file, j);
}

void write_diagnostics(const std::filesystem::path& file,
                       const std::vector<DiagnosticsRecord>& records, OutputFormat format) {
    if (format == OutputFormat::csv) {
        auto out = open_out(file);
        out << "t,linf,M,E,H,C_M,C_E,C_H\n";
        for (const auto& r : records) {
            out << format_double(r.time) << ',';
            if (r.linf) out << format_double(*r.linf);
            out << ',' << format_double(r.m) << ',' << format_double(r.e) << ','
                << format_double(r.h_quantity) << ',' << format_double(r.c_m) << ','
                << format_double(r.c_e) << ',' << format_double(r.c_h) << '\n';
        }
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json rec;
        rec["t"] = r.time;
        if (r.linf)
            rec["linf"] = *r.linf;
        else
            rec["linf"] = nullptr;
        rec["M"] = r.m;
        rec["E"] = r.e;
        rec["H"] = r.h_quantity;
        rec["C_M"] = r.c_m;
        rec["C_E"] = r.c_e;
        rec["C_H"] = r.c_h;
        j.push_back(rec);
    }
    dump_json(file, j);
}

void write_scan_trace(const std::filesystem::path& file, const std::vector<ScanPoint>& trace,
                      OutputFormat format) {
    if (format == OutputFormat::csv) {
        auto out = open_out(file);
        out << "lambda,linf\n";
        for (const auto& p : trace)
            out << format_double(p.lambda) << ',' << format_double(p.linf) << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : trace) j.push_back({{"lambda", p.lambda}, {"linf", p.linf}});
    dump_json(file, j);
}

void write_stability_samples(const std::filesystem::path& file,
                             const std::vector<StabilitySample>& samples, OutputFormat format) {
    if (format == OutputFormat::csv) {
        auto out = open_out(file);
        out << "phi,eps_local,abs_rho1,abs_rho2\n";
        for (const auto& s : samples)
            out << format_double(s.phi) << ',' << format_double(s.eps_local) << ','
                << format_double(s.abs_rho1) << ',' << format_double(s.abs_rho2) << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : samples)
        j.push_back({{"phi", s.phi},
                     {"eps_local", s.eps_local},
                     {"abs_rho1", s.abs_rho1},
                     {"abs_rho2", s.abs_rho2}});
    dump_json(file, j);
}

void write_summary(const std::filesystem::path& file,
                   const std::vector<std::pair<std::string, std::string>>& entries,
                   OutputFormat format) {
    if (format == OutputFormat::csv) {
        auto out = open_out(file);
        out << "key,value\n";
        for (const auto& [k, v] : entries) out << k << ',' << v << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : entries) j[k] = v;
    dump_json(file, j);
}

}  // namespace gardner
