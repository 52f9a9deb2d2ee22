#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gardner/diagnostics.hpp"
#include "gardner/lambda_opt.hpp"
#include "gardner/stability.hpp"
#include "gardner/types.hpp"

namespace gardner {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);
std::string format_extension(OutputFormat f);

/// Shortest text that round-trips the double (17 significant digits).
std::string format_double(double v);

/// Snapshot of the reconstructed solution at the grid nodes. Columns:
/// x, u_numeric, v_numeric, u_exact, error; the last two stay blank (csv) or
/// null (json) without an exact solution.
void write_profile(const std::filesystem::path& file, const CoefficientState& state,
                   const GridSpec& grid, double lambda,
                   const std::function<double(double, double)>& exact, OutputFormat format);

/// Time series with columns t, linf, M, E, H, C_M, C_E, C_H.
void write_diagnostics(const std::filesystem::path& file,
                       const std::vector<DiagnosticsRecord>& records, OutputFormat format);

/// Scan trace with columns lambda, linf.
void write_scan_trace(const std::filesystem::path& file, const std::vector<ScanPoint>& trace,
                      OutputFormat format);

/// Sweep samples with columns phi, eps_local, abs_rho1, abs_rho2.
void write_stability_samples(const std::filesystem::path& file,
                             const std::vector<StabilitySample>& samples, OutputFormat format);

/// Ordered key/value summary record.
void write_summary(const std::filesystem::path& file,
                   const std::vector<std::pair<std::string, std::string>>& entries,
                   OutputFormat format);

}  // namespace gardner
