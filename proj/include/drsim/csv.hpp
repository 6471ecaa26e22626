#pragma once

#include "drsim/analytic.hpp"
#include "drsim/sim.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>

namespace drsim {

// Energies are written with 12 decimals (joules), percentages with 2,
// everything else as integers.

void write_run_csv(std::ostream& out, std::span<const RoundMetrics> series);
void write_experiment_csv(std::ostream& out, std::span<const RunRecord> runs);
void write_analytic_csv(std::ostream& out, std::span<const AnalyticRow> rows);

void write_run_summary(std::ostream& out, const SimConfig& config, const RunSummary& summary);
void write_experiment_summary(std::ostream& out, const SimConfig& config, const ExperimentResult& result);

/// Writes via a temporary sibling file and renames it into place, so the
/// target is either complete or absent.
void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace drsim
