#include "drsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace drsim {

namespace {

std::string fmt(const char* pattern, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

std::string name(ProtocolKind p) { return std::string(to_string(p)); }

}  // namespace

void write_run_csv(std::ostream& out, std::span<const RoundMetrics> series)
{
    out << "round,alive,ch_count,packets_to_bs,energy_spent,cumulative_energy\n";
    for (const RoundMetrics& m : series) {
        out << fmt("%d,%d,%d,%lld,%.12f,%.12f\n", m.round, m.alive, m.ch_count,
                   static_cast<long long>(m.packets_to_bs), m.energy_spent, m.cumulative_energy);
    }
}

void write_experiment_csv(std::ostream& out, std::span<const RunRecord> runs)
{
    out << "protocol,seed,fnd,hnd,lnd,total_packets\n";
    for (const RunRecord& r : runs) {
        out << fmt("%s,%llu,%d,%d,%d,%lld\n", name(r.protocol).c_str(), static_cast<unsigned long long>(r.seed),
                   r.summary.fnd, r.summary.hnd, r.summary.lnd, static_cast<long long>(r.summary.total_packets));
    }
}

void write_analytic_csv(std::ostream& out, std::span<const AnalyticRow> rows)
{
    out << "rho,d,P,e_is,e_cr,e_ms,e_os,e_total\n";
    for (const AnalyticRow& r : rows) {
        out << fmt("%.6f,%.6f,%.2f,%.12f,%.12f,%.12f,%.12f,%.12f\n", r.rho, r.d, r.p, r.e_is, r.e_cr, r.e_ms, r.e_os,
                   r.e_total);
    }
}

void write_run_summary(std::ostream& out, const SimConfig& config, const RunSummary& s)
{
    out << "protocol: " << to_string(config.protocol) << "\n"
        << "seed: " << config.seed << "\n"
        << "first node death (stability period): " << s.fnd << "\n"
        << "half nodes dead: " << s.hnd << "\n"
        << "last node death: " << s.lnd << "\n"
        << "packets to BS: " << s.total_packets << "\n";
}

void write_experiment_summary(std::ostream& out, const SimConfig& config, const ExperimentResult& result)
{
    out << "runs per protocol: " << config.runs << " (seeds " << config.seed << ".."
        << config.seed + static_cast<std::uint64_t>(config.runs) - 1 << ")\n\n";
    out << "protocol   metric          mean        median\n";
    for (const ProtocolAggregate& a : result.aggregates) {
        auto row = [&](const char* metric, const MetricStats& m) {
            out << fmt("%-10s %-14s %11.2f %11.2f\n", name(a.protocol).c_str(), metric, m.mean, m.median);
        };
        row("fnd", a.fnd);
        row("hnd", a.hnd);
        row("lnd", a.lnd);
        row("total_packets", a.total_packets);
    }
    out << "\nimprovement (a - b) / b x 100, medians (means in brackets)\n";
    for (const Improvement& i : result.improvements) {
        auto line = [&](const char* metric, const MetricStats& m) {
            out << fmt("%s vs %s %s: %+.2f%% [%+.2f%%]\n", name(i.a).c_str(), name(i.b).c_str(), metric, m.median,
                       m.mean);
        };
        line("FND", i.fnd);
        line("HND", i.hnd);
        line("LND", i.lnd);
        line("packets", i.total_packets);
    }
}

void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        try {
            body(out);
        } catch (...) {
            out.close();
            std::filesystem::remove(tmp);
            throw;
        }
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace drsim
