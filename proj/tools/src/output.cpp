#include "hqlat_cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "hqlat/errors.hpp"
#include "hqlat/version.hpp"

namespace hqlat_cli {

namespace {

namespace fs = std::filesystem;

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw hqlat::ResourceLimitError("cannot write output file '" + path.string() + "'");
  }
  return out;
}

// One per-site family: rows are samples, columns the jc units.
void write_site_csv(const fs::path& path, const hqlat::ObservableSeries& series,
                    const std::vector<std::vector<double>>& values, double time_unit) {
  auto out = open_output(path);
  out << "time";
  for (int site : series.jc_sites) out << ",site_" << site + 1;
  out << '\n';
  for (std::size_t i = 0; i < series.num_samples(); ++i) {
    out << csv_number(series.times[i] * time_unit);
    for (double x : values[i]) out << ',' << csv_number(x);
    out << '\n';
  }
}

void write_activation_csv(const fs::path& path, const hqlat::ObservableSeries& series,
                          double time_unit) {
  auto out = open_output(path);
  out << "time,excitation\n";
  for (std::size_t i = 0; i < series.num_samples(); ++i) {
    out << csv_number(series.times[i] * time_unit) << ','
        << csv_number(series.activation_excitation[i]) << '\n';
  }
}

void write_scalars_csv(const fs::path& path, const hqlat::ObservableSeries& series,
                       double time_unit) {
  auto out = open_output(path);
  out << "time,norm,energy,total_excitation,eps_trunc\n";
  for (std::size_t i = 0; i < series.num_samples(); ++i) {
    out << csv_number(series.times[i] * time_unit) << ',' << csv_number(series.norm[i])
        << ',' << csv_number(series.energy[i]) << ','
        << csv_number(series.total_excitation[i]) << ','
        << csv_number(series.eps_trunc[i]) << '\n';
  }
}

double max_drift(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double drift = 0.0;
  for (double x : values) drift = std::max(drift, std::abs(x - values.front()));
  return drift;
}

}  // namespace

std::string manifest_text(const RunConfig& config, const hqlat::RunResult& result,
                          const std::string& command_line, double wall_seconds) {
  const hqlat::ObservableSeries& series = result.series;
  std::ostringstream out;
  out << "# hybrid-lattice " << hqlat::kVersion << " run manifest\n";
  out << "# command: " << command_line << '\n';
  out << "# wall_seconds = " << csv_number(wall_seconds) << '\n';
  out << "# steps = " << result.steps << '\n';
  out << "# samples = " << series.num_samples() << '\n';
  out << "# max_bond_dimension = " << result.max_bond_dim << '\n';
  out << "# final_eps_trunc = "
      << csv_number(series.eps_trunc.empty() ? 0.0 : series.eps_trunc.back()) << '\n';
  out << "# max_norm_drift = " << csv_number(max_drift(series.norm)) << '\n';
  out << "# max_energy_drift = " << csv_number(max_drift(series.energy)) << '\n';
  out << "# max_excitation_drift = " << csv_number(max_drift(series.total_excitation))
      << '\n';
  out << manifest_body(config);
  return out.str();
}

void write_run_outputs(const RunConfig& config, const hqlat::RunResult& result,
                       const std::string& command_line, double wall_seconds) {
  const fs::path dir(config.out_dir);
  fs::create_directories(dir);
  const hqlat::ObservableSeries& series = result.series;
  const double unit = config.spec.time_unit;
  const hqlat::ObservableSet& families = config.observables;

  if (families.tls) write_site_csv(dir / "tls_excitation.csv", series, series.tls_excitation, unit);
  if (families.photon) write_site_csv(dir / "photon_number.csv", series, series.photon_number, unit);
  if (families.polariton) {
    write_site_csv(dir / "polariton_number.csv", series, series.polariton_number, unit);
  }
  if (families.branches) {
    write_site_csv(dir / "branch_lower.csv", series, series.branch_lower, unit);
    write_site_csv(dir / "branch_upper.csv", series, series.branch_upper, unit);
  }
  if (series.has_activation) write_activation_csv(dir / "activation.csv", series, unit);
  write_scalars_csv(dir / "scalars.csv", series, unit);

  open_output(dir / "manifest.cfg")
      << manifest_text(config, result, command_line, wall_seconds);
  if (config.emit_plotscript) open_output(dir / "plot.py") << plot_script_text();
}

std::string plot_script_text() {
  return R"PY(#!/usr/bin/env python3
"""Render the CSV files written next to this script.

Per-site families become site-vs-time heat maps; activation.csv and
scalars.csv become line plots.  PNGs land in the same directory.
"""
import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RUN_DIR = os.path.dirname(os.path.abspath(__file__))

SITE_FAMILIES = [
    ("tls_excitation.csv", "TLS excitation"),
    ("photon_number.csv", "photon number"),
    ("polariton_number.csv", "polariton number"),
    ("branch_lower.csv", "lower-branch population"),
    ("branch_upper.csv", "upper-branch population"),
]


def load(name):
    path = os.path.join(RUN_DIR, name)
    if not os.path.exists(path):
        return None, None
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header = rows[0]
    data = [[float(x) for x in row] for row in rows[1:]]
    return header, data


def plot_site_family(name, title):
    header, data = load(name)
    if not data:
        return
    times = [row[0] for row in data]
    sites = [int(col.split("_")[1]) for col in header[1:]]
    grid = [[row[j + 1] for row in data] for j in range(len(sites))]
    fig, ax = plt.subplots(figsize=(7, 4))
    mesh = ax.pcolormesh(times, sites, grid, shading="nearest", cmap="magma")
    fig.colorbar(mesh, ax=ax, label=title)
    ax.set_xlabel("time")
    ax.set_ylabel("site")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(os.path.join(RUN_DIR, name.replace(".csv", ".png")), dpi=150)
    plt.close(fig)


def plot_lines(name, title):
    header, data = load(name)
    if not data:
        return
    times = [row[0] for row in data]
    fig, ax = plt.subplots(figsize=(7, 4))
    for j, col in enumerate(header[1:], start=1):
        ax.plot(times, [row[j] for row in data], label=col)
    ax.set_xlabel("time")
    ax.set_title(title)
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(os.path.join(RUN_DIR, name.replace(".csv", ".png")), dpi=150)
    plt.close(fig)


def main():
    for name, title in SITE_FAMILIES:
        plot_site_family(name, title)
    plot_lines("activation.csv", "activation-qubit excitation")
    plot_lines("scalars.csv", "run scalars")


if __name__ == "__main__":
    main()
)PY";
}

}  // namespace hqlat_cli
