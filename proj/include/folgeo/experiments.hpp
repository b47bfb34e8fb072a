#pragma once

#include <cstdint>
#include <string>

#include "folgeo/representation.hpp"

namespace folgeo {

// drivers behind the CLI subcommands; all writers are byte-deterministic for
// a fixed (config, seed). `meta` adds a timestamped comment line to CSV.

std::string version_string();

std::string spectrum_csv(const Representation& rho, const Representation* hol, int max_len,
                         bool meta);
std::string dominate_json(const Representation& rho, const Representation& hol, int max_len);
std::string exponent_json(const Representation& rho, const Representation& hol, double T,
                          double dt, std::uint64_t seed, int n_seeds);
std::string exponent_series_csv(const Representation& rho, const Representation& hol, double T,
                                double dt, std::uint64_t seed, bool meta);
std::string srb_json(const Representation& rho, const Representation& hol, double T, int n_orbits,
                     int bins, std::uint64_t seed);
std::string sections_csv(const Representation& rho, const Representation& hol, int n_dir,
                         int n_steps, double step, double t_back, bool meta);
std::string pair_json(const Representation& rho, const Representation& hol, double T, int max_len,
                      std::uint64_t seed);
std::string detect_json(const Representation& hol);

}  // namespace folgeo
