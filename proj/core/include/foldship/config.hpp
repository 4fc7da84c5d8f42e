#pragma once

#include <foldship/mass_model.hpp>
#include <foldship/sim.hpp>
#include <foldship/sweep.hpp>

#include <array>
#include <iosfwd>
#include <string>

namespace foldship {

// Everything the tool reads from one config file. The shipped defaults
// describe the reference craft; a default-constructed value is valid.
struct ProjectConfig {
    DesignInputs design;
    SweepGrid grid;
    PlantParams plant;
    std::array<AxisGains, kAxes> gains{
        AxisGains{1.25, 0.15, 0.10}, // x
        AxisGains{1.25, 0.15, 0.10}, // y (mirrors x)
        AxisGains{1.25, 1.00, 0.10}, // z
        AxisGains{1.25, 0.15, 0.10}, // yaw (mirrors x)
    };
    double sma_window_s = 0.0;
    bool damping = true;
    int phys_hz = 500;
    int ctrl_hz = 40;
    Scenario scenario = reference_scenario();
    PowerModel power;
    std::string output_dir = "out";

    // Whether the plant values were derived from the design rather than
    // set explicitly; derived ones follow later design edits.
    bool plant_base_mass_auto = true;
    bool plant_A_z_auto = true;

    // FNV-1a hash of the canonical serialization, carried into every
    // generated artifact as provenance.
    std::string fingerprint;
};

// Defaults with derived plant values resolved and the fingerprint set.
ProjectConfig default_config();

// Strict INI-style parse: a `version = 1` line first, then [section]
// blocks of key = value lines. Unknown sections, unknown keys, duplicates
// and malformed values are config_errors carrying "name line N:" context.
// Keys left out fall back to the defaults; plant base_mass_kg and A_z_m2
// additionally derive from the evaluated design when not given.
ProjectConfig load_config(std::istream& is, const std::string& name = "<config>");
ProjectConfig load_config_file(const std::string& path);

// Deterministic flat dump of every resolved value; input of the
// fingerprint hash.
std::string canonical_config(const ProjectConfig& cfg);

// Recomputes the fingerprint after programmatic edits.
void refresh_fingerprint(ProjectConfig& cfg);

// Replaces the three optimized parameters (pass n/m < 0 or lambda < 0 to
// keep the configured value), rederives the auto plant values and
// refreshes the fingerprint.
void apply_design_override(ProjectConfig& cfg, int n, int m, double lambda);

// Writes a complete, commented config file reproducing cfg.
void write_config(std::ostream& os, const ProjectConfig& cfg);

}
