#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tpp/convergence.hpp"
#include "tpp/grid.hpp"
#include "tpp/model.hpp"
#include "tpp/solver.hpp"

namespace tpp {

/// How dx and dt are turned into node counts.
enum class GridFit {
    Strict,   ///< build_grid: steps must divide the domain
    Nearest,  ///< fit_grid: snap to the nearest count
};

/// Fully validated run configuration.
struct RunConfig {
    ModelParams params;
    Domain domain;  ///< t_min is always 0; t_max comes from t_end
    double dx = 0.1;
    double dt = 0.001;
    InitialCondition ic;
    Scheme scheme = Scheme::Telegraph;
    double probe_x = 25.0;
    int field_stride = 0;
    double blow_up_threshold = 1e6;
    double neg_tol = 0.0;  ///< defaults to 1e-9 x ic_height
    GridFit grid_fit = GridFit::Strict;

    GridSpec grid;  ///< built from domain, dx, dt and grid_fit

    ProbeConfig probes() const;
};

/// Parses `key = value` lines (`#` starts a comment). Keys:
///
///   a1 a2 b1 c1 c2 d1 d2 tau1 tau2      model parameters
///   x_min x_max t_end dx dt grid_fit    grid (grid_fit: strict | nearest)
///   ic_height ic_lo ic_hi               plateau initial condition
///   scheme                              telegraph | diffusive
///   probe_x field_stride blow_up_threshold neg_tol
///
/// Missing keys take the reference defaults (domain [0,50] x [0,100],
/// plateau 15 on [24,26], dx = 0.1, dt = 0.001).
///
/// Throws ParseError, UnknownKey, RejectedParam or NonCommensurate.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; throws IoError when it cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Refinement ladder file: one `dx,dt` pair per line, optional `dx,dt`
/// header, `#` comments.
std::vector<RefinementLevel> parse_levels(std::string_view text);
std::vector<RefinementLevel> load_levels(const std::filesystem::path& path);

/// Whole-file read; throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tpp
