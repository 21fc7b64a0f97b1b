/**
 * @file serialization.hpp
 * @brief JSON round-trips for mixtures and coefficient maps, CSV dumps for
 *        grids and experiment reports.
 *
 * @details Formats are deterministic: terms and entries appear in the
 * container's sorted index order, floating-point values use
 * shortest-round-trip formatting with a '.' decimal separator regardless
 * of locale, and line endings are LF.
 *
 * Schemas:
 *  - mixture:       `{"k", "d", "terms":   [{"m": [...], "n": [...], "re", "im"}]}`
 *  - coefficients:  `{"k", "d", "entries": [{"m": [...], "n": [...], "re", "im"}]}`
 *  - grid CSV:      `x0[,x1[,x2]],re,im`
 *  - sweep CSV:     `D,error,norm_ratio,slope_running,wall_time_ms`
 *  - decay CSV:     `p,weighted_sum,sobolev_norm,ratio`
 *  - sharpness CSV: `p,r,D,u_norm,proj_norm,error,high_norm,ratio`
 *  - bounds CSV:    `radius,alpha_sq,beta_sq,gamma`
 */

#pragma once

#include <string>

#include "gaborframe/experiments.hpp"
#include "gaborframe/frame_ops.hpp"

namespace gf {

/** @brief Mixture to JSON text. */
std::string to_json(const GaussianMixture& u);

/** @brief Mixture from JSON text. @throws ConfigError on malformed input. */
GaussianMixture mixture_from_json(const std::string& text);

/** @brief Coefficient map to JSON text. */
std::string to_json(const CoefficientMap& c);

/** @brief Coefficient map from JSON text. @throws ConfigError on malformed input. */
CoefficientMap coefficients_from_json(const std::string& text);

/** @brief Grid samples as CSV (`x...,re,im`), one node per row, flat order. */
std::string to_csv(const QuadratureGrid& grid);

/** @brief Sweep rows in the mandated 5-column schema (header included). */
std::string to_csv(const SweepReport& report);

/** @brief Full sweep report: rows plus slope, r_squared, base_norm. */
std::string to_json(const SweepReport& report);

/** @brief Decay table rows (header included). */
std::string to_csv(const DecayReport& report);

/** @brief Decay report with the window radius. */
std::string to_json(const DecayReport& report);

/** @brief Single sharpness row (header included). */
std::string to_csv(const SharpnessReport& report);

/** @brief Sharpness report, all fields. */
std::string to_json(const SharpnessReport& report);

/** @brief Several sharpness rows under one header (e.g. one per D). */
std::string to_csv(const std::vector<SharpnessReport>& reports);

/** @brief Sharpness reports as a JSON array. */
std::string to_json(const std::vector<SharpnessReport>& reports);

/** @brief Frame-bound rows (header included). */
std::string to_csv(const std::vector<FrameBoundsRow>& rows);

/** @brief Frame-bound rows as a JSON array. */
std::string to_json(const std::vector<FrameBoundsRow>& rows);

namespace detail {
/** @brief Locale-independent shortest-round-trip formatting ("nan"/"inf" spelled out). */
std::string format_double(double value);
} // namespace detail

} // namespace gf
