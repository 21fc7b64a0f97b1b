/**
 * @file serialization.cpp
 * @brief JSON/CSV emitters and parsers.
 */

#include "gaborframe/serialization.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

#include <json.hpp> // vendored nlohmann/json single header

#include "gaborframe/errors.hpp"

namespace gf {

using nlohmann::json;

namespace detail {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (res.ec != std::errc{}) throw Error("format_double: conversion failed");
    return std::string(buf.data(), res.ptr);
}

} // namespace detail

namespace {

json index_to_json_fields(const LatticeIndex& idx, int d) {
    json m = json::array();
    json n = json::array();
    for (int j = 0; j < d; ++j) {
        m.push_back(idx.m[j]);
        n.push_back(idx.n[j]);
    }
    return json{{"m", m}, {"n", n}};
}

LatticeIndex index_from_json_fields(const json& obj, int d) {
    LatticeIndex idx;
    const auto& m = obj.at("m");
    const auto& n = obj.at("n");
    if (static_cast<int>(m.size()) != d || static_cast<int>(n.size()) != d) {
        throw ConfigError("serialization: index arity does not match d");
    }
    for (int j = 0; j < d; ++j) {
        idx.m[j] = m.at(static_cast<std::size_t>(j)).get<int>();
        idx.n[j] = n.at(static_cast<std::size_t>(j)).get<int>();
    }
    return idx;
}

FrameParams params_from_json(const json& obj) {
    FrameParams params;
    params.k = obj.at("k").get<double>();
    params.d = obj.at("d").get<int>();
    params.validate();
    return params;
}

template <typename Map>
json term_array(const Map& map, int d) {
    json arr = json::array();
    for (const auto& [idx, w] : map) {
        json entry = index_to_json_fields(idx, d);
        entry["re"] = w.real();
        entry["im"] = w.imag();
        arr.push_back(std::move(entry));
    }
    return arr;
}

} // namespace

std::string to_json(const GaussianMixture& u) {
    json out{{"k", u.params().k},
             {"d", u.params().d},
             {"terms", term_array(u.terms(), u.params().d)}};
    return out.dump();
}

GaussianMixture mixture_from_json(const std::string& text) {
    try {
        const json obj = json::parse(text);
        GaussianMixture u(params_from_json(obj));
        for (const auto& entry : obj.at("terms")) {
            u.set_term(index_from_json_fields(entry, u.params().d),
                       Complex(entry.at("re").get<double>(),
                               entry.at("im").get<double>()));
        }
        return u;
    } catch (const json::exception& err) {
        throw ConfigError(std::string("mixture_from_json: ") + err.what());
    }
}

std::string to_json(const CoefficientMap& c) {
    json out{{"k", c.params.k},
             {"d", c.params.d},
             {"entries", term_array(c.entries, c.params.d)}};
    return out.dump();
}

CoefficientMap coefficients_from_json(const std::string& text) {
    try {
        const json obj = json::parse(text);
        CoefficientMap c{params_from_json(obj), {}};
        for (const auto& entry : obj.at("entries")) {
            c.entries[index_from_json_fields(entry, c.params.d)] =
                Complex(entry.at("re").get<double>(),
                        entry.at("im").get<double>());
        }
        return c;
    } catch (const json::exception& err) {
        throw ConfigError(std::string("coefficients_from_json: ") + err.what());
    }
}

std::string to_csv(const QuadratureGrid& grid) {
    const int d = grid.params.d;
    const int n = grid.spec.nodes_per_axis;
    std::ostringstream out;
    for (int j = 0; j < d; ++j) out << 'x' << j << ',';
    out << "re,im\n";
    std::array<int, kMaxDim> c{};
    for (std::size_t flat = 0; flat < grid.samples.size(); ++flat) {
        std::size_t rem = flat;
        for (int j = d - 1; j >= 0; --j) {
            c[j] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int j = 0; j < d; ++j) {
            out << detail::format_double(grid.node(c[j])) << ',';
        }
        out << detail::format_double(grid.samples[flat].real()) << ','
            << detail::format_double(grid.samples[flat].imag()) << '\n';
    }
    return out.str();
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "D,error,norm_ratio,slope_running,wall_time_ms\n";
    for (const auto& row : report.rows) {
        out << detail::format_double(row.D) << ','
            << detail::format_double(row.error) << ','
            << detail::format_double(row.norm_ratio) << ','
            << detail::format_double(row.slope_running) << ','
            << detail::format_double(row.wall_time_ms) << '\n';
    }
    return out.str();
}

std::string to_json(const SweepReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"D", row.D},
                            {"error", row.error},
                            {"norm_ratio", row.norm_ratio},
                            {"slope_running", row.slope_running},
                            {"wall_time_ms", row.wall_time_ms},
                            {"ok", row.ok},
                            {"note", row.note}});
    }
    const json out{{"rows", rows},
                   {"slope", report.slope},
                   {"r_squared", report.r_squared},
                   {"base_norm", report.base_norm}};
    return out.dump();
}

std::string to_csv(const DecayReport& report) {
    std::ostringstream out;
    out << "p,weighted_sum,sobolev_norm,ratio\n";
    for (const auto& row : report.rows) {
        out << row.p << ',' << detail::format_double(row.weighted_sum) << ','
            << detail::format_double(row.sobolev_norm) << ','
            << detail::format_double(row.ratio) << '\n';
    }
    return out.str();
}

std::string to_json(const DecayReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"p", row.p},
                            {"weighted_sum", row.weighted_sum},
                            {"sobolev_norm", row.sobolev_norm},
                            {"ratio", row.ratio}});
    }
    const json out{{"rows", rows}, {"window_radius", report.window_radius}};
    return out.dump();
}

std::string to_csv(const SharpnessReport& report) {
    return to_csv(std::vector<SharpnessReport>{report});
}

std::string to_json(const SharpnessReport& report) {
    json m_star = json::array();
    for (int j = 0; j < kMaxDim; ++j) m_star.push_back(report.m_star.m[j]);
    const json out{{"p", report.p},
                   {"r", report.r},
                   {"D", report.D},
                   {"m_star", m_star},
                   {"u_norm", report.u_norm},
                   {"proj_norm", report.proj_norm},
                   {"error", report.error},
                   {"high_norm", report.high_norm},
                   {"ratio", report.ratio}};
    return out.dump();
}

namespace {

std::string sharpness_row(const SharpnessReport& report) {
    std::ostringstream out;
    out << report.p << ',' << report.r << ','
        << detail::format_double(report.D) << ','
        << detail::format_double(report.u_norm) << ','
        << detail::format_double(report.proj_norm) << ','
        << detail::format_double(report.error) << ','
        << detail::format_double(report.high_norm) << ','
        << detail::format_double(report.ratio) << '\n';
    return out.str();
}

} // namespace

std::string to_csv(const std::vector<SharpnessReport>& reports) {
    std::string out = "p,r,D,u_norm,proj_norm,error,high_norm,ratio\n";
    for (const auto& report : reports) out += sharpness_row(report);
    return out;
}

std::string to_json(const std::vector<SharpnessReport>& reports) {
    json arr = json::array();
    for (const auto& report : reports) {
        arr.push_back(json::parse(to_json(report)));
    }
    return arr.dump();
}

std::string to_csv(const std::vector<FrameBoundsRow>& rows) {
    std::ostringstream out;
    out << "radius,alpha_sq,beta_sq,gamma\n";
    for (const auto& row : rows) {
        out << row.radius << ','
            << detail::format_double(row.bounds.alpha_sq) << ','
            << detail::format_double(row.bounds.beta_sq) << ','
            << detail::format_double(row.bounds.gamma) << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<FrameBoundsRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back(json{{"radius", row.radius},
                           {"alpha_sq", row.bounds.alpha_sq},
                           {"beta_sq", row.bounds.beta_sq},
                           {"gamma", row.bounds.gamma}});
    }
    return arr.dump();
}

} // namespace gf
