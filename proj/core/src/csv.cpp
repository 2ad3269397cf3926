#include "eulerpoly/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace eulerpoly {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string nodes_csv(std::span<const Node> nodes) {
    std::string out = "x,y\n";
    for (const Node& n : nodes) {
        out += format_double(n.x);
        out += ',';
        out += format_double(n.y);
        out += '\n';
    }
    return out;
}

std::string curve_csv(const PolygonalCurve& curve) {
    return nodes_csv(curve.nodes);
}

std::string lipschitz_csv(std::span<const LipschitzEstimate> estimates) {
    std::string out = "x,estimate,analytic\n";
    for (const LipschitzEstimate& e : estimates) {
        out += format_double(e.x);
        out += ',';
        out += format_double(e.estimate);
        out += ',';
        if (e.analytic) out += format_double(*e.analytic);
        out += '\n';
    }
    return out;
}

std::string witness_csv(std::span<const double> xs,
                        std::span<const double> quotients) {
    if (xs.size() != quotients.size())
        throw std::invalid_argument("witness_csv: length mismatch");
    std::string out = "x,quotient\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]);
        out += ',';
        out += format_double(quotients[i]);
        out += '\n';
    }
    return out;
}

std::string convergence_csv(const ConvergenceReport& report) {
    std::string out = "h,dist_phi1,dist_phi2\n";
    for (const ConvergenceEntry& e : report.entries) {
        out += format_double(e.h);
        out += ',';
        out += format_double(e.dist_phi1);
        out += ',';
        out += format_double(e.dist_phi2);
        out += '\n';
    }
    return out;
}

std::string residual_csv(std::span<const double> xs,
                         std::span<const double> residuals) {
    if (xs.size() != residuals.size())
        throw std::invalid_argument("residual_csv: length mismatch");
    std::string out = "x,residual\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]);
        out += ',';
        out += format_double(residuals[i]);
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.is_open())
            throw fs::filesystem_error(
                "write_file_atomic: cannot open", tmp,
                std::make_error_code(std::errc::io_error));
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw fs::filesystem_error(
                "write_file_atomic: write failed", tmp,
                std::make_error_code(std::errc::io_error));
        }
    }
    fs::rename(tmp, path);
}

}  // namespace eulerpoly
