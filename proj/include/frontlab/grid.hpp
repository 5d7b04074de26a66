#pragma once

#include <cstddef>

#include "frontlab/errors.hpp"

namespace frontlab {

struct Grid1D {
    double z_lo = -60.0;
    double z_hi = 60.0;
    std::size_t nz = 1201;

    double dz() const { return (z_hi - z_lo) / static_cast<double>(nz - 1); }
    double z(std::size_t j) const { return z_lo + dz() * static_cast<double>(j); }
    void validate() const {
        if (nz < 64) throw ConfigError("Grid1D requires nz >= 64");
        if (!(z_hi > z_lo)) throw ConfigError("Grid1D requires z_hi > z_lo");
    }
};

struct Grid2D {
    double Lx = 20.0;
    std::size_t nx = 64;
    double z_lo = -40.0;
    double z_hi = 50.0;
    std::size_t nz = 901;

    double dx() const { return Lx / static_cast<double>(nx); }
    double dz() const { return (z_hi - z_lo) / static_cast<double>(nz - 1); }
    double x(std::size_t i) const { return dx() * static_cast<double>(i); }
    double z(std::size_t j) const { return z_lo + dz() * static_cast<double>(j); }
    Grid1D column() const { return Grid1D{z_lo, z_hi, nz}; }
    void validate() const {
        if (nx < 8) throw ConfigError("Grid2D requires nx >= 8");
        if (nz < 64) throw ConfigError("Grid2D requires nz >= 64");
        if (!(Lx > 0.0)) throw ConfigError("Grid2D requires Lx > 0");
        if (!(z_hi > z_lo)) throw ConfigError("Grid2D requires z_hi > z_lo");
    }
};

}  // namespace frontlab
