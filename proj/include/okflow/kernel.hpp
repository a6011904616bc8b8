#pragma once

#include <string>

#include "okflow/util.hpp"

namespace okflow {

// Which Green's function generates the potential:
//   log    : G(x,y) = -(1/2pi) log|x-y|            (plane)
//   riesz  : G(x,y) = |x-y|^(-alpha), alpha in (0,1) (plane)
//   torus  : spectral solve of -Lap(phi) = u - ubar  (unit torus)
struct Kernel {
    enum class Type { log, riesz, torus };
    Type type = Type::log;
    double alpha = 0.5; // riesz only
    int grid = 512;     // torus only; power of two >= 128

    static Kernel Log() { return {Type::log, 0.0, 0}; }
    static Kernel Riesz(double a) { return {Type::riesz, a, 0}; }
    static Kernel Torus(int n) { return {Type::torus, 0.0, n}; }

    void check() const {
        if (type == Type::riesz && !(alpha > 0.0 && alpha < 1.0))
            throw validation_error("riesz kernel requires alpha in (0,1)");
        if (type == Type::torus) {
            if (grid < 128 || (grid & (grid - 1)) != 0)
                throw validation_error("torus kernel requires a power-of-two grid >= 128");
        }
    }

    bool plane() const { return type != Type::torus; }

    std::string name() const {
        switch (type) {
            case Type::log: return "log";
            case Type::riesz: return "riesz:" + fmt17(alpha);
            default: return "torus:" + std::to_string(grid);
        }
    }

    // "log", "riesz:0.5", "torus:512"
    static Kernel parse(const std::string& s);
};

} // namespace okflow
