#include "okflow/shapes.hpp"

#include <cmath>
#include <cstdlib>

#include "okflow/curve_json.hpp"

namespace okflow::shapes {

static Curve single(Component c, Ambient amb) {
    Curve out;
    out.ambient = amb;
    out.comp.push_back(std::move(c));
    return out;
}

Curve disk(double R, int N, Vec2 center) {
    if (R <= 0) throw validation_error("disk: radius must be positive");
    Component c;
    c.v.resize(N);
    for (int j = 0; j < N; ++j) {
        double th = 2.0 * M_PI * j / N;
        c.v[j] = {center.x + R * std::cos(th), center.y + R * std::sin(th)};
    }
    return single(std::move(c), Ambient::plane);
}

// dense sample of an analytic curve, then uniform-chord resample
static Component dense_resample(const std::vector<Vec2>& pts, int N, Orient orient) {
    Component c;
    c.v = pts;
    c.orient = orient;
    return resample_component(c, Ambient::plane, N);
}

Curve ellipse(double a, double b, int N) {
    if (a <= 0 || b <= 0) throw validation_error("ellipse: semi-axes must be positive");
    const int M = std::max(8 * N, 1024);
    std::vector<Vec2> pts(M);
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        pts[j] = {a * std::cos(th), b * std::sin(th)};
    }
    return single(dense_resample(pts, N, Orient::ccw), Ambient::plane);
}

Curve annulus(double r, double R, int N) {
    if (!(0 < r && r < R)) throw validation_error("annulus: need 0 < r < R");
    Curve out;
    out.ambient = Ambient::plane;
    Component outer, inner;
    outer.v.resize(N);
    inner.v.resize(N);
    inner.orient = Orient::cw;
    for (int j = 0; j < N; ++j) {
        double th = 2.0 * M_PI * j / N;
        outer.v[j] = {R * std::cos(th), R * std::sin(th)};
        inner.v[j] = {r * std::cos(-th), r * std::sin(-th)};
    }
    out.comp.push_back(std::move(outer));
    out.comp.push_back(std::move(inner));
    return out;
}

Curve polar(double r0, const std::vector<PolarMode>& modes, int N) {
    const int M = std::max(8 * N, 1024);
    std::vector<Vec2> pts(M);
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        double r = r0;
        for (const auto& m : modes) r += m.amp * std::cos(m.k * th + m.phase);
        if (r <= 0) throw validation_error("polar: radius function must stay positive");
        pts[j] = {r * std::cos(th), r * std::sin(th)};
    }
    return single(dense_resample(pts, N, Orient::ccw), Ambient::plane);
}

Curve perturbed_disk(double eps, int k, int N) {
    return polar(1.0, {{k, eps, 0.0}}, N);
}

// Self-contained xoroshiro128+ so corpus generation never depends on a
// library's engine implementation; uniform doubles take the top 53 bits.
namespace {
struct Rng {
    std::uint64_t s[2];
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed
        auto next = [&seed]() {
            seed += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        s[0] = next();
        s[1] = next();
    }
    std::uint64_t raw() {
        // xoroshiro128+
        std::uint64_t a = s[0], b = s[1];
        std::uint64_t r = a + b;
        b ^= a;
        s[0] = ((a << 55) | (a >> 9)) ^ b ^ (b << 14);
        s[1] = (b << 36) | (b >> 28);
        return r;
    }
    double uniform() { return (raw() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};
} // namespace

Curve random_convex(std::uint64_t seed, int K, int N, bool origin_symmetric, double amp) {
    if (K < 2) throw validation_error("random_convex: need K >= 2 modes");
    Rng rng(seed);
    struct Mode { int k; double a, ph; };
    std::vector<Mode> modes;
    for (int k = 2; k <= K; ++k) {
        if (origin_symmetric && k % 2) { rng.uniform(); rng.uniform(); continue; }
        double a = amp * rng.uniform(-1.0, 1.0) / (k * k);
        double ph = rng.uniform(0.0, 2.0 * M_PI);
        modes.push_back({k, a, ph});
    }
    // enforce h + h'' = 1 - sum a_k (k^2 - 1) cos(...) > 0
    double load = 0;
    for (const auto& m : modes) load += std::abs(m.a) * (m.k * m.k - 1);
    if (load > 0.85)
        for (auto& m : modes) m.a *= 0.85 / load;

    const int M = std::max(8 * N, 2048);
    std::vector<Vec2> pts(M);
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        double h = 1, hp = 0;
        for (const auto& m : modes) {
            h += m.a * std::cos(m.k * th + m.ph);
            hp += -m.a * m.k * std::sin(m.k * th + m.ph);
        }
        // X = h*(cos,sin) + h'*(-sin,cos): the curve with support function h
        pts[j] = {h * std::cos(th) - hp * std::sin(th),
                  h * std::sin(th) + hp * std::cos(th)};
    }
    return single(dense_resample(pts, N, Orient::ccw), Ambient::plane);
}

Curve two_disks(double R1, Vec2 c1, double R2, Vec2 c2, int N) {
    Curve out;
    out.ambient = Ambient::plane;
    out.comp.push_back(disk(R1, N, c1).comp[0]);
    out.comp.push_back(disk(R2, N, c2).comp[0]);
    return out;
}

Curve stripe(double w, int n, int N) {
    if (!(0 < w && w < 1)) throw validation_error("stripe: width must lie in (0,1)");
    if (n < 1) throw validation_error("stripe: need at least one band");
    Curve out;
    out.ambient = Ambient::torus;
    const double bw = w / n; // width of one band
    for (int b = 0; b < n; ++b) {
        double x0 = static_cast<double>(b) / n;
        double x1 = x0 + bw;
        Component right, left;
        right.v.resize(N);
        left.v.resize(N);
        for (int j = 0; j < N; ++j) {
            double y = static_cast<double>(j) / N;
            right.v[j] = {x1 - std::floor(x1), y};          // travels +y
            double yd = -static_cast<double>(j) / N;
            left.v[j] = {x0, yd - std::floor(yd)};          // travels -y
        }
        out.comp.push_back(std::move(right));
        out.comp.push_back(std::move(left));
    }
    return out;
}

Curve perturbed_stripe(double w, double eps, int k, int N) {
    if (!(0 < w && w < 1)) throw validation_error("stripe: width must lie in (0,1)");
    if (std::abs(eps) >= w / 2)
        throw validation_error("perturbed stripe: amplitude too large for the band");
    Curve out;
    out.ambient = Ambient::torus;
    Component right, left;
    right.v.resize(N);
    left.v.resize(N);
    for (int j = 0; j < N; ++j) {
        double y = static_cast<double>(j) / N;
        double x = w + eps * std::sin(2.0 * M_PI * k * y);
        right.v[j] = {x - std::floor(x), y};
        double yd = -static_cast<double>(j) / N;
        left.v[j] = {0.0, yd - std::floor(yd)};
    }
    out.comp.push_back(std::move(right));
    out.comp.push_back(std::move(left));
    return out;
}

Curve torus_disk(double area, Vec2 center, int N) {
    double R = std::sqrt(area / M_PI);
    if (!(R > 0) || R >= 0.5)
        throw validation_error("torus disk: area must give a radius below 1/2");
    Component c;
    c.v.resize(N);
    for (int j = 0; j < N; ++j) {
        double th = 2.0 * M_PI * j / N;
        double x = center.x + R * std::cos(th), y = center.y + R * std::sin(th);
        c.v[j] = {x - std::floor(x), y - std::floor(y)};
    }
    return single(std::move(c), Ambient::torus);
}

Curve scale(const Curve& c, double lambda) {
    if (c.ambient != Ambient::plane)
        throw validation_error("scale: plane shapes only");
    if (!(lambda > 0)) throw validation_error("scale: factor must be positive");
    Curve out = c;
    for (auto& cc : out.comp)
        for (auto& p : cc.v) p = lambda * p;
    return out;
}

Curve scale_to_area(const Curve& c, double target_area) {
    double A = measures(c).A;
    if (!(A > 0)) throw validation_error("scale_to_area: shape has no positive area");
    return scale(c, std::sqrt(target_area / A));
}

// ---------------------------------------------------------------------------

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

static double num(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw validation_error("shape spec: bad number '" + s + "'");
    return v;
}

Curve from_spec(const std::string& spec, int N) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "file") {
        if (rest.empty()) throw validation_error("shape spec 'file': missing path");
        return load_curve_json(rest);
    }
    auto args = rest.empty() ? std::vector<std::string>{} : split(rest, ',');

    auto want = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw validation_error("shape spec '" + kind + "': wrong number of arguments");
    };
    if (kind == "disk") { want(1, 1); return disk(num(args[0]), N); }
    if (kind == "ellipse") { want(2, 2); return ellipse(num(args[0]), num(args[1]), N); }
    if (kind == "annulus") { want(2, 2); return annulus(num(args[0]), num(args[1]), N); }
    if (kind == "stripe") {
        want(1, 2);
        return stripe(num(args[0]), args.size() > 1 ? static_cast<int>(num(args[1])) : 1, N);
    }
    if (kind == "pstripe") {
        want(2, 3);
        return perturbed_stripe(num(args[0]), num(args[1]),
                                args.size() > 2 ? static_cast<int>(num(args[2])) : 1, N);
    }
    if (kind == "pdisk") { want(2, 2); return perturbed_disk(num(args[0]), static_cast<int>(num(args[1])), N); }
    if (kind == "polar") {
        want(1, 16);
        std::vector<PolarMode> modes;
        for (std::size_t i = 1; i < args.size(); ++i) {
            auto f = split(args[i], ':');
            if (f.size() < 2 || f.size() > 3)
                throw validation_error("polar mode must be k:amp or k:amp:phase");
            modes.push_back({static_cast<int>(num(f[0])), num(f[1]),
                             f.size() > 2 ? num(f[2]) : 0.0});
        }
        return polar(num(args[0]), modes, N);
    }
    if (kind == "random") {
        want(1, 2);
        return random_convex(static_cast<std::uint64_t>(num(args[0])),
                             args.size() > 1 ? static_cast<int>(num(args[1])) : 6, N);
    }
    if (kind == "tdisk") {
        want(1, 3);
        Vec2 c{0.5, 0.5};
        if (args.size() == 3) c = {num(args[1]), num(args[2])};
        return torus_disk(num(args[0]), c, N);
    }
    throw validation_error("unknown shape spec '" + kind + "'");
}

} // namespace okflow::shapes
