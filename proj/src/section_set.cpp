#include "heis/section_set.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace heis {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void SectionSet::validate() const {
    if (n < 1) throw std::invalid_argument("SectionSet: n must be >= 1");
    if (sections.size() != zsamples.size())
        throw std::invalid_argument("SectionSet: zsamples/sections size mismatch");
    if (!cell_areas.empty() && cell_areas.size() != zsamples.size())
        throw std::invalid_argument("SectionSet: cell_areas size mismatch");
    for (const auto& z : zsamples)
        if (z.size() != 2 * n) throw std::invalid_argument("SectionSet: z sample of wrong dimension");
    for (const auto& secs : sections) {
        for (std::size_t k = 0; k < secs.size(); ++k) {
            if (!(secs[k].lo <= secs[k].hi))
                throw std::invalid_argument("SectionSet: interval with lo > hi");
            if (k > 0 && secs[k].lo <= secs[k - 1].hi)
                throw std::invalid_argument("SectionSet: intervals overlap or unsorted");
        }
    }
}

double SectionSet::znorm(std::size_t i) const {
    double s = 0.0;
    for (double c : zsamples[i]) s += c * c;
    return std::sqrt(s);
}

bool SectionSet::empty_body() const {
    for (const auto& secs : sections)
        if (!secs.empty()) return false;
    return true;
}

SectionSet SectionSet::polar_grid(double R, std::size_t target_count) {
    if (!(R > 0.0) || target_count < 8) throw std::invalid_argument("polar_grid: bad spec");
    // ring edges graded as R sin(s): widths shrink toward the rim, absorbing
    // the square-root cusp of ball-like profiles in the radial quadrature;
    // the angular pitch is budgeted separately so cells may be elongated
    const auto nr = static_cast<std::size_t>(std::clamp(
        std::round(std::sqrt(0.65 * static_cast<double>(target_count))), 8.0, 2048.0));
    const double pitch = 4.0 * R * static_cast<double>(nr) / static_cast<double>(target_count);

    SectionSet s;
    s.n = 1;
    std::vector<double> edges(nr + 1);
    for (std::size_t k = 0; k <= nr; ++k)
        edges[k] = k == nr ? R : R * std::sin(0.5 * kPi * static_cast<double>(k) / nr);
    for (std::size_t k = 0; k < nr; ++k) {
        const double a = edges[k], b = edges[k + 1];
        const double rnode = std::sqrt(0.5 * (a * a + b * b));  // midpoint in area measure
        auto cnt = static_cast<std::size_t>(std::max(4.0, std::round(2.0 * kPi * rnode / pitch)));
        if (cnt % 2 != 0) ++cnt;
        const double cell = kPi * (b * b - a * a) / static_cast<double>(cnt);
        // explicit conjugate pairs keep sigma-symmetry bitwise exact
        for (std::size_t j = 0; j <= cnt / 2; ++j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(cnt);
            const double x = rnode * std::cos(theta);
            const double y = j == 0 || j == cnt / 2 ? 0.0 : rnode * std::sin(theta);
            s.zsamples.push_back({x, y});
            s.cell_areas.push_back(cell);
            if (j != 0 && j != cnt / 2) {
                s.zsamples.push_back({x, -y});
                s.cell_areas.push_back(cell);
            }
        }
    }
    s.sections.assign(s.zsamples.size(), {});
    return s;
}

double volume(const SectionSet& s) {
    s.validate();
    if (s.cell_areas.empty())
        throw std::invalid_argument("volume: SectionSet carries no quadrature cell areas");
    double total = 0.0;
    for (std::size_t i = 0; i < s.sample_count(); ++i) {
        double len = 0.0;
        for (const Interval& iv : s.sections[i]) len += iv.length();
        total += len * s.cell_areas[i];
    }
    return total;
}

SectionSet t_convex_hull(const SectionSet& s) {
    SectionSet out = s;
    for (auto& secs : out.sections) {
        if (secs.size() <= 1) continue;
        secs = {Interval{secs.front().lo, secs.back().hi}};
    }
    return out;
}

SectionSet steiner_symmetrize(const SectionSet& s) {
    SectionSet out = s;
    for (auto& secs : out.sections) {
        if (secs.empty()) continue;
        double len = 0.0;
        for (const Interval& iv : secs) len += iv.length();
        const double half = 0.5 * len;
        secs = {Interval{-half, half}};
    }
    return out;
}

SectionSet dilate_set(double lambda, const SectionSet& s) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate_set: lambda must be positive");
    SectionSet out = s;
    const double l2 = lambda * lambda;
    for (auto& z : out.zsamples)
        for (double& c : z) c *= lambda;
    for (auto& secs : out.sections)
        for (Interval& iv : secs) {
            iv.lo *= l2;
            iv.hi *= l2;
        }
    for (double& a : out.cell_areas) a *= l2;  // areas are 2n-dimensional
    if (s.n > 1)
        for (double& a : out.cell_areas) a *= std::pow(lambda, 2.0 * (s.n - 1));
    return out;
}

EnvelopeData envelopes(const SectionSet& s, double thickness_eps) {
    s.validate();
    EnvelopeData env;
    const std::size_t m = s.sample_count();
    env.f_plus.assign(m, 0.0);
    env.f_minus.assign(m, 0.0);
    env.in_U.assign(m, 0);

    double extent = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (s.sections[i].empty()) continue;
        extent = std::max(extent, s.sections[i].back().hi - s.sections[i].front().lo);
    }
    if (thickness_eps < 0.0) thickness_eps = 1e-9 * extent;

    for (std::size_t i = 0; i < m; ++i) {
        if (s.sections[i].empty()) continue;
        env.f_minus[i] = s.sections[i].front().lo;
        env.f_plus[i] = s.sections[i].back().hi;
        env.in_U[i] = env.f_plus[i] - env.f_minus[i] > thickness_eps ? 1 : 0;
    }

    // one-cell dilation of U: keep samples within a nearest-neighbour step of
    // a thick sample (closure of U in the sampled geometry)
    double cell_step = 0.0;
    if (!s.cell_areas.empty()) {
        double max_area = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (!s.sections[i].empty()) max_area = std::max(max_area, s.cell_areas[i]);
        cell_step = 1.5 * std::sqrt(max_area);
    }
    std::vector<char> keep(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (s.sections[i].empty()) continue;
        if (env.in_U[i]) {
            keep[i] = 1;
            continue;
        }
        for (std::size_t j = 0; j < m && !keep[i]; ++j) {
            if (!env.in_U[j]) continue;
            double d2 = 0.0;
            for (std::size_t c = 0; c < 2 * s.n; ++c) {
                const double dd = s.zsamples[i][c] - s.zsamples[j][c];
                d2 += dd * dd;
            }
            if (d2 <= cell_step * cell_step) keep[i] = 1;
        }
    }

    env.ehat.n = s.n;
    for (std::size_t i = 0; i < m; ++i) {
        if (!keep[i]) continue;
        env.ehat.zsamples.push_back(s.zsamples[i]);
        env.ehat.sections.push_back({Interval{env.f_minus[i], env.f_plus[i]}});
        if (!s.cell_areas.empty()) env.ehat.cell_areas.push_back(s.cell_areas[i]);
    }
    return env;
}

SectionSet profile_to_sections(const ProfileSet& s, std::size_t zcount) {
    if (s.n() != 1)
        throw std::invalid_argument("profile_to_sections: polar sampling implemented for n = 1");
    SectionSet out = SectionSet::polar_grid(s.R(), zcount);
    for (std::size_t i = 0; i < out.sample_count(); ++i) {
        const double r = out.znorm(i);
        const double u = s.u(std::min(r, s.R()));
        out.sections[i] = {Interval{-u, u}};
    }
    return out;
}

SectionSet sectionset_from_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    SectionSet s;
    s.n = j.at("n").get<std::size_t>();
    for (const auto& z : j.at("zsamples")) s.zsamples.push_back(z.get<std::vector<double>>());
    for (const auto& secs : j.at("sections")) {
        std::vector<Interval> row;
        for (const auto& iv : secs) {
            if (!iv.is_array() || iv.size() != 2)
                throw std::invalid_argument("SectionSet: section entries must be [t0,t1]");
            row.push_back({iv[0].get<double>(), iv[1].get<double>()});
        }
        s.sections.push_back(std::move(row));
    }
    if (j.contains("cell_areas")) {
        s.cell_areas = j.at("cell_areas").get<std::vector<double>>();
    } else if (!s.zsamples.empty()) {
        // reconstruct quadrature weights from nearest-neighbour spacing,
        // normalized to the sampled support disc
        const std::size_t m = s.zsamples.size();
        std::vector<double> w(m, 0.0);
        double rmax = 0.0, dsum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i) continue;
                double d2 = 0.0;
                for (std::size_t c = 0; c < 2 * s.n; ++c) {
                    const double dd = s.zsamples[i][c] - s.zsamples[k][c];
                    d2 += dd * dd;
                }
                best = std::min(best, d2);
            }
            w[i] = m > 1 ? best : 1.0;  // squared nn distance ~ cell area
            rmax = std::max(rmax, s.znorm(i));
            dsum += std::sqrt(w[i]);
        }
        const double support = kPi * std::pow(rmax + 0.5 * dsum / static_cast<double>(m), 2.0);
        double wsum = 0.0;
        for (double v : w) wsum += v;
        s.cell_areas.resize(m);
        for (std::size_t i = 0; i < m; ++i) s.cell_areas[i] = w[i] / wsum * support;
    }
    s.validate();
    return s;
}

void to_json(const SectionSet& s, std::ostream& out) {
    nlohmann::json j;
    j["n"] = s.n;
    auto zs = nlohmann::json::array();
    for (const auto& z : s.zsamples) zs.push_back(z);
    j["zsamples"] = std::move(zs);
    auto secs = nlohmann::json::array();
    for (const auto& row : s.sections) {
        auto jrow = nlohmann::json::array();
        for (const Interval& iv : row) jrow.push_back({iv.lo, iv.hi});
        secs.push_back(std::move(jrow));
    }
    j["sections"] = std::move(secs);
    if (!s.cell_areas.empty()) j["cell_areas"] = s.cell_areas;
    out << j.dump(1, '\t') << '\n';
}

}  // namespace heis
