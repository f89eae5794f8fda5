// Command-line interface: distances, profile tables, canonical sets,
// perturbations, transforms, ratio reports, the optimizer and the
// verification battery. Numeric output uses 9 significant digits.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "heis/canonical.hpp"
#include "heis/extremal.hpp"
#include "heis/iso.hpp"
#include "heis/metric.hpp"
#include "heis/parallel.hpp"
#include "heis/profile.hpp"
#include "heis/verify.hpp"

using namespace heis;
using nlohmann::json;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double round9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

json point_json(const Point& p) {
    json arr = json::array();
    for (double c : p.coords()) arr.push_back(round9(c));
    return arr;
}

using AnySet = std::variant<ProfileSet, SectionSet>;

AnySet load_set(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    bool looks_json;
    if (path.size() > 5 && path.rfind(".json") == path.size() - 5)
        looks_json = true;
    else if (path.size() > 4 && path.rfind(".csv") == path.size() - 4)
        looks_json = false;
    else {
        const auto pos = text.find_first_not_of(" \t\r\n");
        looks_json = pos != std::string::npos && text[pos] == '{';
    }
    std::istringstream in(text);
    if (looks_json) return sectionset_from_json(in);
    return ProfileSet::from_csv(in);
}

std::ostream& open_out(std::optional<std::ofstream>& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.emplace(path);
    if (!*file) throw std::runtime_error("cannot write '" + path + "'");
    return *file;
}

json diameter_json(const DiameterReport& rep) {
    json j;
    j["value"] = round9(rep.value);
    j["witness"] = {point_json(rep.witness_p), point_json(rep.witness_q)};
    j["iterations"] = rep.iterations;
    j["refinement_level"] = rep.refinement_level;
    j["lower_witness_gap"] = round9(rep.lower_witness_gap);
    return j;
}

json nc_json(const NcReport& rep, bool with_samples) {
    json j;
    j["diam"] = round9(rep.diam);
    j["worst_slack"] = round9(rep.worst_slack);
    j["worst_point"] = point_json(rep.worst_point);
    j["min_slack"] = round9(rep.min_slack);
    if (with_samples) {
        json arr = json::array();
        for (const NcSample& s : rep.samples) {
            json js;
            js["p"] = point_json(s.p);
            js["slack"] = round9(s.slack);
            js["partner"] = point_json(s.partner);
            arr.push_back(std::move(js));
        }
        j["samples"] = std::move(arr);
    }
    return j;
}

json ratio_json(const RatioReport& rep) {
    json j;
    j["volume"] = round9(rep.volume);
    j["diameter"] = round9(rep.diameter);
    j["ratio"] = round9(rep.ratio);
    j["diagnostics"] = {{"n", rep.n}, {"grid_r", rep.grid_r}, {"grid_theta", rep.grid_theta},
                        {"tol", rep.tol}};
    return j;
}

BumpSpec make_bump(const std::string& kind, double lambda, double support, double amplitude,
                   const std::vector<double>& center) {
    BumpSpec f = kind == "offcenter" ? offcenter_cone_bump(lambda) : radial_cone_bump(lambda);
    if (support > 0.0) {
        const double scale = support / f.support_radius;
        f.support_radius = support;
        f.amplitude *= scale;  // keep the slope, not the height
    }
    if (!std::isnan(amplitude)) f.amplitude = amplitude;
    if (!center.empty()) {
        if (center.size() != 2) throw std::runtime_error("--center expects two coordinates");
        f.center = center;
        f.kind = BumpSpec::Kind::offcenter_cone;
    }
    f.lipschitz = std::abs(f.amplitude) / f.support_radius;
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical geometry of the sub-Riemannian Heisenberg group"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();  // the block after "--" in `dist p... -- q...` lands here

    int threads = 0;
    std::string out_path;
    app.add_option("--threads", threads, "worker thread count (default: HEIS_THREADS or cores)");
    app.add_option("-o,--out", out_path, "output path (default stdout)");

    // dist P... -- Q...
    auto* dist = app.add_subcommand("dist", "CC distance between two points (coords p... -- q...)");
    std::string method = "inversion";
    dist->allow_extras();  // coordinate blocks separated by --
    dist->add_option("--method", method)->check(CLI::IsMember({"inversion", "bisection"}));

    auto* profile = app.add_subcommand("profile", "emit the ball profile table r,h,h_prime,h_second");
    std::size_t profile_samples = 256;
    profile->add_option("--samples", profile_samples);

    auto* makea = app.add_subcommand("make-a", "build the canonical maximizer set as a profile CSV");
    double lambda = 1.0;
    std::size_t grid = 256;
    makea->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    makea->add_option("--grid", grid);

    auto* perturb = app.add_subcommand("perturb", "build a volume/diameter-preserving perturbation");
    std::string bump_kind = "radial";
    double bump_support = -1.0, bump_amplitude = std::nan("");
    std::vector<double> bump_center;
    double perturb_lambda = 1.0;
    std::size_t perturb_grid = 4096;
    perturb->add_option("--lambda", perturb_lambda)->check(CLI::PositiveNumber);
    perturb->add_option("--bump", bump_kind)->check(CLI::IsMember({"radial", "offcenter"}));
    perturb->add_option("--support", bump_support);
    perturb->add_option("--amplitude", bump_amplitude);
    perturb->add_option("--center", bump_center)->expected(2);
    perturb->add_option("--grid", perturb_grid);

    auto* vol = app.add_subcommand("volume", "volume of a set file");
    std::string vol_path;
    vol->add_option("set", vol_path)->required();

    auto* diam = app.add_subcommand("diameter", "diameter report of a set file");
    std::string diam_path;
    diam->add_option("set", diam_path)->required();

    auto* nc = app.add_subcommand("nc", "diametral-partner slack report");
    std::string nc_path;
    bool nc_samples = false;
    nc->add_option("set", nc_path)->required();
    nc->add_flag("--samples", nc_samples, "include the per-sample slack table");

    auto* symmetrize = app.add_subcommand("symmetrize", "Steiner symmetrization of a section set");
    auto* tco = app.add_subcommand("tco", "t-convex hull of a section set");
    std::string sym_path, tco_path;
    std::size_t convert_zcount = 4096;
    symmetrize->add_option("set", sym_path)->required();
    symmetrize->add_option("--zcount", convert_zcount);
    tco->add_option("set", tco_path)->required();
    tco->add_option("--zcount", convert_zcount);

    auto* ratio = app.add_subcommand("ratio", "isodiametric ratio report");
    std::string ratio_path;
    ratio->add_option("set", ratio_path)->required();

    auto* cmp = app.add_subcommand("compare", "compare the ratios of two sets");
    std::string cmp_a, cmp_b;
    cmp->add_option("first", cmp_a)->required();
    cmp->add_option("second", cmp_b)->required();

    auto* optimize = app.add_subcommand("optimize", "profile coordinate ascent toward the maximizer");
    OptimizerConfig ocfg;
    std::string opt_start, opt_profile_out;
    optimize->add_option("--m", ocfg.m);
    optimize->add_option("--sweeps", ocfg.max_sweeps);
    optimize->add_option("--theta-grid", ocfg.theta_grid);
    optimize->add_option("--step-tol", ocfg.step_tol);
    optimize->add_option("--start", opt_start, "starting profile CSV (default: ball)");
    optimize->add_option("--profile-out", opt_profile_out, "write the optimized profile CSV here");

    auto* verify = app.add_subcommand("verify", "run the verification battery");
    std::string level = "fast";
    std::uint64_t seed = 20240901;
    verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", seed);

    auto* cross = app.add_subcommand("cross-section", "CSV section of a set by a plane through the t-axis");
    std::string cross_path = "-";
    cross->add_option("set", cross_path);

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) set_thread_count(threads);

    try {
        if (!dist->parsed() && !app.remaining().empty())
            throw std::runtime_error("unexpected arguments: " + app.remaining().front() + " ...");
        std::optional<std::ofstream> out_file;
        std::ostream& out = open_out(out_file, out_path);

        if (dist->parsed()) {
            std::vector<std::string> toks = dist->remaining();
            for (const std::string& tok : app.remaining()) toks.push_back(tok);
            std::vector<double> coords;
            for (const std::string& tok : toks) {
                if (tok == "--") continue;
                coords.push_back(std::stod(tok));
            }
            if (coords.size() < 6 || coords.size() % 2 != 0)
                throw std::runtime_error("dist expects two blocks of 2n+1 coordinates");
            const std::size_t half = coords.size() / 2;
            if (half % 2 == 0) throw std::runtime_error("each point needs an odd coordinate count");
            const Point p = Point::from_coords({coords.begin(), coords.begin() + half});
            const Point q = Point::from_coords({coords.begin() + half, coords.end()});
            const auto m = method == "bisection" ? DistMethod::bisection : DistMethod::inversion;
            out << fmt9(distance(p, q, m)) << "\n";
        } else if (profile->parsed()) {
            out << "r,h,h_prime,h_second\n";
            char buf[128];
            for (std::size_t i = 0; i <= profile_samples; ++i) {
                const double r = static_cast<double>(i) / profile_samples;
                // derivative columns carry their limits at the endpoints:
                // h''(0+) = 2/pi, both derivatives diverge at the cusp r = 1
                const double hp = r < 1.0 ? h_prime(r) : -std::numeric_limits<double>::infinity();
                const double hs = r == 0.0  ? 2.0 / kPi
                                  : r < 1.0 ? h_second(r)
                                            : -std::numeric_limits<double>::infinity();
                std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e\n", r, h_fn(r), hp, hs);
                out << buf;
            }
        } else if (makea->parsed()) {
            build_A(lambda, grid).to_csv(out);
        } else if (perturb->parsed()) {
            const BumpSpec f =
                make_bump(bump_kind, perturb_lambda, bump_support, bump_amplitude, bump_center);
            to_json(build_A_perturbed(perturb_lambda, f, perturb_grid), out);
        } else if (vol->parsed()) {
            std::visit([&](const auto& s) { out << fmt9(volume(s)) << "\n"; }, load_set(vol_path));
        } else if (diam->parsed()) {
            std::visit([&](const auto& s) { out << diameter_json(diameter(s)).dump(1, '\t') << "\n"; },
                       load_set(diam_path));
        } else if (nc->parsed()) {
            std::visit([&](const auto& s) { out << nc_json(nc_check(s), nc_samples).dump(1, '\t') << "\n"; },
                       load_set(nc_path));
        } else if (symmetrize->parsed() || tco->parsed()) {
            const AnySet any = load_set(symmetrize->parsed() ? sym_path : tco_path);
            const SectionSet secs = std::holds_alternative<SectionSet>(any)
                                        ? std::get<SectionSet>(any)
                                        : profile_to_sections(std::get<ProfileSet>(any), convert_zcount);
            to_json(symmetrize->parsed() ? steiner_symmetrize(secs) : t_convex_hull(secs), out);
        } else if (ratio->parsed()) {
            std::visit([&](const auto& s) { out << ratio_json(iso_ratio(s)).dump(1, '\t') << "\n"; },
                       load_set(ratio_path));
        } else if (cmp->parsed()) {
            const auto ra = std::visit([](const auto& s) { return iso_ratio(s); }, load_set(cmp_a));
            const auto rb = std::visit([](const auto& s) { return iso_ratio(s); }, load_set(cmp_b));
            const CompareReport rep = compare(ra, rb);
            json j;
            j["first"] = ratio_json(rep.first);
            j["second"] = ratio_json(rep.second);
            j["difference"] = round9(rep.difference);
            j["rel_margin"] = round9(rep.rel_margin);
            out << j.dump(1, '\t') << "\n";
        } else if (optimize->parsed()) {
            std::unique_ptr<ProfileSet> start;
            if (!opt_start.empty()) {
                const AnySet any = load_set(opt_start);
                if (!std::holds_alternative<ProfileSet>(any))
                    throw std::runtime_error("optimize expects a profile CSV start");
                start = std::make_unique<ProfileSet>(std::get<ProfileSet>(any));
            }
            const auto [prof, rrep, trace] = optimize_profile(ocfg, start.get());
            if (!opt_profile_out.empty()) {
                std::ofstream pout(opt_profile_out);
                prof.to_csv(pout);
            }
            json j;
            j["ratio"] = ratio_json(rrep);
            j["sweeps"] = trace.sweeps;
            j["converged"] = trace.converged;
            json rises = json::array(), vols = json::array();
            for (double v : trace.max_rise_per_sweep) rises.push_back(round9(v));
            for (double v : trace.volume_per_sweep) vols.push_back(round9(v));
            j["max_rise_per_sweep"] = std::move(rises);
            j["volume_per_sweep"] = std::move(vols);
            out << j.dump(1, '\t') << "\n";
        } else if (verify->parsed()) {
            const VerifyReport rep =
                verify_suite(level == "full" ? VerifyLevel::full : VerifyLevel::fast, seed);
            out << verify_report_json(rep);
            return rep.all_pass ? 0 : 1;
        } else if (cross->parsed()) {
            const AnySet any = load_set(cross_path);
            out << "r,t_minus,t_plus\n";
            char buf[128];
            if (std::holds_alternative<ProfileSet>(any)) {
                const ProfileSet& s = std::get<ProfileSet>(any);
                const std::size_t m = 256;
                for (std::size_t i = 0; i <= 2 * m; ++i) {
                    const double r = s.R() * (static_cast<double>(i) / m - 1.0);
                    const double u = s.u(std::abs(r));
                    std::snprintf(buf, sizeof buf, "%s,%s,%s\n", fmt9(r).c_str(), fmt9(-u).c_str(),
                                  fmt9(u).c_str());
                    out << buf;
                }
            } else {
                const SectionSet& s = std::get<SectionSet>(any);
                std::vector<std::pair<double, std::size_t>> axis;
                for (std::size_t i = 0; i < s.sample_count(); ++i)
                    if (std::abs(s.zsamples[i][1]) <= 1e-12 && !s.sections[i].empty())
                        axis.push_back({s.zsamples[i][0], i});
                std::sort(axis.begin(), axis.end());
                for (const auto& [x, i] : axis) {
                    std::snprintf(buf, sizeof buf, "%s,%s,%s\n", fmt9(x).c_str(),
                                  fmt9(s.sections[i].front().lo).c_str(),
                                  fmt9(s.sections[i].back().hi).c_str());
                    out << buf;
                }
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
