#include "heis/point.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heis {

Point::Point(std::initializer_list<double> c) : coords_(c) {
    if (coords_.empty() || coords_.size() % 2 == 0)
        throw std::invalid_argument("Point: coordinate count must be 2n+1");
    n_ = (coords_.size() - 1) / 2;
}

Point Point::from_coords(std::vector<double> c) {
    if (c.empty() || c.size() % 2 == 0)
        throw std::invalid_argument("Point: coordinate count must be 2n+1");
    Point p;
    p.n_ = (c.size() - 1) / 2;
    p.coords_ = std::move(c);
    return p;
}

std::vector<double> Point::z() const {
    return std::vector<double>(coords_.begin(), coords_.begin() + 2 * n_);
}

double Point::znorm() const {
    double s = 0.0;
    for (std::size_t j = 0; j < 2 * n_; ++j) s += coords_[j] * coords_[j];
    return std::sqrt(s);
}

bool Point::finite() const {
    for (double c : coords_)
        if (!std::isfinite(c)) return false;
    return true;
}

RotationAngles::RotationAngles(std::vector<double> theta) : theta_(std::move(theta)) {
    for (double& a : theta_) a = std::remainder(a, 2.0 * M_PI);
}

Point origin(std::size_t n) { return Point(n); }

static void check_same_dim(const Point& p, const Point& q) {
    if (p.n() != q.n()) throw std::invalid_argument("dimension mismatch");
}

double im_z_zbar(std::span<const double> z, std::span<const double> zp) {
    const std::size_t n = z.size() / 2;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        s += z[n + j] * zp[j] - z[j] * zp[n + j];
    return s;
}

Point mul(const Point& p, const Point& q) {
    check_same_dim(p, q);
    const std::size_t n = p.n();
    Point r(n);
    double im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        r.x(j) = p.x(j) + q.x(j);
        r.y(j) = p.y(j) + q.y(j);
        im += p.y(j) * q.x(j) - p.x(j) * q.y(j);
    }
    r.t() = p.t() + q.t() + 2.0 * im;
    return r;
}

Point inv(const Point& p) {
    Point r(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) {
        r.x(j) = -p.x(j);
        r.y(j) = -p.y(j);
    }
    r.t() = -p.t();
    return r;
}

Point dilate(double lambda, const Point& p) {
    if (lambda < 0.0) throw std::invalid_argument("dilate: lambda must be >= 0");
    Point r(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) {
        r.x(j) = lambda * p.x(j);
        r.y(j) = lambda * p.y(j);
    }
    r.t() = lambda * lambda * p.t();
    return r;
}

Point rotate(const RotationAngles& theta, const Point& p) {
    if (theta.n() != p.n()) throw std::invalid_argument("dimension mismatch");
    Point r(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) {
        const double c = std::cos(theta[j]), s = std::sin(theta[j]);
        r.x(j) = c * p.x(j) - s * p.y(j);
        r.y(j) = s * p.x(j) + c * p.y(j);
    }
    r.t() = p.t();
    return r;
}

Point reflect_sigma(const Point& p) {
    Point r = p;
    for (std::size_t j = 0; j < p.n(); ++j) r.y(j) = -p.y(j);
    return r;
}

Point reflect_iota(const Point& p) {
    Point r = reflect_sigma(p);
    r.t() = -p.t();
    return r;
}

std::vector<double> project(const Point& p) { return p.z(); }

std::string to_json_array(const Point& p) {
    nlohmann::json j = nlohmann::json::array();
    for (double c : p.coords()) j.push_back(c);
    return j.dump();
}

std::string to_csv_row(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (double c : p.coords()) {
        if (!first) os << ',';
        os << c;
        first = false;
    }
    return os.str();
}

Point point_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("Point: expected JSON array");
    return Point::from_coords(j.get<std::vector<double>>());
}

}  // namespace heis
