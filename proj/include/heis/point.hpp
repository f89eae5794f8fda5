#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace heis {

/// Group element [z,t] of H^n, stored flat as (x_1..x_n, y_1..y_n, t).
class Point {
public:
    Point() = default;
    explicit Point(std::size_t n) : coords_(2 * n + 1, 0.0), n_(n) {}
    Point(std::initializer_list<double> c);
    static Point from_coords(std::vector<double> c);

    std::size_t n() const { return n_; }
    double x(std::size_t j) const { return coords_[j]; }
    double y(std::size_t j) const { return coords_[n_ + j]; }
    double t() const { return coords_[2 * n_]; }
    double& x(std::size_t j) { return coords_[j]; }
    double& y(std::size_t j) { return coords_[n_ + j]; }
    double& t() { return coords_[2 * n_]; }

    std::span<const double> coords() const { return coords_; }
    std::vector<double> z() const;   // (x_1..x_n, y_1..y_n)
    double znorm() const;            // ||z||
    bool finite() const;

    bool operator==(const Point& o) const = default;

private:
    std::vector<double> coords_;
    std::size_t n_ = 0;
};

/// Per-coordinate rotation angles around the t-axis, reduced mod 2pi.
class RotationAngles {
public:
    explicit RotationAngles(std::vector<double> theta);
    std::size_t n() const { return theta_.size(); }
    double operator[](std::size_t j) const { return theta_[j]; }

private:
    std::vector<double> theta_;
};

Point origin(std::size_t n);

// [z,t]*[z',t'] = [z+z', t+t'+2 Im z conj(z')]
Point mul(const Point& p, const Point& q);
Point inv(const Point& p);
Point dilate(double lambda, const Point& p);
Point rotate(const RotationAngles& theta, const Point& p);
Point reflect_sigma(const Point& p);  // [conj z, t]
Point reflect_iota(const Point& p);   // [conj z, -t], a d-isometry
std::vector<double> project(const Point& p);

// Im z conj(z') summed over coordinates; inputs are flat (x...,y...) vectors.
double im_z_zbar(std::span<const double> z, std::span<const double> zp);

std::string to_json_array(const Point& p);
std::string to_csv_row(const Point& p);
Point point_from_json(const std::string& text);

}  // namespace heis
