#include "wbfv/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "wbfv/errors.hpp"

namespace wbfv {

Profile Profile::constant(double value) {
  Profile p;
  p.kind_ = Kind::kConstant;
  p.c0_ = value;
  return p;
}

Profile Profile::linear(double v_start, double v_end, double length) {
  if (!(length > 0.0)) throw ConfigError("profile: non-positive length");
  Profile p;
  p.kind_ = Kind::kLinear;
  p.c0_ = v_start;
  p.c1_ = (v_end - v_start) / length;
  p.len_ = length;
  return p;
}

Profile Profile::polyline(std::vector<double> xs, std::vector<double> vs) {
  if (xs.size() < 2 || xs.size() != vs.size())
    throw ConfigError("profile: polyline needs at least two (x, value) samples");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      throw ConfigError("profile: polyline x samples must be strictly increasing");
  Profile p;
  p.kind_ = Kind::kPolyline;
  p.xs_ = std::move(xs);
  p.vs_ = std::move(vs);
  return p;
}

Profile Profile::exp_smooth(double amp, double length) {
  if (!(length > 0.0)) throw ConfigError("profile: non-positive length");
  Profile p;
  p.kind_ = Kind::kExpSmooth;
  p.c0_ = amp;
  p.len_ = length;
  return p;
}

double Profile::value(double x) const {
  switch (kind_) {
    case Kind::kConstant:
      return c0_;
    case Kind::kLinear:
      return c0_ + c1_ * x;
    case Kind::kExpSmooth:
      return c0_ * (std::exp(-x) - std::exp(-len_));
    case Kind::kPolyline: {
      if (x <= xs_.front()) x = xs_.front();
      if (x >= xs_.back()) return vs_.back();
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      const std::size_t j = static_cast<std::size_t>(it - xs_.begin());
      const double t = (x - xs_[j - 1]) / (xs_[j] - xs_[j - 1]);
      return vs_[j - 1] + t * (vs_[j] - vs_[j - 1]);
    }
  }
  return 0.0;
}

double Profile::derivative(double x) const {
  switch (kind_) {
    case Kind::kConstant:
      return 0.0;
    case Kind::kLinear:
      return c1_;
    case Kind::kExpSmooth:
      return -c0_ * std::exp(-x);
    case Kind::kPolyline: {
      if (x <= xs_.front()) x = xs_.front();
      std::size_t j;
      if (x >= xs_.back()) {
        j = xs_.size() - 1;
      } else {
        j = static_cast<std::size_t>(
            std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
      }
      return (vs_[j] - vs_[j - 1]) / (xs_[j] - xs_[j - 1]);
    }
  }
  return 0.0;
}

double Profile::average(double lo, double hi) const {
  switch (kind_) {
    case Kind::kConstant:
      return c0_;
    case Kind::kLinear:
      return c0_ + c1_ * 0.5 * (lo + hi);
    case Kind::kExpSmooth:
      return c0_ * ((std::exp(-lo) - std::exp(-hi)) / (hi - lo) - std::exp(-len_));
    case Kind::kPolyline: {
      // Piecewise-linear: trapezoid on each covered sub-segment is exact.
      double acc = 0.0;
      double x = lo;
      while (x < hi) {
        double x_next = hi;
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        if (it != xs_.end()) x_next = std::min(hi, *it);
        if (!(x_next > x)) break;
        acc += 0.5 * (value(x) + value(x_next)) * (x_next - x);
        x = x_next;
      }
      return acc / (hi - lo);
    }
  }
  return 0.0;
}

bool Profile::covers(double lo, double hi) const {
  if (kind_ != Kind::kPolyline) return true;
  const double tol = 1e-12 * (std::abs(hi - lo) + 1.0);
  return xs_.front() <= lo + tol && xs_.back() >= hi - tol;
}

double Profile::min_x() const {
  return kind_ == Kind::kPolyline ? xs_.front()
                                  : -std::numeric_limits<double>::infinity();
}

double Profile::max_x() const {
  return kind_ == Kind::kPolyline ? xs_.back()
                                  : std::numeric_limits<double>::infinity();
}

double Profile::max_abs_value() const {
  switch (kind_) {
    case Kind::kConstant:
      return std::abs(c0_);
    case Kind::kLinear:
      return std::max(std::abs(c0_), std::abs(c0_ + c1_ * len_));
    case Kind::kExpSmooth:
      return std::abs(c0_) * (1.0 - std::exp(-len_));
    case Kind::kPolyline: {
      double m = 0.0;
      for (double v : vs_) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 0.0;
}

std::vector<std::pair<double, double>> load_xy_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open CSV file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError("empty CSV file: " + path);
  // Header row is required; reject a file whose first row parses as numbers.
  {
    std::istringstream hs(line);
    double a;
    char comma;
    double b;
    if (hs >> a >> comma >> b)
      throw ConfigError("CSV file missing header row: " + path);
  }
  std::vector<std::pair<double, double>> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string xa, xb;
    if (!std::getline(ls, xa, ',') || !std::getline(ls, xb))
      throw ConfigError("malformed CSV row " + std::to_string(lineno) + " in " + path);
    try {
      out.emplace_back(std::stod(xa), std::stod(xb));
    } catch (const std::exception&) {
      throw ConfigError("non-numeric CSV row " + std::to_string(lineno) + " in " + path);
    }
  }
  if (out.size() < 2)
    throw ConfigError("CSV file needs at least two data rows: " + path);
  return out;
}

}  // namespace wbfv
