#include "qchan/catalog.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace qchan {

namespace {

// (1/2) sqrt(n) for the radicals that appear in the fixtures.
double half_root(int n) { return 0.5 * std::sqrt(static_cast<double>(n)); }

std::size_t parse_dim(std::string_view text, std::string_view spec) {
  std::size_t d = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc{} || ptr != text.data() + text.size() || d == 0 || d > 4096) {
    throw InputError("invalid dimension in '" + std::string(spec) + "'");
  }
  return d;
}

// Splits "name:d" into the name and its dimension; d is 0 when absent.
std::pair<std::string_view, std::size_t> split_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {spec, 0};
  return {spec.substr(0, colon), parse_dim(spec.substr(colon + 1), spec)};
}

}  // namespace

NamedChannel epsilon3() {
  const double h = half_root(1);
  const double r2 = half_root(2);
  const double r3 = half_root(3);
  std::vector<ComplexMatrix> ops{
      {{h, 0, 0}, {0, 0, 0}, {0, 0, 0}},
      {{0, 0, 0}, {h, 0, 0}, {0, r2, 0}},
      {{0, r2, 0}, {0, 0, r3}, {0, 0, 0}},
      {{0, 0, h}, {0, 0, 0}, {r2, 0, 0}},
  };
  return {"eps3", KrausSet(std::move(ops)),
          "extreme UCPT map of C^3 with maximal Choi rank 4 (Kraus form A -> sum E A E^dagger)"};
}

NamedChannel epsilon4() {
  const double h = half_root(1);
  const double r2 = half_root(2);
  const double r3 = half_root(3);
  std::vector<ComplexMatrix> ops{
      {{0, 0, 0, 0}, {0, 0, h, 0}, {h, 0, 0, 0}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, r2}, {0, r2, 0, 0}},
      {{0, 0, r3, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {r2, 0, 0, 0}},
      {{0, h, 0, 0}, {0, 0, 0, r2}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {h, 0, 0, 0}, {0, h, 0, 0}, {0, 0, 0, 0}},
  };
  return {"eps4", KrausSet(std::move(ops)),
          "extreme UCPT map of C^4 with maximal Choi rank 5 (Kraus form A -> sum E A E^dagger)"};
}

NamedChannel identity_channel(std::size_t d) {
  return {"id:" + std::to_string(d), KrausSet({ComplexMatrix::identity(d)}), "identity map"};
}

NamedChannel depolarizing(std::size_t d) {
  std::vector<ComplexMatrix> ops;
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix e(d, d);
      e(i, j) = s;
      ops.push_back(std::move(e));
    }
  return {"depol:" + std::to_string(d), KrausSet(std::move(ops)),
          "completely depolarizing map A -> tr(A) I/d"};
}

ComplexMatrix named_unitary(std::string_view spec) {
  using namespace std::complex_literals;
  const auto [kind, d] = split_spec(spec);
  const double s = 1.0 / std::numbers::sqrt2;
  if (d == 0) {
    if (kind == "x") return {{0, 1}, {1, 0}};
    if (kind == "y") return {{0, -1i}, {1i, 0}};
    if (kind == "z") return {{1, 0}, {0, -1}};
    if (kind == "h") return {{s, s}, {s, -s}};
    throw InputError("unknown unitary '" + std::string(spec) + "'");
  }
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(d);
  ComplexMatrix u(d, d);
  if (kind == "fourier") {
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        u(j, k) = norm * std::polar(1.0, theta * static_cast<double>((j * k) % d));
  } else if (kind == "shift") {
    for (std::size_t j = 0; j < d; ++j) u((j + 1) % d, j) = 1.0;
  } else if (kind == "clock") {
    for (std::size_t j = 0; j < d; ++j) u(j, j) = std::polar(1.0, theta * static_cast<double>(j));
  } else {
    throw InputError("unknown unitary '" + std::string(spec) + "'");
  }
  return u;
}

NamedChannel builtin(std::string_view name) {
  if (name == "eps3") return epsilon3();
  if (name == "eps4") return epsilon4();
  const auto [kind, d] = split_spec(name);
  if (kind == "id" && d > 0) return identity_channel(d);
  if (kind == "depol" && d > 0) return depolarizing(d);
  return {std::string(name), KrausSet({named_unitary(name)}), "unitary channel"};
}

}  // namespace qchan
