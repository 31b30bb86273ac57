#pragma once

#include "eqc/dd/Node.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eqc::dd {

/// Row-major 2^n x 2^n expansion of a matrix DD.
std::vector<std::complex<double>> denseMatrix(const Edge& e, std::size_t n);
/// Length 2^n expansion of a vector DD.
std::vector<std::complex<double>> denseVector(const Edge& e, std::size_t n);
/// Amplitude of basis state `index`, following one path.
std::complex<double> amplitude(const Edge& e, std::uint64_t index);

/// Nonzero amplitudes in ascending basis order, at most `limit` of them.
std::vector<std::pair<std::uint64_t, std::complex<double>>>
nonzeroAmplitudes(const Edge& e, std::size_t limit);

/// Graphviz rendering of the DD structure.
std::string toDot(const Edge& e);

} // namespace eqc::dd
