#pragma once

#include <initializer_list>
#include <random>
#include <stdexcept>

#include "wba/matrix.hpp"

namespace testutil {

inline wba::Matrix qmatrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  wba::Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = wba::Scalar(wba::Field::Q(), v);
    ++i;
  }
  return m;
}

inline wba::Scalar random_scalar(std::mt19937& rng, const wba::Field& f) {
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    c.emplace_back(num, den);
    c.back().canonicalize();
  }
  return wba::Scalar(f, c);
}

// Entries in [-3, 3]; when low_rank > 0 the result has rank <= low_rank.
inline wba::Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, const wba::Field& f,
                                 std::size_t low_rank) {
  auto entry = [&] { return wba::Scalar(f, static_cast<long>(rng() % 7) - 3); };
  if (low_rank == 0) {
    wba::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry();
    return m;
  }
  wba::Matrix a(r, low_rank), b(low_rank, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < low_rank; ++j) a(i, j) = entry();
  for (std::size_t i = 0; i < low_rank; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = entry();
  return a * b;
}

}  // namespace testutil

#include <string>
#include <utility>

#include "wba/weak_bialgebra.hpp"

namespace testutil {

// Element of h given as (label, integer coefficient) pairs.
inline wba::Vector elem(const wba::WeakBialgebra& h, std::initializer_list<std::pair<const char*, long>> terms) {
  wba::Vector v(h.dim());
  for (const auto& [label, c] : terms) {
    std::size_t i = 0;
    while (i < h.dim() && h.basis()[i] != label) ++i;
    if (i == h.dim()) throw std::invalid_argument(std::string("no basis element ") + label);
    v[i] += wba::Scalar(h.field(), c);
  }
  return v;
}

inline std::size_t index_of(const wba::WeakBialgebra& h, const std::string& label) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (h.basis()[i] == label) return i;
  throw std::invalid_argument("no basis element " + label);
}

}  // namespace testutil
