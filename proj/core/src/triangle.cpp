// Copyright 2026 The cfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfact/triangle.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace cfact {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilies{{
    {Family::T, "T"},
    {Family::Tr, "Tr"},
    {Family::t, "t"},
    {Family::tr, "tr"},
    {Family::S2, "S2"},
    {Family::S1r, "S1r"},
}};

constexpr std::array<std::pair<Path, std::string_view>, 5> kPaths{{
    {Path::Direct, "direct"},
    {Path::Convolution, "convolution"},
    {Path::GeneratingFunction, "gf"},
    {Path::Polynomial, "poly"},
    {Path::Recurrence, "recurrence"},
}};

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "?";
}

std::string_view to_string(Path path) {
  for (const auto& [p, name] : kPaths) {
    if (p == path) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilies) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::optional<Path> parse_path(std::string_view name) {
  for (const auto& [p, n] : kPaths) {
    if (n == name) return p;
  }
  return std::nullopt;
}

bool is_r_family(Family family) {
  return family == Family::Tr || family == Family::tr ||
         family == Family::S1r;
}

TriangleTable::TriangleTable(Family family, Rational r, Path path,
                             std::vector<std::vector<Rational>> rows)
    : family_(family), r_(std::move(r)), path_(path), rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("TriangleTable: row " + std::to_string(n) +
                                  " must have " + std::to_string(n + 1) +
                                  " cells");
    }
  }
}

Rational TriangleTable::at(int n, int k) const {
  if (n < 0 || n > nmax()) {
    throw std::out_of_range("TriangleTable: row " + std::to_string(n) +
                            " outside 0.." + std::to_string(nmax()));
  }
  if (k < 0 || k > n) return Rational(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Rational>& TriangleTable::row(int n) const {
  if (n < 0 || n > nmax()) {
    throw std::out_of_range("TriangleTable: row " + std::to_string(n) +
                            " outside 0.." + std::to_string(nmax()));
  }
  return rows_[static_cast<std::size_t>(n)];
}

TriangleTable TriangleTable::perturbed(int n, int k,
                                       const Rational& delta) const {
  if (n < 0 || n > nmax() || k < 0 || k > n) {
    throw std::out_of_range("TriangleTable: cannot perturb cell (" +
                            std::to_string(n) + "," + std::to_string(k) + ")");
  }
  auto rows = rows_;
  rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] += delta;
  return TriangleTable(family_, r_, path_, std::move(rows));
}

}  // namespace cfact
