// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frontier {

enum class Errc {
  invalid_argument,
  invalid_dimension,
  unsupported_dimension,
  undefined_direction,
  invalid_intensity,
  out_of_range,
  out_of_domain,
  frontier_evaluation,
  quadrature_failure,
  degenerate_weights,
  empty_cell,
  degenerate,
  undefined_interval,
  parse_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a partition cell holds no sample point; carries how many cells are empty.
class EmptyCellError : public Error {
 public:
  EmptyCellError(std::size_t empty_cells, std::size_t total_cells);
  std::size_t empty_cells() const noexcept { return empty_cells_; }
  std::size_t total_cells() const noexcept { return total_cells_; }

 private:
  std::size_t empty_cells_;
  std::size_t total_cells_;
};

}  // namespace frontier
