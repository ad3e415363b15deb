// SPDX-License-Identifier: Apache-2.0
#include "frontier/errors.hpp"

namespace frontier {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::invalid_dimension: return "invalid dimension";
    case Errc::unsupported_dimension: return "unsupported dimension";
    case Errc::undefined_direction: return "undefined direction";
    case Errc::invalid_intensity: return "invalid intensity";
    case Errc::out_of_range: return "out of range";
    case Errc::out_of_domain: return "out of domain";
    case Errc::frontier_evaluation: return "frontier evaluation";
    case Errc::quadrature_failure: return "quadrature failure";
    case Errc::degenerate_weights: return "degenerate weights";
    case Errc::empty_cell: return "empty cell";
    case Errc::degenerate: return "degenerate";
    case Errc::undefined_interval: return "undefined interval";
    case Errc::parse_error: return "parse error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

EmptyCellError::EmptyCellError(std::size_t empty_cells, std::size_t total_cells)
    : Error(Errc::empty_cell, std::to_string(empty_cells) + " of " + std::to_string(total_cells) +
                                  " partition cells contain no point; reduce k_n"),
      empty_cells_(empty_cells),
      total_cells_(total_cells) {}

}  // namespace frontier
