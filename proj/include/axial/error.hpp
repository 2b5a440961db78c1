#pragma once

#include <stdexcept>
#include <string>

namespace axial {

enum class Errc {
  non_square,
  singular,
  ambient_mismatch,
  dimension_mismatch,
  bad_parameter,
  unknown_name,
  unknown_point,
  unknown_line,
  not_partial_triple_system,
  bad_alpha,
  no_grading,
  not_a_partition,
  not_closed,
  image_not_in_omega,
  cap_exceeded,
  element_not_found,
  has_isolated_points,
  not_connected,
  relator_violated,
  bad_involution,
  not_a_module,
  nontrivial_one_eigenspace,
  not_a_submodule,
  degenerate_on_n,
  seed_not_one_eigenvector,
  phi_not_isomorphism,
  not_matsuo,
  parse_error,
  internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace axial
