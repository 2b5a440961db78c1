#include "axial/error.hpp"

namespace axial {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::non_square: return "NonSquare";
    case Errc::singular: return "Singular";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::unknown_name: return "UnknownName";
    case Errc::unknown_point: return "UnknownPoint";
    case Errc::unknown_line: return "UnknownLine";
    case Errc::not_partial_triple_system: return "NotPartialTripleSystem";
    case Errc::bad_alpha: return "BadAlpha";
    case Errc::no_grading: return "NoGrading";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::not_closed: return "NotClosed";
    case Errc::image_not_in_omega: return "ImageNotInOmega";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::element_not_found: return "ElementNotFound";
    case Errc::has_isolated_points: return "HasIsolatedPoints";
    case Errc::not_connected: return "NotConnected";
    case Errc::relator_violated: return "RelatorViolated";
    case Errc::bad_involution: return "BadInvolution";
    case Errc::not_a_module: return "NotAModule";
    case Errc::nontrivial_one_eigenspace: return "NontrivialOneEigenspace";
    case Errc::not_a_submodule: return "NotASubmodule";
    case Errc::degenerate_on_n: return "DegenerateOnN";
    case Errc::seed_not_one_eigenvector: return "SeedNotOneEigenvector";
    case Errc::phi_not_isomorphism: return "PhiNotIsomorphism";
    case Errc::not_matsuo: return "NotMatsuo";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace axial
