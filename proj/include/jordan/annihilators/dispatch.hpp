#pragma once

#include "jordan/annihilators/deciders.hpp"
#include "jordan/radicals/lattice.hpp"

#include <string>

namespace jordan {

inline Property property_from_string(const std::string& s) {
  if (s == "rj" || s == "RJ") return Property::RJ;
  if (s == "bj" || s == "BJ") return Property::BJ;
  if (s == "bj-lattice" || s == "BJ-via-lattice") return Property::BJViaLattice;
  if (s == "rickart" || s == "RickartJordan") return Property::RickartJordan;
  if (s == "baer" || s == "BaerJordan") return Property::BaerJordan;
  if (s == "nondeg" || s == "Nondegenerate") return Property::Nondegenerate;
  if (s == "quad-nondeg" || s == "QuadraticNondegenerate") return Property::QuadraticNondegenerate;
  if (s == "no-nil-root" || s == "NoNilpotentWithSquareRoot") return Property::NoNilpotentWithSquareRoot;
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + s + "'");
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "auto") return Mode::Auto;
  if (s == "exhaustive") return Mode::Exhaustive;
  if (s == "symbolic") return Mode::Symbolic;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + s + "'");
}

template <FieldScalar S>
ClassReport<S> check_property(const JordanAlgebra<S>& A, Property p, const CheckOptions& opt = {}) {
  switch (p) {
    case Property::RJ: return rj_check(A, opt);
    case Property::BJ: return bj_check_direct(A, opt);
    case Property::BJViaLattice: return bj_check_via_t25(A, opt);
    case Property::RickartJordan: return rickart_check(A, opt);
    case Property::BaerJordan: return baer_check(A, opt);
    case Property::Nondegenerate: return nondeg_check(A, opt);
    case Property::QuadraticNondegenerate: return quad_nondeg_check(A, opt);
    case Property::NoNilpotentWithSquareRoot: return nilpotent_root_check(A, opt);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown property");
}

inline int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Holds: return 0;
    case Outcome::Fails: return 1;
    case Outcome::Unknown: return 2;
  }
  return 2;
}

}  // namespace jordan
