#pragma once

#include "jordan/algebra/algebra.hpp"
#include "jordan/algebra/validate.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jordan {

enum class Outcome { Holds, Fails, Unknown };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

enum class Property {
  RJ,
  BJ,
  BJViaLattice,
  RickartJordan,
  BaerJordan,
  Nondegenerate,
  QuadraticNondegenerate,
  NoNilpotentWithSquareRoot,
};

inline std::string to_string(Property p) {
  switch (p) {
    case Property::RJ: return "RJ";
    case Property::BJ: return "BJ";
    case Property::BJViaLattice: return "BJ-via-lattice";
    case Property::RickartJordan: return "RickartJordan";
    case Property::BaerJordan: return "BaerJordan";
    case Property::Nondegenerate: return "Nondegenerate";
    case Property::QuadraticNondegenerate: return "QuadraticNondegenerate";
    case Property::NoNilpotentWithSquareRoot: return "NoNilpotentWithSquareRoot";
  }
  return "?";
}

enum class Mode { Auto, Exhaustive, Symbolic };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Exhaustive: return "exhaustive";
    case Mode::Symbolic: return "symbolic";
  }
  return "auto";
}

struct CheckOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  Mode mode = Mode::Auto;
  std::uint64_t map_limit = 4096;  // RJ maps list every element up to this many
};

/// Counterexample or supporting data attached to a verdict.
template <FieldScalar S>
struct Witness {
  std::string kind;                      // e.g. "element", "subset", "square-root"
  std::vector<Element<S>> elements;      // x, the subset S, or (b, b^2)
  std::optional<Element<S>> idempotent;  // matching idempotent, when one is part of the witness
  std::string note;
};

template <FieldScalar S>
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Witness<S>> witness;
  std::string reason;  // why Unknown, or which route decided
  std::string method;  // exhaustive / symbolic / shortcut

  static Verdict holds(std::string method) { return {Outcome::Holds, std::nullopt, {}, std::move(method)}; }
  static Verdict fails(Witness<S> w, std::string method) { return {Outcome::Fails, std::move(w), {}, std::move(method)}; }
  static Verdict unknown(std::string reason, std::string method) {
    return {Outcome::Unknown, std::nullopt, std::move(reason), std::move(method)};
  }
};

template <FieldScalar S>
struct ClassReport {
  Property property = Property::RJ;
  Verdict<S> verdict;
  /// RJ mode: x -> idempotent e with (ker U_x) n A^2 = U_e(A) n A^2.
  std::vector<std::pair<Element<S>, Element<S>>> idempotent_map;
  FieldDesc field;
  Mode mode = Mode::Auto;  // the mode that actually ran
  std::uint64_t budget = kDefaultBudget;
  std::vector<std::string> notes;

  Outcome outcome() const { return verdict.outcome; }
};

}  // namespace jordan
