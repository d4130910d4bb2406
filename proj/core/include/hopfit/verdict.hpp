#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hopfit/congruence.hpp"

namespace hopfit {

using Json = nlohmann::json;

enum class Status { Holds, Fails, Unknown };

const char* to_string(Status s);

// Three-valued answer with machine-checkable evidence.  A Fails always
// carries a finite counterexample in `witness`; a Holds carries either an
// exhaustion certificate (counts of objects enumerated) or the structural
// rule it cites.
struct Verdict {
  Status status = Status::Unknown;
  Json witness = nullptr;
  Json certificate = nullptr;

  static Verdict holds(Json certificate) {
    return {Status::Holds, nullptr, std::move(certificate)};
  }
  static Verdict holds_with(Json witness, Json certificate) {
    return {Status::Holds, std::move(witness), std::move(certificate)};
  }
  static Verdict fails(Json witness, Json certificate = nullptr) {
    return {Status::Fails, std::move(witness), std::move(certificate)};
  }
  static Verdict unknown(Json certificate) {
    return {Status::Unknown, nullptr, std::move(certificate)};
  }
};

Json to_json(const std::string& property, const Verdict& v);

// Witness serialization helpers.
Json hom_json(const ActHom& f);
Json congruence_json(const Congruence& rho);
Json subact_json(const Subact& b);

}  // namespace hopfit
