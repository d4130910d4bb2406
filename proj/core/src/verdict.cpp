#include "hopfit/verdict.hpp"

namespace hopfit {

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    case Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

Json to_json(const std::string& property, const Verdict& v) {
  return Json{{"property", property},
              {"status", to_string(v.status)},
              {"witness", v.witness},
              {"certificate", v.certificate}};
}

Json hom_json(const ActHom& f) {
  return Json{{"map", f.map()}};
}

Json congruence_json(const Congruence& rho) {
  return Json{{"blocks", rho.blocks()}};
}

Json subact_json(const Subact& b) {
  return Json{{"members", b.members()}};
}

}  // namespace hopfit
