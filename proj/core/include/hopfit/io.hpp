#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hopfit/congruence.hpp"

namespace hopfit {

// Text formats, whitespace separated, '#' to end of line is a comment:
//   monoid file:  "monoid n e" then n rows of n element indices
//   act file:     "act m <monoid-file>" then m rows of n indices; the monoid
//                 path is resolved relative to the act file's directory
//   congruence:   "cong b0 b1 ... b_{m-1}"  (block id per element)
//   hom:          "hom m : i0 i1 ... i_{m-1}"

FiniteMonoid read_monoid(const std::filesystem::path& path);
FiniteAct read_act(const std::filesystem::path& path);

// Peeks at the first token: "monoid" or "act".
std::string classify_file(const std::filesystem::path& path);

void write_monoid(std::ostream& os, const FiniteMonoid& m);
void write_act(std::ostream& os, const FiniteAct& a,
               const std::string& monoid_ref);

Congruence parse_congruence(const FiniteAct& a, const std::string& text);
std::string format_congruence(const Congruence& rho);

// "a:b" pairs, every source element exactly once, e.g. "2:1 1:0 0:0".
ActHom parse_endo(const FiniteAct& a, const std::string& text);
std::string format_hom(const ActHom& f);

std::string format_subact(const Subact& b);

}  // namespace hopfit
