#pragma once

#include <string>

#include "kdfab/counterexamples.hpp"

namespace kdfab::jsonio {

// Wire formats:
//   Group           {"orders":[d1,...]}
//   GroupElement    [c1,...]
//   Subgroup        {"generators":[[...],...]}       (elements recomputed on load)
//   StateVector     {"group":...,"amplitudes":[[re,im],...]}
//   Operator        {"group":...,"entries":[[[re,im],...],...]}
//   KDDistribution  {"group":...,"values":[[[re,im],...],...]}   row=g, col=chi
// RealTable uses the KDDistribution layout with zero imaginary parts, so a
// witness file can be fed anywhere a KD table is accepted.

std::string to_json(const Group& g);
std::string to_json(const Group& g, const GroupElement& e);
std::string to_json(const Subgroup& h);
std::string to_json(const StateVector& psi);
std::string to_json(const Operator& op);
std::string to_json(const KDDistribution& q);
std::string to_json(const RealTable& t);
std::string to_json(const VerificationReport& report);

Group group_from_json(const std::string& text, int max_order = Group::kDefaultMaxOrder);
GroupElement element_from_json(const Group& g, const std::string& text);
Subgroup subgroup_from_json(const Group& g, const std::string& text);
StateVector state_from_json(const std::string& text, int max_order = Group::kDefaultMaxOrder);
Operator operator_from_json(const std::string& text, int max_order = Group::kDefaultMaxOrder);
KDDistribution kd_from_json(const std::string& text, int max_order = Group::kDefaultMaxOrder);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace kdfab::jsonio
