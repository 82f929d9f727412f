#pragma once

#include "grmf/factorization.hpp"
#include "grmf/jacobi.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace grmf::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "grmf/1";
// Must match the identifier in CONVENTIONS.md.
inline constexpr const char* kConventions = "grmf-conv-2";
inline constexpr const char* kVersion = "0.3.0";

// Same type as the polynomial parser's error.
using ParseError = grmf::ParseError;

// {"free_rank", "torsion"} or {"ambient_rank", "relations"}; both may be
// present and must then agree.
json group_to_json(const AbelianGroup& M);
GroupPtr group_from_json(const json& j);

// Elements travel in presentation (ambient) coordinates.
json element_to_json(const AbelianGroup& M, const GroupElement& e);
GroupElement element_from_json(const AbelianGroup& M, const json& j);

json potential_to_json(const Potential& w);
// Reads "group", "variables", "potential" and optional "degree", "witness".
Potential potential_from_json(const json& j);

struct Problem {
    Potential w;
    json options;
    std::string hash; // FNV-1a of the canonical dump
};
Problem problem_from_json(const json& j);
json read_json_file(const std::string& path);

json factorization_to_json(const Factorization& F);
// Reuses `w` when given (ring identity matters for comparisons), otherwise
// reads the embedded ring section.
Factorization factorization_from_json(const json& j, const std::optional<Potential>& w = {});

json morphism_to_json(const Morphism& f, const GradedRing& R);
Morphism morphism_from_json(const json& j, const Factorization& E, const Factorization& F);

json table_to_json(const DimensionTable& T, const AbelianGroup& M);

GradedIdealSpec ideal_from_json(const json& j, RingPtr ring);

std::string fnv1a_hex(const std::string& bytes);

} // namespace grmf::io
