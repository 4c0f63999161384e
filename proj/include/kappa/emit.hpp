#pragma once

#include "kappa/fgl.hpp"
#include "kappa/kernels.hpp"

#include <json.hpp>

#include <string>

namespace kappa {

// Text forms live on the value types (GradedPoly::text, ClassPoly::text);
// this module adds LaTeX and JSON plus the reverse direction.

std::string latex(const GradedPoly& p);
std::string latex(const ClassPoly& p);

nlohmann::json to_json(const GradedPoly& p);
nlohmann::json to_json(const ClassPoly& p);

GradedPoly poly_from_json(const nlohmann::json& j);
ClassPoly class_poly_from_json(const nlohmann::json& j);

/// Parses the canonical ClassPoly text form (products of A[k;s] / C[k;s]
/// and tau powers).
ClassPoly parse_class_poly(const std::string& text, int m);

/// Factored presentations of the group law, e.g. "(u+v)*(1+al*u*v)".
std::string fgl_text_factored(const FormalGroupLaw& fgl);
std::string fgl_latex_factored(const FormalGroupLaw& fgl);

}  // namespace kappa
