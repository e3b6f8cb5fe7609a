#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "corotan/kinematics.hpp"
#include "corotan/mandel.hpp"
#include "corotan/materials.hpp"
#include "corotan/motion.hpp"
#include "corotan/tangents.hpp"
#include "corotan/uniaxial.hpp"
#include "corotan/verify.hpp"

namespace corotan {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

ordered_json tensor2_to_json(const Tensor2& t); // nested row-major 3x3
Tensor2 tensor2_from_json(const ordered_json& j);

ordered_json tensor4_to_json(const Tensor4& t); // nested 3x3x3x3
Tensor4 tensor4_from_json(const ordered_json& j);

/// 6x6 array plus the explicit convention tag.
ordered_json mandel_to_json(const Mandel6& m);
Mandel6 mandel_from_json(const ordered_json& j);

/// All derived fields, plus "derived_from_F" so consumers can re-verify.
ordered_json state_to_json(const DeformationState& st);

ordered_json model_to_json(const MaterialModel& model);
/// {"model": "hencky"|"hencky_incompressible"|"svk", "mu":..., "lambda":...};
/// unknown keys are rejected.
std::shared_ptr<MaterialModel> model_from_json(const ordered_json& j);

/// {"path": name, "start":..., "end":...}; unknown keys are rejected.
MotionPath path_from_json(const ordered_json& j);

ordered_json tangent_set_to_json(const TangentSet& set);
/// Mandel blocks of every construction as CSV sections.
std::string tangent_set_csv(const TangentSet& set);

ordered_json check_to_json(const CheckReport& r);
ordered_json sweep_to_json(const SweepReport& r);
std::string sweep_csv(const SweepReport& r);
ordered_json integration_to_json(const IntegrationReport& r);
/// Trajectory rows t, tau components (row major), drift vs closed form.
std::string integration_csv(const IntegrationReport& r);
ordered_json scan_to_json(const Scan1D& scan);

/// Accepts "diag(a,b,c)" or nine comma-separated row-major entries; the token
/// e denotes Euler's number.
Tensor2 parse_matrix_literal(const std::string& text);

/// Throws ConfigError when `j` holds a key outside `allowed`.
void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                         const std::string& context);

} // namespace corotan
