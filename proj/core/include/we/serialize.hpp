#pragma once

#include <string>

#include "we/coding.hpp"
#include "we/entropy.hpp"
#include "we/singularity.hpp"

namespace we {

std::string to_json(const GluingSpec& spec);
// Rebuilds the layout from the parameters and checks every stored entry.
GluingSpec gluing_from_json(const std::string& text);

std::string to_json(const SetFamily& family);
SetFamily family_from_json(const std::string& text);

std::string to_json(const DiscreteSystem& sys);
DiscreteSystem system_from_json(const std::string& text);

std::string to_csv(const GrowthSeries& series);
GrowthSeries series_from_csv(const std::string& text);

std::string to_json(const ExponentEstimate& est);
ExponentEstimate estimate_from_json(const std::string& text);

std::string to_json(const SingularityVerdict& v);
SingularityVerdict verdict_from_json(const std::string& text);

enum class DocumentKind { gluing, family, system, unknown };
// Guesses which loader a JSON document belongs to from its top-level keys.
DocumentKind document_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace we
