#pragma once

#include "otl/class_algebra.hpp"
#include "otl/class_expr.hpp"
#include "otl/definitions.hpp"
#include "otl/diagnostic.hpp"
#include "otl/dot.hpp"
#include "otl/dsl_printer.hpp"
#include "otl/json_io.hpp"
#include "otl/model.hpp"
#include "otl/parser.hpp"
#include "otl/reasoner.hpp"
#include "otl/value.hpp"

namespace otl {
inline constexpr std::string_view kVersion = "1.0.0";
}
