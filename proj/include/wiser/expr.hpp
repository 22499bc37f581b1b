#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "wiser/model_file.hpp"
#include "wiser/scalar.hpp"

namespace wiser {

using Value = std::variant<Scalar, Dist<Rational>, Dist<double>, Factor<Rational>, Multiset, Evidence<Rational>,
                           Channel<Rational>, std::string>;

/// Evaluates `op(arg, ...)` where arguments are model identifiers, numbers
/// ("3", "1/2") or nested calls. A multiset passed as evidence means point
/// evidence and a single factor means one copy of it. Syntax and argument
/// type errors are ParseError with the column; operation errors keep their kind.
Value evaluate(const Model& model, std::string_view expr);

/// Exact fractions in Exact mode, kets for distributions, {x: v} tables for
/// factors, n|{...}> sums for evidence.
std::string render(const Value& v);

/// Names of the supported operations.
std::vector<std::string> operation_names();

}  // namespace wiser
