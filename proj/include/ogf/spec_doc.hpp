#ifndef OGF_SPEC_DOC_HPP
#define OGF_SPEC_DOC_HPP

#include <map>
#include <string>

#include "ogf/series.hpp"

namespace ogf {

/// A family specification as read from / written to a spec file, plus an
/// optional evaluation point.  The on-disk form is a JSON object with keys
///
///   P      required, non-empty array of polynomial expression strings
///   Q      optional array of polynomial expression strings (default: none,
///          meaning numerator 1)
///   alpha  optional nonnegative integer (default 1)
///   beta   optional integer or rational string "p/q" (default 1)
///   N      optional nonnegative integer truncation (default 16)
///   eval   optional object mapping variable names "x1".."x9" to integers
///          or rational strings
///
/// Unknown keys are rejected.  serialize() always emits all six keys in the
/// order above with canonical polynomial/rational spellings, so
/// serialize(parse(serialize(d))) == serialize(d).
struct SpecDocument {
    FamilySpec spec;
    std::map<unsigned, Rational> eval; ///< variable index -> value
};

/// Parses the JSON text of a spec document (parse_error on any violation,
/// with position information for malformed JSON).
SpecDocument parse_spec_document(const std::string& text);

/// Canonical JSON serialization (two-space indentation, stable key order).
std::string serialize_spec_document(const SpecDocument& doc);

} // namespace ogf

#endif
