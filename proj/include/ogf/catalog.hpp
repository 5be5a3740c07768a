#ifndef OGF_CATALOG_HPP
#define OGF_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogf/polynomial.hpp"

namespace ogf {

/// Named parameter values supplied to a catalog entry.
using ParamMap = std::map<std::string, Rational>;

/// Declaration of one entry parameter.
struct ParamSpec {
    std::string name;
    std::string doc;
    bool integral = false;          ///< value must be an integer
    bool has_min = false;
    Rational min_value;             ///< inclusive lower bound (when has_min)
    bool has_default = false;
    Rational default_value;
};

/// Whether an entry produces plain numbers (constant polynomials, printed
/// as rationals) or genuine polynomials in x1 (and x2).
enum class EntryKind { numbers, polynomials };

/// One named family in the registry: parameter schema, expansion through
/// the series engine, optional independent reference formula, and a
/// provenance note pointing at the defining literature.
struct CatalogEntry {
    std::string name;
    std::string summary;
    EntryKind kind = EntryKind::polynomials;
    std::vector<ParamSpec> params;
    std::string provenance;

    /// Coefficients 0..order through the series engine.
    std::function<std::vector<Polynomial>(const ParamMap&, unsigned order)> expand;

    /// Independent reference formula (closed form or terminating sum);
    /// returns a mismatch description, or nullopt when the value agrees
    /// (or the check does not apply at this point).  Null when the entry
    /// has no independent reference.
    std::function<std::optional<std::string>(const ParamMap&, unsigned n, const Polynomial& value)>
        cross_check;
    std::string cross_check_doc;    ///< what the reference formula is ("" when none)
};

/// The full registry, in stable registration order.
const std::vector<CatalogEntry>& catalog_entries();

/// Entry by name (unknown_entry when unregistered).
const CatalogEntry& catalog_lookup(const std::string& name);

/// Validates the given parameters against the entry's schema and fills in
/// defaults.  Unknown names, missing required parameters, non-integral
/// values for integral parameters, and range violations raise
/// invalid_parameter.
ParamMap catalog_resolve_params(const CatalogEntry& entry, const ParamMap& given);

/// Coefficients lo..hi (inclusive) of the named entry.  Parameters are
/// resolved per catalog_resolve_params.  When the entry carries an
/// independent reference formula it is evaluated at every requested index;
/// a disagreement raises invalid_parameter (the entry cannot be served
/// consistently), so results returned from here are always cross-checked.
std::vector<Polynomial> catalog_eval(const std::string& name, const ParamMap& params, unsigned lo,
                                     unsigned hi);

/// Terminating Gauss-hypergeometric evaluation of the order-beta two-term
/// family at (-2x, 1):
///   ((2 beta)_n / n!) * sum_{i=0..n} [(-n)_i (2 beta + n)_i
///                                     / ((1/2 + beta)_i i!)] ((1-x)/2)^i,
/// i.e. the classical ultraspherical value as an exact rational.
/// invalid_parameter when the lower parameter 1/2 + beta hits a nonpositive
/// integer within the summation depth.
Rational gegenbauer_2f1_crosscheck(const Rational& beta, const Rational& x, unsigned n);

} // namespace ogf

#endif
