#ifndef OGF_ERRORS_HPP
#define OGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogf {

/// Failure conditions raised by the library.  Every throwing operation
/// documents which of these it can raise.
enum class errc {
    degenerate_input,      ///< structurally invalid argument (zero divisor, negative index, ...)
    field_mismatch,        ///< mixing quadratic extensions with different radicands
    non_real_surd,         ///< negative radicand requested
    unbound_variable,      ///< evaluation point misses a variable present in the polynomial
    length_mismatch,       ///< series operands with different truncation orders
    non_invertible_series, ///< reciprocal of a series whose constant term is not a nonzero scalar
    truncation_exceeded,   ///< coefficient index beyond the series truncation order
    unknown_entry,         ///< catalog lookup for an unregistered name
    invalid_parameter,     ///< catalog/CLI parameter outside its documented range
    divergent_argument,    ///< numeric summation at an argument where the series diverges
    repeated_root,         ///< quadratic with zero discriminant (closed form undefined)
    degenerate_denominator,///< quadratic with vanishing leading coefficient
    parse_error,           ///< malformed polynomial / rational / document text
    io_error,              ///< file could not be read or written
};

const char* errc_name(errc code) noexcept;

/// Library exception type: an error code plus a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

    /// True for errors caused by malformed input text or bad CLI usage
    /// (mapped to exit status 2); false for mathematical domain errors
    /// (exit status 1).
    bool is_usage_error() const noexcept {
        return code_ == errc::parse_error || code_ == errc::io_error;
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ogf

#endif
