#ifndef BIDEAL_ERRORS_HPP
#define BIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bideal {

enum class ErrorKind {
  malformed_input,
  invalid_form,
  duplicate_hyperplane,
  invalid_parameter,
  invalid_index,
  not_a_flat,
  empty_arrangement,
  not_logarithmic,
  basis_rejected,
  not_irreducible,
  freeness_required,
  asymmetry,
};

/// Kebab-case tag used as the prefix of diagnostics.
constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::invalid_form: return "invalid-form";
    case ErrorKind::duplicate_hyperplane: return "duplicate-hyperplane";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_index: return "invalid-index";
    case ErrorKind::not_a_flat: return "not-a-flat";
    case ErrorKind::empty_arrangement: return "empty-arrangement";
    case ErrorKind::not_logarithmic: return "not-logarithmic";
    case ErrorKind::basis_rejected: return "basis-rejected";
    case ErrorKind::not_irreducible: return "not-irreducible";
    case ErrorKind::freeness_required: return "freeness-required";
    case ErrorKind::asymmetry: return "asymmetry";
  }
  return "error";
}

/// Every failure raised by the library. what() reads "<kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Derivation that fails the logarithmic test; carries the offending index.
class NotLogarithmicError : public Error {
 public:
  NotLogarithmicError(std::size_t derivation, std::size_t form)
      : Error(ErrorKind::not_logarithmic,
              "derivation " + std::to_string(derivation + 1) +
                  " does not preserve hyperplane " + std::to_string(form + 1)),
        derivation_(derivation),
        form_(form) {}

  std::size_t derivation_index() const noexcept { return derivation_; }
  std::size_t form_index() const noexcept { return form_; }

 private:
  std::size_t derivation_;
  std::size_t form_;
};

}  // namespace bideal

#endif  // BIDEAL_ERRORS_HPP
