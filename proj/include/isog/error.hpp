#pragma once

#include <stdexcept>
#include <string>

namespace isog {

enum class errc {
    no_root,
    not_split,
    not_in_subfield,
    unsupported_base,
    not_divisible,
    not_a_kernel,
    not_elkies,
    not_maximal,
    not_a_basis,
    missing_modular_polynomial,
    height_exceeded,
    transport_failed,
    orbit_collision,
    not_in_generated_field,
    no_rational_form,
    precondition_not_met,
    no_suitable_prime,
    not_isogenous,
    no_isogeny_found,
    invalid_input,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency conditions (not user input validation).
inline void check(bool cond, const char* what) {
    if (!cond) throw Error(errc::internal, what);
}

}  // namespace isog
