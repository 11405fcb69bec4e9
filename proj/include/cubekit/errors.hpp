#pragma once

#include <stdexcept>
#include <string>

namespace cubekit {

// Failure kinds surfaced by the library.  `internal` marks a broken
// invariant (a bug), everything else is a rejected input.
enum class errc {
    not_prime,
    not_coprime,
    ramified_denominator,
    not_primary,
    not_primaryizable,
    unfactorable,
    not_cube_free,
    gerth_form_unsupported,
    unsupported_ramification,
    wrong_residue_class,
    unsupported_family,
    too_small,
    indefinite_form,
    bad_flags,
    internal,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace cubekit
