#pragma once

#include <stdexcept>
#include <string>

namespace borderlim {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input grammar / schema violations.
struct parse_error : error { using error::error; };

// Contract violations, one type per named error condition.
struct unbound_variable : error { using error::error; };
struct not_quadratic : error { using error::error; };
struct level_mismatch : error { using error::error; };
struct space_mismatch : error { using error::error; };
struct degree_mismatch : error { using error::error; };
struct non_invertible : error { using error::error; };
struct unsupported_slot : error { using error::error; };
struct invalid_splitting : error { using error::error; };
struct basis_missing : error { using error::error; };

// A computation hit its step budget; the result is absent, never wrong.
struct resource_limit : error { using error::error; };

} // namespace borderlim
