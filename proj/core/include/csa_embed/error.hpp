#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csa_embed {

enum class ErrorKind {
    invalid_argument,       // bad numeric input (zero denominator, s not dividing delta, ...)
    malformed_input,        // JSON shape, unknown fields, duplicate places
    not_realizable,         // invariants do not sum to zero
    degree_incompatible,    // delta0 does not divide deg A
    archimedean_constraint, // local index / partition not allowed at a real or complex place
    no_archimedean_places,  // real or complex place over a function field
    degree_divisibility,    // k does not divide deg A
    underspecified_pair,    // ramified place without a declared partition
    malformed_partition,    // partition does not sum to k
    not_a_witness,          // counterexample requested from an integral LD entry
    scan_limit,             // k above the configured scan guard
};

/// Canonical short message for each kind; error messages start with it.
std::string_view describe(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail = {});

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace csa_embed
