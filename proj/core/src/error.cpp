#include "csa_embed/error.hpp"

namespace csa_embed {

std::string_view describe(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::malformed_input: return "malformed input";
    case ErrorKind::not_realizable: return "not realizable (reciprocity)";
    case ErrorKind::degree_incompatible: return "degree incompatible with index";
    case ErrorKind::archimedean_constraint: return "archimedean constraint";
    case ErrorKind::no_archimedean_places: return "no archimedean places";
    case ErrorKind::degree_divisibility: return "degree divisibility violated";
    case ErrorKind::underspecified_pair: return "underspecified pair";
    case ErrorKind::malformed_partition: return "malformed partition";
    case ErrorKind::not_a_witness: return "not a witness";
    case ErrorKind::scan_limit: return "scan limit exceeded";
    }
    return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail)
{
    std::string msg(describe(kind));
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind)
{
}

}  // namespace csa_embed
