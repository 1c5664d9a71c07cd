#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

enum class errc {
    invalid_argument,
    not_sparse,
    not_uniform,
    not_in_f,
    not_representable,
    sigma_not_pm,
    finite_representation,
    bad_delta,
    budget_exceeded,
    not_applicable,
    undecided_prefix,
};

// Domain error with a machine-readable kind; the CLI maps kinds to exit codes.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline const char* errc_name(errc k) {
    switch (k) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_sparse: return "not_sparse";
    case errc::not_uniform: return "not_uniform";
    case errc::not_in_f: return "not_in_f";
    case errc::not_representable: return "not_representable";
    case errc::sigma_not_pm: return "sigma_not_pm";
    case errc::finite_representation: return "finite_representation";
    case errc::bad_delta: return "bad_delta";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::not_applicable: return "not_applicable";
    case errc::undecided_prefix: return "undecided_prefix";
    }
    return "unknown";
}

} // namespace cantor
