#pragma once

#include <stdexcept>
#include <string>

namespace patloc {

enum class errc {
    out_of_support,
    non_positive_gain,
    bad_config,
    degenerate,
    no_intersections,
    no_overlap,
    degenerate_overlap,
    non_finite_objective,
    missing_reference,
    degenerate_baseline,
    singular_fim,
    zero_noise,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace patloc
