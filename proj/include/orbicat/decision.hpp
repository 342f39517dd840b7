#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace orbicat {

struct No {};

/// The search covered everything up to `bound` without finding a witness.
struct UnknownUpTo {
    long bound;
};

/// Three-valued answer: Yes with a replayable certificate, a total No, or an
/// honest "not found up to this bound".
template <class Certificate>
class Decision {
public:
    Decision(Certificate yes) : value_(std::move(yes)) {}
    Decision(No no) : value_(no) {}
    Decision(UnknownUpTo unknown) : value_(unknown) {}

    bool is_yes() const { return value_.index() == 0; }
    bool is_no() const { return value_.index() == 1; }
    bool is_unknown() const { return value_.index() == 2; }

    const Certificate& certificate() const {
        if (!is_yes()) throw std::logic_error("decision carries no certificate");
        return std::get<0>(value_);
    }
    long bound() const {
        if (!is_unknown()) throw std::logic_error("decision is not UnknownUpTo");
        return std::get<2>(value_).bound;
    }

private:
    std::variant<Certificate, No, UnknownUpTo> value_;
};

} // namespace orbicat
