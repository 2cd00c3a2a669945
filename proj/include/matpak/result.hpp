#pragma once

#include <cassert>
#include <utility>
#include <variant>

namespace matpak {

/// Value-or-error carrier. Operations in this library report failures as
/// values rather than exceptions so callers can pattern-match on them.
template <class T, class E>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(E error) : v_(std::move(error)) {}

    bool ok() const noexcept { return v_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& {
        assert(ok());
        return std::get<0>(v_);
    }
    T&& value() && {
        assert(ok());
        return std::get<0>(std::move(v_));
    }

    const E& error() const& {
        assert(!ok());
        return std::get<1>(v_);
    }

private:
    std::variant<T, E> v_;
};

} // namespace matpak
