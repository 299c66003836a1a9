#pragma once

#include <optional>

#include "dedekind/error.hpp"

namespace dedekind::testing {

/// Code of the dedekind::Error thrown by fn, if any.
template <class Fn>
std::optional<Errc> error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace dedekind::testing

#define CHECK_ERRC(expr, errc) CHECK(::dedekind::testing::error_of([&] { (void)(expr); }) == (errc))
