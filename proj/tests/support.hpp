#pragma once

#include <doctest.h>

#include <functional>

#include "hahn/error.hpp"

// Runs f and returns the kind of the hahn::Error it throws.
inline hahn::ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const hahn::Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return hahn::ErrorKind::Precondition;
}
