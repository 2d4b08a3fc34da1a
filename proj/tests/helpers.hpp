#pragma once

#include <catch_amalgamated.hpp>

#include <agc/errors.hpp>

// Asserts that fn() throws agc::error with the given code.
template <typename Fn>
void expect_error(agc::errc expected, Fn&& fn) {
    try {
        fn();
        FAIL("expected " << agc::errc_name(expected) << ", but nothing was thrown");
    } catch (const agc::error& e) {
        if (e.code() != expected)
            FAIL("expected " << agc::errc_name(expected) << ", got " << e.what());
        SUCCEED();
    }
}
