// Reference Z_1 .. Z_7, one string per entry, row-major.
// Grammar: integers, t, + - * / ^, parentheses, implicit multiplication.
#pragma once

#include <vector>
#include <string>

namespace testdata {

inline const std::vector<std::vector<std::vector<std::string>>> kReferenceZ = {
    // Z_1
    {
        {"1", "0"},
        {"0", "1"},
    },
    // Z_2
    {
        {"1", "-(1)/(t-1)", "0"},
        {"0", "(t)/(t-1)", "0"},
        {"0", "-(1)/(t-1)", "1"},
    },
    // Z_3
    {
        {"1", "-(3)/(t-2)", "0", "0"},
        {"0", "(t)/(t-2)", "-(1)/(t-2)", "0"},
        {"0", "-(1)/(t-2)", "(t)/(t-2)", "0"},
        {"0", "0", "-(3)/(t-2)", "1"},
    },
    // Z_4
    {
        {"1", "-(6)/(t-3)", "(3)/((t-3)(t-1))", "0", "0"},
        {"0", "(t)/(t-3)", "-(3t)/((t-3)(t-1))", "0", "0"},
        {"0", "-(1)/(t-3)", "(t^2+2)/((t-3)(t-1))", "-(1)/(t-3)", "0"},
        {"0", "0", "-(3t)/((t-3)(t-1))", "(t)/(t-3)", "0"},
        {"0", "0", "(3)/((t-3)(t-1))", "-(6)/(t-3)", "1"},
    },
    // Z_5
    {
        {"1", "-(10)/(t-4)", "(15)/((t-4)(t-2))", "0", "0", "0"},
        {"0", "(t)/(t-4)", "-(6t)/((t-4)(t-2))", "(3)/((t-4)(t-2))", "0", "0"},
        {"0", "-(1)/(t-4)", "(t^2+5)/((t-4)(t-2))", "-(3t)/((t-4)(t-2))", "0", "0"},
        {"0", "0", "-(3t)/((t-4)(t-2))", "(t^2+5)/((t-4)(t-2))", "-(1)/(t-4)", "0"},
        {"0", "0", "(3)/((t-4)(t-2))", "-(6t)/((t-4)(t-2))", "(t)/(t-4)", "0"},
        {"0", "0", "0", "(15)/((t-4)(t-2))", "-(10)/(t-4)", "1"},
    },
    // Z_6
    {
        {"1", "-(15)/(t-5)", "(45)/((t-5)(t-3))", "-(15)/((t-5)(t-3)(t-1))", "0", "0", "0"},
        {"0", "(t)/(t-5)", "-(10t)/((t-5)(t-3))", "(15t)/((t-5)(t-3)(t-1))", "0", "0", "0"},
        {"0", "-(1)/(t-5)", "(t^2+9)/((t-5)(t-3))", "-(3(2t^2+3))/((t-5)(t-3)(t-1))", "(3)/((t-5)(t-3))", "0", "0"},
        {"0", "0", "-(3t)/((t-5)(t-3))", "(t(t^2+14))/((t-5)(t-3)(t-1))", "-(3t)/((t-5)(t-3))", "0", "0"},
        {"0", "0", "(3)/((t-5)(t-3))", "-(3(2t^2+3))/((t-5)(t-3)(t-1))", "(t^2+9)/((t-5)(t-3))", "-(1)/(t-5)", "0"},
        {"0", "0", "0", "(15t)/((t-5)(t-3)(t-1))", "-(10t)/((t-5)(t-3))", "(t)/(t-5)", "0"},
        {"0", "0", "0", "-(15)/((t-5)(t-3)(t-1))", "(45)/((t-5)(t-3))", "-(15)/(t-5)", "1"},
    },
    // Z_7
    {
        {"1", "-(21)/(t-6)", "(105)/((t-6)(t-4))", "-(105)/((t-6)(t-4)(t-2))", "0", "0", "0", "0"},
        {"0", "(t)/(t-6)", "-(15t)/((t-6)(t-4))", "(45t)/((t-6)(t-4)(t-2))", "-(15)/((t-6)(t-4)(t-2))", "0", "0", "0"},
        {"0", "-(1)/(t-6)", "(t^2+14)/((t-6)(t-4))", "-(5(2t^2+7))/((t-6)(t-4)(t-2))", "(15t)/((t-6)(t-4)(t-2))", "0", "0", "0"},
        {"0", "0", "-(3t)/((t-6)(t-4))", "(t(t^2+26))/((t-6)(t-4)(t-2))", "-(3(2t^2+7))/((t-6)(t-4)(t-2))", "(3)/((t-6)(t-4))", "0", "0"},
        {"0", "0", "(3)/((t-6)(t-4))", "-(3(2t^2+7))/((t-6)(t-4)(t-2))", "(t(t^2+26))/((t-6)(t-4)(t-2))", "-(3t)/((t-6)(t-4))", "0", "0"},
        {"0", "0", "0", "(15t)/((t-6)(t-4)(t-2))", "-(5(2t^2+7))/((t-6)(t-4)(t-2))", "(t^2+14)/((t-6)(t-4))", "-(1)/(t-6)", "0"},
        {"0", "0", "0", "-(15)/((t-6)(t-4)(t-2))", "(45t)/((t-6)(t-4)(t-2))", "-(15t)/((t-6)(t-4))", "(t)/(t-6)", "0"},
        {"0", "0", "0", "0", "-(105)/((t-6)(t-4)(t-2))", "(105)/((t-6)(t-4))", "-(21)/(t-6)", "1"},
    },
};

}  // namespace testdata
