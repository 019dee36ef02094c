#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ocf/boolean_function.hpp"

namespace ocf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File format, two variants sharing the header line "n=<int>" (1 <= n <= 24):
//  * dense:  one line of exactly ceil(2^n / 4) hex digits; bit i of the table
//    is bit (i mod 4) of digit (i div 4), i.e. "n=1\n2\n" encodes f(0)=0,
//    f(1)=1.
//  * sparse: the token "support:" followed by whitespace-separated n-character
//    binary strings, coordinate j at position j from the right.
BooleanFunction parseFunction(std::istream& in);
BooleanFunction parseFunction(const std::string& text);
BooleanFunction loadFunction(const std::string& path);

std::string serializeDense(const BooleanFunction& f);
std::string serializeSparse(const BooleanFunction& f);

// Binary-string point encoding shared by the sparse format, CLI flags and
// witness reports.
std::string pointToBinary(std::uint32_t x, int n);
std::uint32_t binaryToPoint(const std::string& s, int n);

}  // namespace ocf
