#include "ocf/function_io.hpp"

#include <fstream>
#include <sstream>

#include "ocf/bits.hpp"

namespace ocf {

namespace {

int hexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string stripped(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

}  // namespace

std::string pointToBinary(std::uint32_t x, int n) {
  std::string s(n, '0');
  for (int j = 0; j < n; ++j) {
    if ((x >> j) & 1) s[n - 1 - j] = '1';
  }
  return s;
}

std::uint32_t binaryToPoint(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n) {
    throw ParseError("point \"" + s + "\" must have exactly " + std::to_string(n) +
                     " binary digits");
  }
  std::uint32_t x = 0;
  for (int j = 0; j < n; ++j) {
    char c = s[n - 1 - j];
    if (c == '1')
      x |= 1u << j;
    else if (c != '0')
      throw ParseError("point \"" + s + "\" contains non-binary character");
  }
  return x;
}

BooleanFunction parseFunction(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty input");
  header = stripped(header);
  if (header.rfind("n=", 0) != 0) throw ParseError("header must be \"n=<int>\"");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(header.substr(2), &pos);
    if (pos != header.size() - 2) throw ParseError("trailing junk in header");
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("header must be \"n=<int>\"");
  }
  if (n < 1 || n > kMaxDimension) {
    throw ParseError("n=" + std::to_string(n) + " outside [1, 24]");
  }

  // Collect the remaining non-empty payload.
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(stripped(line));
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError("missing payload after header");

  BooleanFunction f(n);
  if (tokens[0] == "support:") {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      f.set(binaryToPoint(tokens[i], n), true);
    }
    return f;
  }

  // Dense hex payload; tolerate it being split across lines/spaces.
  std::string hex;
  for (const auto& t : tokens) hex += t;
  std::size_t expect = (f.size() + 3) / 4;
  if (hex.size() != expect) {
    throw ParseError("dense payload must have exactly " + std::to_string(expect) +
                     " hex digits, got " + std::to_string(hex.size()));
  }
  for (std::uint32_t i = 0; i < hex.size(); ++i) {
    int v = hexValue(hex[i]);
    if (v < 0) throw ParseError(std::string("non-hex character '") + hex[i] + "' in payload");
    for (int b = 0; b < 4; ++b) {
      std::uint32_t x = i * 4 + b;
      if (x < f.size() && ((v >> b) & 1)) f.set(x, true);
    }
    if (v != 0 && i * 4 + 4 > f.size()) {
      // Bits past 2^n must be zero (only possible when 2^n < 4, i.e. n = 1).
      for (int b = 0; b < 4; ++b) {
        if (i * 4 + b >= f.size() && ((v >> b) & 1)) {
          throw ParseError("dense payload sets bits beyond 2^n");
        }
      }
    }
  }
  return f;
}

BooleanFunction parseFunction(const std::string& text) {
  std::istringstream in(text);
  return parseFunction(in);
}

BooleanFunction loadFunction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  return parseFunction(in);
}

std::string serializeDense(const BooleanFunction& f) {
  std::string out = "n=" + std::to_string(f.n()) + "\n";
  std::size_t digits = (f.size() + 3) / 4;
  out.reserve(out.size() + digits + 1);
  for (std::size_t i = 0; i < digits; ++i) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      std::uint32_t x = static_cast<std::uint32_t>(i * 4 + b);
      if (x < f.size() && f.value(x)) v |= 1 << b;
    }
    out += "0123456789abcdef"[v];
  }
  out += '\n';
  return out;
}

std::string serializeSparse(const BooleanFunction& f) {
  std::string out = "n=" + std::to_string(f.n()) + "\nsupport:";
  for (std::uint32_t x : f.supportPoints()) {
    out += ' ';
    out += pointToBinary(x, f.n());
  }
  out += '\n';
  return out;
}

}  // namespace ocf
