#pragma once

#include <cstdint>
#include <string>

namespace trivext::quiver::golden {

/// Two vertices, arrows a: 1 -> 2, b, c: 2 -> 1 with relations a*b, c*a*c.
inline std::string algebra_a(std::uint32_t p = 32003) {
  return "quiver A {\n"
         "  field: F_" + std::to_string(p) + ";\n"
         "  vertices: 1, 2;\n"
         "  arrows: a: 1 -> 2, b: 2 -> 1, c: 2 -> 1;\n"
         "  relations: a*b, c*a*c;\n"
         "}\n";
}

/// Same quiver without c.
inline std::string algebra_a_prime(std::uint32_t p = 32003) {
  return "quiver Aprime {\n"
         "  field: F_" + std::to_string(p) + ";\n"
         "  vertices: 1, 2;\n"
         "  arrows: a: 1 -> 2, b: 2 -> 1;\n"
         "  relations: a*b;\n"
         "}\n";
}

/// One vertex, n loops, all products of two loops zero.
inline std::string algebra_bn(std::size_t n, std::uint32_t p = 32003) {
  std::string s = "quiver B" + std::to_string(n) + " {\n  field: F_" + std::to_string(p) +
                  ";\n  vertices: 1;\n  arrows:";
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? ", x" : " x") + std::to_string(i) + ": 1 -> 1";
  s += ";\n";
  if (n > 0) {
    s += "  relations:";
    bool first = true;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        s += std::string(first ? " " : ", ") + "x" + std::to_string(i) + "*x" + std::to_string(j);
        first = false;
      }
    s += ";\n";
  }
  return s + "}\n";
}

}  // namespace trivext::quiver::golden
