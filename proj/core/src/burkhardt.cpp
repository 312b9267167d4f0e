#include "fano3/nodal.hpp"

namespace fano3 {

// The unique 45-node quartic 3-fold.  Its nodes live in Q(w):
//   27 points (1 : w^a : w^b : w^c : w^d) with a+b+c+d = 0 (mod 3), and
//   18 points with x0 = 0, two more coordinates zero, and the remaining
//   pair proportional to (1, -w^k).
const char* const kBurkhardtPolynomialText =
    "x0^4 - x0*(x1^3 + x2^3 + x3^3 + x4^3) + 3*x1*x2*x3*x4";

namespace {

Eisenstein omega_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return Eisenstein(1);
    case 1: return Eisenstein::omega();
    default: return Eisenstein::omega() * Eisenstein::omega();
  }
}

}  // namespace

NodalConfiguration<Eisenstein> burkhardt_configuration() {
  NodalConfiguration<Eisenstein> cfg;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          if ((a + b + c + d) % 3 != 0) continue;
          cfg.nodes.push_back({Eisenstein(1), omega_pow(a), omega_pow(b), omega_pow(c),
                               omega_pow(d)});
        }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = 0; k < 3; ++k) {
        std::array<Eisenstein, 5> p{Eisenstein(0), Eisenstein(0), Eisenstein(0),
                                    Eisenstein(0), Eisenstein(0)};
        p[static_cast<std::size_t>(i)] = Eisenstein(1);
        p[static_cast<std::size_t>(j)] = -omega_pow(k);
        cfg.nodes.push_back(p);
      }
  cfg.quartic = parse_quartic(kBurkhardtPolynomialText)
                    .map_coefficients<Eisenstein>([](const Rational& r) { return Eisenstein(r); });
  return cfg;
}

}  // namespace fano3
