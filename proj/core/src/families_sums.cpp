#include "tutte/error.hpp"
#include "tutte/families.hpp"

namespace tutte::families {

namespace {

BiPoly w_poly() { return BiPoly::x() * BiPoly::y() - BiPoly::x() - BiPoly::y(); }

}  // namespace

BiPoly two_sum_poly(const BiPoly& m1_contract, const BiPoly& m1_delete, const BiPoly& m2_contract,
                    const BiPoly& m2_delete) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly num = m1_contract * ((x - 1) * m2_contract - m2_delete) +
                     m1_delete * ((y - 1) * m2_delete - m2_contract);
  return exact_div(num, w_poly());
}

BiPoly delta_sum_poly(const DeltaMinors& q_vec, const DeltaMinors& p_vec) {
  const BiPoly w = w_poly();
  const BiPoly a = 1 - BiPoly::y();
  const BiPoly b = 1 - BiPoly::x();
  const BiPoly one(1);
  const BiPoly two(2);
  // The connector matrix scaled by xy - x - y so that every entry is a
  // polynomial.
  const std::array<std::array<BiPoly, 5>, 5> c{{
      {a * a, a, a, two, a},
      {a, w, one, b, one},
      {a, one, w, b, one},
      {two, b, b, b * b, b},
      {a, one, one, b, w},
  }};
  BiPoly num;
  for (std::size_t i = 0; i < 5; ++i) {
    BiPoly row;
    for (std::size_t j = 0; j < 5; ++j) row += c[i][j] * p_vec[j];
    num += q_vec[i] * row;
  }
  return exact_div(num, w * (w - 1));
}

BiPoly thicken_poly(const BiPoly& t, unsigned rank, unsigned k) {
  if (k < 1) fail(ErrorKind::InvalidParameters, "thickening needs k >= 1");
  const BiPoly g = geometric_sum_y(k);
  return subst_rational(t, g - 1 + BiPoly::x(), g, BiPoly::y(k), BiPoly(1), pow(g, rank));
}

BiPoly stretch_poly(const BiPoly& t, unsigned corank, unsigned k) {
  if (k < 1) fail(ErrorKind::InvalidParameters, "stretch needs k >= 1");
  const BiPoly g = geometric_sum_x(k);
  return subst_rational(t, BiPoly::x(k), BiPoly(1), g - 1 + BiPoly::y(), g, pow(g, corank));
}

std::pair<BiPoly, BiPoly> tensor_fg(const BiPoly& t_n_delete, const BiPoly& t_n_contract) {
  // (x-1) f + g = T(N\d), f + (y-1) g = T(N/d); the determinant is xy - x - y.
  const BiPoly w = w_poly();
  BiPoly f = exact_div((BiPoly::y() - 1) * t_n_delete - t_n_contract, w);
  BiPoly g = exact_div((BiPoly::x() - 1) * t_n_contract - t_n_delete, w);
  return {std::move(f), std::move(g)};
}

BiPoly tensor_poly(const TensorInputs& in) {
  if (in.rank > in.size) fail(ErrorKind::InvalidParameters, "rank exceeds ground set size");
  const auto [f, g] = tensor_fg(in.t_n_delete, in.t_n_contract);
  // (x-1)f + g and f + (y-1)g are the two minors of N themselves.
  return subst_rational(in.t_m, in.t_n_delete, g, in.t_n_contract, f,
                        pow(f, in.size - in.rank) * pow(g, in.rank));
}

}  // namespace tutte::families
