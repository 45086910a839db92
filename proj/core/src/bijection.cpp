#include "permsort/bijection.hpp"

#include <algorithm>

namespace permsort {

namespace {

// `in` holds the values {1..len}; writes P(in) to `out` (same length).
// A 231-avoider splits at its maximum into a prefix holding exactly the
// smallest values; any other split witnesses a 231.
void p_forward(std::span<const int> in, std::span<int> out) {
  const int n = static_cast<int>(in.size());
  if (n == 0) return;
  const auto m = static_cast<std::size_t>(std::find(in.begin(), in.end(), n) - in.begin());
  const int a = static_cast<int>(m);
  const int b = n - 1 - a;

  std::vector<int> alpha(in.begin(), in.begin() + a);
  std::vector<int> beta(in.begin() + a + 1, in.end());
  if (std::any_of(alpha.begin(), alpha.end(), [&](int x) { return x > a; })) {
    throw PreconditionError("P is defined on Av(231) only");
  }
  for (int& x : beta) x -= a;

  std::vector<int> p_alpha(alpha.size()), p_beta(beta.size());
  p_forward(alpha, p_alpha);
  p_forward(beta, p_beta);

  // (P(alpha) (+) 1) (-) P(beta)
  for (int i = 0; i < a; ++i) out[i] = p_alpha[i] + b;
  out[m] = n;
  for (int i = 0; i < b; ++i) out[m + 1 + i] = p_beta[i];
}

void p_backward(std::span<const int> in, std::span<int> out) {
  const int n = static_cast<int>(in.size());
  if (n == 0) return;
  const auto m = static_cast<std::size_t>(std::find(in.begin(), in.end(), n) - in.begin());
  const int g = static_cast<int>(m);
  const int d = n - 1 - g;

  std::vector<int> gamma(in.begin(), in.begin() + g);
  std::vector<int> delta(in.begin() + g + 1, in.end());
  if (std::any_of(delta.begin(), delta.end(), [&](int x) { return x > d; })) {
    throw PreconditionError("P^-1 is defined on Av(132) only");
  }
  for (int& x : gamma) x -= d;

  std::vector<int> q_gamma(gamma.size()), q_delta(delta.size());
  p_backward(gamma, q_gamma);
  p_backward(delta, q_delta);

  // P^-1(gamma) (+) (1 (-) P^-1(delta))
  for (int i = 0; i < g; ++i) out[i] = q_gamma[i];
  out[m] = n;
  for (int i = 0; i < d; ++i) out[m + 1 + i] = q_delta[i] + g;
}

}  // namespace

Permutation apply_P(const Permutation& perm) {
  std::vector<int> out(perm.values().size());
  try {
    p_forward(perm.values(), out);
  } catch (const PreconditionError&) {
    throw PreconditionError("apply_P: " + to_string(perm) + " contains 231");
  }
  return Permutation(std::move(out));
}

Permutation apply_P_inverse(const Permutation& perm) {
  std::vector<int> out(perm.values().size());
  try {
    p_backward(perm.values(), out);
  } catch (const PreconditionError&) {
    throw PreconditionError("apply_P_inverse: " + to_string(perm) + " contains 132");
  }
  return Permutation(std::move(out));
}

Relabeling lambda_of(const Permutation& perm) {
  const auto image = apply_P(perm);
  std::vector<int> map(perm.values().size());
  for (int i = 0; i < perm.size(); ++i) map[perm[i] - 1] = image[i];
  return Relabeling(Permutation(std::move(map)));
}

Permutation phi(const OperatorExpr& op, const Permutation& theta) {
  const auto image = apply(op, theta);
  Relabeling lambda;
  try {
    lambda = lambda_of(image);
  } catch (const PreconditionError&) {
    throw PreconditionError("phi: " + op.to_string() + "(" + to_string(theta) +
                            ") = " + to_string(image) + " contains 231");
  }
  return lambda.apply(theta);
}

}  // namespace permsort
