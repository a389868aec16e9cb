#include "bsk/presentation.hpp"

#include <sstream>

namespace bsk {

GroupSpec make_bs(const Integer& p, const Integer& q) {
  if (p == 0 || q == 0) {
    throw ConfigError("BS parameters must be nonzero (got p=" + p.get_str() + ", q=" + q.get_str() +
                      ")");
  }
  IntMatrix a(1), b(1);
  a(0, 0) = p;
  b(0, 0) = q;
  return make_matrix_group(a, b);
}

GroupSpec make_matrix_group(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() == 0) throw ConfigError("dimension must be positive");
  if (a.dim() != b.dim()) {
    throw ConfigError("A and B have different dimensions (" + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()) + ")");
  }
  if (a.determinant() == 0) throw ConfigError("A is singular: " + to_string(a));
  if (b.determinant() == 0) throw ConfigError("B is singular: " + to_string(b));

  GroupSpec g;
  g.n_ = a.dim();
  g.a_ = std::make_shared<const Lattice>(a);
  g.b_ = std::make_shared<const Lattice>(b);
  g.res_a_ = g.a_->residues();
  g.res_b_ = g.b_->residues();
  g.lambda_ = RationalMatrix(a) * RationalMatrix(b).inverse();
  g.lambda_inv_ = g.lambda_.inverse();
  g.memo_ = std::make_shared<GroupSpec::PowerMemo>();
  return g;
}

const RationalMatrix& GroupSpec::lambda_power(std::int64_t k) const {
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto& powers = memo_->powers;
  if (auto it = powers.find(k); it != powers.end()) return *it->second;
  if (k == 0) {
    return *powers.emplace(0, std::make_unique<RationalMatrix>(RationalMatrix::identity(n_)))
                .first->second;
  }
  // Walk outward from the largest cached power of the same sign.
  std::int64_t step = k > 0 ? 1 : -1;
  const RationalMatrix& base = k > 0 ? lambda_ : lambda_inv_;
  std::int64_t j = step;
  RationalMatrix cur = base;
  for (std::int64_t i = k - step; i != 0; i -= step) {
    if (auto it = powers.find(i); it != powers.end()) {
      j = i + step;
      cur = *it->second * base;
      break;
    }
  }
  powers.emplace(j, std::make_unique<RationalMatrix>(cur));
  while (j != k) {
    j += step;
    cur = cur * base;
    powers.emplace(j, std::make_unique<RationalMatrix>(cur));
  }
  return *powers.at(k);
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  if (n_ == 1) {
    os << "BS(" << a()(0, 0).get_str() << "," << b()(0, 0).get_str() << ")";
  } else {
    os << "HNN(Z^" << n_ << ", A=" << to_string(a()) << ", B=" << to_string(b()) << ")";
  }
  return os.str();
}

}  // namespace bsk
