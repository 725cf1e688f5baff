#include "nh/cartan.hpp"

#include <cctype>
#include <stdexcept>

namespace nh {

CartanDatum CartanDatum::type_a(int rank) {
  if (rank < 1) throw std::invalid_argument("type A rank must be >= 1");
  CartanDatum d;
  d.name = "A" + std::to_string(rank);
  d.rank = rank;
  d.nvars = rank + 1;
  d.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    d.cartan[i][i] = 2;
    if (i + 1 < rank) {
      d.cartan[i][i + 1] = -1;
      d.cartan[i + 1][i] = -1;
    }
  }
  for (int i = 1; i <= rank; ++i) {
    LinearForm alpha(d.nvars);
    alpha.coeffs[i - 1] = 1;
    alpha.coeffs[i] = -1;
    d.simple_roots.push_back(alpha);
    // s_i is the transposition (i, i+1) on variables.
    std::vector<int> perm(d.nvars);
    for (int j = 1; j <= d.nvars; ++j) perm[j - 1] = j;
    std::swap(perm[i - 1], perm[i]);
    d.perms.push_back(perm);
    std::vector<LinearForm> action;
    for (int j = 1; j <= d.nvars; ++j) {
      LinearForm img(d.nvars);
      img.coeffs[perm[j - 1] - 1] = 1;
      action.push_back(img);
    }
    d.reflection_action.push_back(std::move(action));
  }
  d.validate();
  return d;
}

CartanDatum CartanDatum::from_cartan_matrix(std::vector<std::vector<int>> a,
                                            std::string name) {
  const int r = static_cast<int>(a.size());
  if (r < 1) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("Cartan matrix must be square");
  CartanDatum d;
  d.name = name.empty() ? "cartan" + std::to_string(r) : std::move(name);
  d.rank = r;
  d.nvars = r;
  d.cartan = std::move(a);
  // Fundamental-weight coordinates: alpha_j = sum_k a_kj x_k and
  // s_i(x_j) = x_j - delta_ij * alpha_i.
  for (int j = 1; j <= r; ++j) {
    LinearForm alpha(r);
    for (int k = 0; k < r; ++k) alpha.coeffs[k] = d.cartan[k][j - 1];
    d.simple_roots.push_back(alpha);
  }
  for (int i = 1; i <= r; ++i) {
    std::vector<LinearForm> action;
    for (int j = 1; j <= r; ++j) {
      LinearForm img(r);
      img.coeffs[j - 1] = 1;
      if (j == i) img = img - d.simple_roots[i - 1];
      action.push_back(img);
    }
    d.reflection_action.push_back(std::move(action));
  }
  d.validate();
  return d;
}

CartanDatum CartanDatum::named(const std::string& spec) {
  if (spec.size() < 2)
    throw std::invalid_argument("bad group spec: " + spec);
  char family = spec[0];
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      throw std::invalid_argument("bad group spec: " + spec);
  int r = std::stoi(spec.substr(1));
  auto two_off = [](int r2, int sub, int at_i, int at_j) {
    std::vector<std::vector<int>> m(r2, std::vector<int>(r2, 0));
    for (int i = 0; i < r2; ++i) {
      m[i][i] = 2;
      if (i + 1 < r2) {
        m[i][i + 1] = -1;
        m[i + 1][i] = -1;
      }
    }
    m[at_i][at_j] = sub;
    return m;
  };
  switch (family) {
    case 'A':
      return type_a(r);
    case 'B':
      if (r < 2 || r > 4) throw std::invalid_argument("B rank 2..4 supported");
      return from_cartan_matrix(two_off(r, -2, r - 1, r - 2), spec);
    case 'C':
      if (r < 2 || r > 4) throw std::invalid_argument("C rank 2..4 supported");
      return from_cartan_matrix(two_off(r, -2, r - 2, r - 1), spec);
    case 'G': {
      if (r != 2) throw std::invalid_argument("only G2 supported");
      return from_cartan_matrix({{2, -1}, {-3, 2}}, spec);
    }
    case 'D': {
      if (r != 4) throw std::invalid_argument("only D4 supported");
      std::vector<std::vector<int>> m(4, std::vector<int>(4, 0));
      for (int i = 0; i < 4; ++i) m[i][i] = 2;
      // Node 2 is the branch node.
      m[0][1] = m[1][0] = -1;
      m[1][2] = m[2][1] = -1;
      m[1][3] = m[3][1] = -1;
      return from_cartan_matrix(m, spec);
    }
    default:
      throw std::invalid_argument("unsupported group family: " + spec);
  }
}

void CartanDatum::validate() const {
  for (int i = 0; i < rank; ++i)
    if (cartan[i][i] != 2)
      throw std::invalid_argument("Cartan diagonal entry must be 2");
  for (int i = 1; i <= rank; ++i) {
    const LinearForm& alpha = root(i);
    if (alpha.is_zero()) throw std::invalid_argument("zero simple root");
    // s_i(alpha_i) must equal -alpha_i.
    LinearForm image(nvars);
    for (int j = 0; j < nvars; ++j) {
      const LinearForm& img = reflection_action[i - 1][j];
      for (int k = 0; k < nvars; ++k)
        image.coeffs[k] += alpha.coeffs[j] * img.coeffs[k];
    }
    if (!(image == -alpha))
      throw std::invalid_argument("reflection/root inconsistency at s_" +
                                  std::to_string(i));
  }
}

}  // namespace nh
