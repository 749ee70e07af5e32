#include "wsplab/model_space.hpp"

#include <cmath>
#include <stdexcept>

#include "wsplab/kernels/kernels.hpp"

namespace wsp {

ModelSpaceBasis tm_basis(const BlaschkeProduct& b, int n) {
  if (n < b.degree()) throw std::invalid_argument("tm_basis: truncation degree below deg(B)");
  ModelSpaceBasis out{b, {}, n};
  out.basis.reserve(static_cast<std::size_t>(b.degree()));

  // running product of the preceding factors
  std::vector<cplx> head(static_cast<std::size_t>(n + 1));
  head[0] = 1.0;
  for (const cplx& a : b.zeros()) {
    const cplx abar = std::conj(a);
    std::vector<cplx> e = head;
    for (std::size_t k = 1; k < e.size(); ++k) e[k] += abar * e[k - 1];
    const double scale = std::sqrt(1.0 - std::norm(a));
    for (cplx& v : e) v *= scale;
    out.basis.emplace_back(std::move(e));

    for (std::size_t k = head.size(); k-- > 0;) head[k] = (k > 0 ? head[k - 1] : cplx{}) - a * head[k];
    for (std::size_t k = 1; k < head.size(); ++k) head[k] += abar * head[k - 1];
  }
  return out;
}

std::vector<cplx> model_space_coordinates(const ComplexSeries& f, const ModelSpaceBasis& basis) {
  const auto len = static_cast<std::size_t>(std::min(f.degree(), basis.truncation_degree) + 1);
  std::vector<cplx> coords;
  coords.reserve(basis.basis.size());
  for (const ComplexSeries& e : basis.basis) {
    // <f, e> = sum f_n conj(e_n)
    coords.push_back(std::conj(kernels::dotc(f.coeffs().data(), e.coeffs().data(), len)));
  }
  return coords;
}

ComplexSeries model_space_combine(std::span<const cplx> coords, const ModelSpaceBasis& basis) {
  if (coords.size() != basis.basis.size()) throw std::invalid_argument("model_space_combine: coordinate count");
  std::vector<cplx> out(static_cast<std::size_t>(basis.truncation_degree + 1));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    kernels::axpy(coords[j], basis.basis[j].coeffs().data(), out.data(), out.size());
  }
  return ComplexSeries(std::move(out));
}

ComplexSeries project_KB(const ComplexSeries& f, const ModelSpaceBasis& basis) {
  return model_space_combine(model_space_coordinates(f, basis), basis);
}

}  // namespace wsp
