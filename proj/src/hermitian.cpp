#include "lcklab/hermitian.hpp"

#include <sstream>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

std::string vector_text(const Vector& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Rational a = neg ? Rational(-v[i]) : v[i];
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1) os << to_string(a) << " ";
    os << labels[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string first_term(const Cochain& c, const std::vector<std::string>& labels) {
  if (c.is_zero()) return {};
  const auto& [m, coeff] = *c.terms().begin();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << labels[m[i]];
  os << ") residual " << to_string(coeff);
  return os.str();
}

bool is_j_invariant(const Matrix& s, const Matrix& J) { return J.transpose() * s * J == s; }

void require_pd(const Matrix& h) {
  if (!h.is_symmetric() || !is_positive_definite(h)) throw Error(ErrorCode::MetricNotPD, "metric is not positive definite");
}

Cochain d_or_zero(const LieAlgebra& g, const Cochain& w) {
  if (w.degree() >= g.dim()) return Cochain(g.dim(), g.dim());
  return ce_d(g, w);
}

}  // namespace

ComplexStructure::ComplexStructure(Matrix j) : j_(std::move(j)) {
  const std::size_t n = j_.rows();
  if (j_.cols() != n) throw Error(ErrorCode::DimensionMismatch, "J must be square");
  if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "complex structures need even dimension");
  if (!(j_ * j_ == -Matrix::identity(n))) throw Error(ErrorCode::BadComplexStructure, "J² ≠ −I");
}

bool LckReport::pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

const CheckItem* LckReport::find(const std::string& name) const {
  for (const auto& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

Vector nijenhuis(const LieAlgebra& g, const Matrix& J, std::span<const Rational> u, std::span<const Rational> v) {
  if (J.rows() != g.dim() || J.cols() != g.dim() || u.size() != g.dim() || v.size() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "nijenhuis");
  const Vector ju = J * u, jv = J * v;
  return g.bracket(ju, jv) - g.bracket(u, v) - J * g.bracket(ju, v) - J * g.bracket(u, jv);
}

bool is_integrable(const LieAlgebra& g, const Matrix& J) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(nijenhuis(g, J, unit_vector(n, i), unit_vector(n, j)))) return false;
  return true;
}

Matrix metric_from(const Cochain& omega, const Matrix& J) {
  const Matrix s = skew_matrix(omega);
  if (J.rows() != s.rows() || J.cols() != s.cols()) throw Error(ErrorCode::DimensionMismatch, "metric_from");
  if (!is_j_invariant(s, J)) throw Error(ErrorCode::NotJInvariant, "Ω(J·, J·) ≠ Ω");
  Matrix h = s * J;
  if (!h.is_symmetric()) throw Error(ErrorCode::NotJInvariant, "Ω(·, J·) is not symmetric");
  return h;
}

std::optional<Cochain> lee_form_from_omega(const LieAlgebra& g, const Cochain& omega) {
  const std::size_t n = g.dim();
  if (omega.degree() != 2 || omega.dim() != n) throw Error(ErrorCode::ArityMismatch, "Ω must be a 2-form on g");
  if (determinant(skew_matrix(omega)) == 0) throw Error(ErrorCode::DegenerateOmega, "Ω is degenerate");
  if (n < 3) return Cochain(n, 1);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(wedge(Cochain::dual(n, i), omega).to_vector());
  const Matrix wedge_map = Matrix::from_columns(cols, MonomialBasis(n, 3).size());
  const auto theta = solve(wedge_map, ce_d(g, omega).to_vector());
  if (!theta) return std::nullopt;
  return Cochain::one_form(*theta);
}

LeeField lee_field(const Cochain& omega, const Cochain& theta, const Matrix& J) {
  const Matrix h = metric_from(omega, J);
  require_pd(h);
  const Vector th = theta.as_covector();
  LeeField out;
  out.raw = *inverse(h) * th;
  out.norm_sq = dot(th, out.raw);
  if (out.norm_sq == 0) throw Error(ErrorCode::BadParameters, "θ = 0 has no Lee field");
  out.xi = Rational(1 / out.norm_sq) * out.raw;
  return out;
}

ReebData reeb_data(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J) {
  const Matrix h = metric_from(omega, J);
  const LeeField lee = lee_field(omega, theta, J);
  const Vector jxi = J * lee.xi;
  for (int eps : {1, -1}) {
    ReebData r;
    r.epsilon = eps;
    r.eta = Rational(eps) * jxi;
    const Vector heta = h * r.eta;
    const Rational norm = dot(r.eta, heta);
    r.phi = Cochain::one_form(Rational(1 / norm) * heta);
    if (d_or_zero(g, r.phi) - wedge(theta, r.phi) == omega) return r;
  }
  throw Error(ErrorCode::DecompositionFails, "Ω ≠ −θ∧φ + dφ for either sign of η");
}

LeviCivita::LeviCivita(const LieAlgebra& g, const Matrix& h) : g_(&g), h_(h) {
  if (h.rows() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "metric size");
  require_pd(h);
  h_inv_ = *inverse(h);
}

Vector LeviCivita::nabla(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = g_->dim();
  const Vector uv = g_->bracket(u, v);
  const Vector huv = h_ * uv, hu = h_ * u, hv = h_ * v;
  // rhs_z = h([u,v],z) - h([v,z],u) + h([z,u],v)
  Vector rhs = zero_vector(n);
  for (std::size_t z = 0; z < n; ++z) {
    const Vector ez = unit_vector(n, z);
    rhs[z] = huv[z] - dot(g_->bracket(v, ez), hu) + dot(g_->bracket(ez, u), hv);
  }
  return Rational(1, 2) * (h_inv_ * rhs);
}

Vector koszul_nabla(const LieAlgebra& g, const Matrix& h, std::span<const Rational> u,
                    std::span<const Rational> v) {
  return LeviCivita(g, h).nabla(u, v);
}

bool is_killing(const LieAlgebra& g, const Matrix& h, std::span<const Rational> u) {
  require_pd(h);
  const Matrix ad = ad_matrix(g, u);
  return (ad.transpose() * h + h * ad).is_zero();
}

Matrix lie_derivative_J(const LieAlgebra& g, const Matrix& J, std::span<const Rational> u) {
  const Matrix ad = ad_matrix(g, u);
  return ad * J - J * ad;
}

bool is_vaisman(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J) {
  const Matrix h = metric_from(omega, J);
  const LeeField lee = lee_field(omega, theta, J);
  const LeviCivita lc(g, h);
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!is_zero(lc.nabla(unit_vector(g.dim(), i), lee.xi))) return false;
  return true;
}

LckReport check_lck(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J) {
  namespace cn = check_names;
  const std::size_t n = g.dim();
  if (omega.dim() != n || theta.dim() != n || J.rows() != n || J.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "check_lck inputs must match the algebra");
  if (omega.degree() != 2 || theta.degree() != 1) throw Error(ErrorCode::ArityMismatch, "check_lck needs Ω ∈ Λ², θ ∈ Λ¹");
  const auto& labels = g.labels();
  LckReport r;

  const Cochain dtheta = d_or_zero(g, theta);
  r.items.push_back({cn::theta_closed, dtheta.is_zero(), first_term(dtheta, labels)});

  const Cochain residual = n >= 3 ? d_or_zero(g, omega) - wedge(theta, omega) : Cochain(n, n);
  r.items.push_back({cn::lck_equation, residual.is_zero(), first_term(residual, labels)});

  const bool jj = J * J == -Matrix::identity(n);
  r.items.push_back({cn::j_squared, jj, jj ? "" : "J² = " + (J * J).to_string()});

  CheckItem integ{cn::integrable, true, ""};
  for (std::size_t i = 0; i < n && integ.pass; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector nij = nijenhuis(g, J, unit_vector(n, i), unit_vector(n, j));
      if (!is_zero(nij)) {
        integ.pass = false;
        integ.detail = "N(" + labels[i] + "," + labels[j] + ") = " + vector_text(nij, labels);
        break;
      }
    }
  r.items.push_back(integ);

  const Matrix s = skew_matrix(omega);
  const Matrix sj = J.transpose() * s * J;
  CheckItem inv{cn::j_invariant, true, ""};
  for (std::size_t i = 0; i < n && inv.pass; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sj(i, j) != s(i, j)) {
        inv.pass = false;
        inv.detail = "(" + labels[i] + "," + labels[j] + ") Ω(J·,J·) = " + to_string(sj(i, j)) +
                     ", Ω = " + to_string(s(i, j));
        break;
      }
  r.items.push_back(inv);

  CheckItem pd{cn::metric_pd, false, ""};
  if (inv.pass) {
    r.metric = s * J;
    pd.pass = r.metric->is_symmetric() && is_positive_definite(*r.metric);
    if (!pd.pass) pd.detail = "h = " + r.metric->to_string();
  } else {
    pd.detail = "h undefined (Ω not J-invariant)";
  }
  r.items.push_back(pd);

  if (!is_solvable(g)) {
    const Subspace derived = derived_subalgebra(g);
    const Vector th = theta.as_covector();
    CheckItem on_s{cn::theta_on_derived, true, ""};
    for (const auto& v : derived.basis())
      if (dot(th, v) != 0) {
        on_s.pass = false;
        on_s.detail = "θ(" + vector_text(v, labels) + ") = " + to_string(dot(th, v));
        break;
      }
    r.items.push_back(on_s);
  }

  if (n >= 3 && determinant(s) != 0) r.computed_theta = lee_form_from_omega(g, omega);

  if (pd.pass && !theta.is_zero()) {
    r.lee = lee_field(omega, theta, J);
    try {
      r.reeb = reeb_data(g, omega, theta, J);
      const Cochain dphi = d_or_zero(g, r.reeb->phi);
      r.dphi_in_kernel = dphi.is_zero() || (interior(r.lee->xi, dphi).is_zero() && interior(r.reeb->eta, dphi).is_zero());
    } catch (const Error& e) {
      r.reeb_failure = e.what();
    }
    if (r.pass()) r.vaisman = is_vaisman(g, omega, theta, J);
  }
  return r;
}

}  // namespace lcklab
