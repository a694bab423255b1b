#include "mdsc/ensemble.hpp"

#include <cmath>
#include <sstream>

namespace mdsc {

EnsembleParams::EnsembleParams(int dl_, int dr_, int L_, int D_, int w_,
                               std::optional<std::int64_t> M_)
    : dl(dl_), dr(dr_), L(L_), D(D_), w(w_), M(M_) {
  if (dl < 3) throw std::invalid_argument("bit node degree dl >= 3 required");
  if (dr <= dl) throw std::invalid_argument("check node degree dr > dl required");
  if (D < 1) throw std::invalid_argument("dimension D >= 1 required");
  if (w < 1) throw std::invalid_argument("window width w >= 1 required");
  if (L <= w) throw std::invalid_argument("coupling number L > w required");
  if (M && *M < 1) throw std::invalid_argument("section size M >= 1 required");
  GridShape(D, L);  // range check on L^D
}

CouplingWindow::CouplingWindow(int w_, int D_) : w(w_), D(D_) {
  if (w < 1) throw std::invalid_argument("window width w >= 1 required");
  if (D < 1) throw std::invalid_argument("dimension D >= 1 required");
}

std::int64_t CouplingWindow::support_size() const {
  std::int64_t n = 1;
  for (int a = 0; a < D; ++a) n *= w;
  return n;
}

double CouplingWindow::weight(std::span<const int> offset) const {
  if (static_cast<int>(offset.size()) != D)
    throw std::invalid_argument("offset dimension does not match window");
  for (int c : offset)
    if (c < 0 || c >= w) return 0.0;
  return 1.0 / static_cast<double>(support_size());
}

ShorteningDomain ShorteningDomain::empty() { return ShorteningDomain(); }

ShorteningDomain ShorteningDomain::hyperplane(int axis, int width) {
  if (axis < 0) throw std::invalid_argument("hyperplane axis must be nonnegative");
  if (width < 1) throw std::invalid_argument("hyperplane width must be positive");
  ShorteningDomain d;
  d.kind_ = Kind::Hyperplane;
  d.axis_ = axis;
  d.width_ = width;
  return d;
}

ShorteningDomain ShorteningDomain::hypercube(int z) {
  if (z < 1) throw std::invalid_argument("hypercube size z must be positive");
  ShorteningDomain d;
  d.kind_ = Kind::Hypercube;
  d.z_ = z;
  return d;
}

ShorteningDomain ShorteningDomain::explicit_sections(std::vector<TorusIndex> sections) {
  ShorteningDomain d;
  d.kind_ = Kind::Explicit;
  d.sections_.insert(sections.begin(), sections.end());
  return d;
}

void ShorteningDomain::validate(const GridShape& shape) const {
  switch (kind_) {
    case Kind::Empty:
      return;
    case Kind::Hyperplane:
      if (axis_ >= shape.dim()) throw std::invalid_argument("hyperplane axis out of range");
      if (width_ >= shape.side()) throw std::invalid_argument("hyperplane width must be < L");
      return;
    case Kind::Hypercube:
      if (z_ >= shape.side()) throw std::invalid_argument("hypercube size z must be < L");
      return;
    case Kind::Explicit:
      for (const auto& s : sections_) {
        if (s.dim() != shape.dim())
          throw std::invalid_argument("explicit section dimension does not match grid");
        for (int a = 0; a < s.dim(); ++a)
          if (s[a] < 0 || s[a] >= shape.side())
            throw std::invalid_argument("explicit section out of range");
      }
      return;
  }
}

bool ShorteningDomain::contains(const TorusIndex& idx, const GridShape& shape) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Hyperplane:
      return idx[axis_] < width_;
    case Kind::Hypercube:
      for (int a = 0; a < shape.dim(); ++a)
        if (idx[a] >= z_) return false;
      return true;
    case Kind::Explicit:
      return sections_.count(idx) > 0;
  }
  return false;
}

std::int64_t ShorteningDomain::size(const GridShape& shape) const {
  switch (kind_) {
    case Kind::Empty:
      return 0;
    case Kind::Hyperplane: {
      std::int64_t n = width_;
      for (int a = 1; a < shape.dim(); ++a) n *= shape.side();
      return n;
    }
    case Kind::Hypercube: {
      std::int64_t n = 1;
      for (int a = 0; a < shape.dim(); ++a) n *= z_;
      return n;
    }
    case Kind::Explicit:
      return static_cast<std::int64_t>(sections_.size());
  }
  return 0;
}

ScalarField ShorteningDomain::indicator(const GridShape& shape) const {
  validate(shape);
  ScalarField f = constant_field(shape, 0.0);
  if (kind_ == Kind::Explicit) {
    for (const auto& s : sections_) f.at(s) = 1.0;
    return f;
  }
  if (kind_ == Kind::Empty) return f;
  for (std::int64_t i = 0; i < shape.size(); ++i)
    if (contains(unflatten(i, shape), shape)) f.values[i] = 1.0;
  return f;
}

std::string ShorteningDomain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Empty:
      os << "empty";
      break;
    case Kind::Hyperplane:
      os << "hyperplane(axis=" << axis_ << ",width=" << width_ << ")";
      break;
    case Kind::Hypercube:
      os << "hypercube(z=" << z_ << ")";
      break;
    case Kind::Explicit:
      os << "explicit(" << sections_.size() << " sections)";
      break;
  }
  return os.str();
}

std::int64_t domain_size(const ShorteningDomain& domain, const GridShape& shape) {
  domain.validate(shape);
  return domain.size(shape);
}

namespace {

// sum_i [1 - (sum_{j: i+j in Z} w_j)^dr], the check-node count kernel of the
// rate formula. The inner sum is the window overlap with Z seen from each
// check node, i.e. the backward box-window sum of the indicator of Z; on the
// torus it is a translate of the forward sum, so the total is unchanged.
double inactive_check_sum(const EnsembleParams& params, const ShorteningDomain& domain) {
  const GridShape shape = params.shape();
  domain.validate(shape);
  ScalarField overlap = box_window_sum(domain.indicator(shape), params.w, WindowDirection::Backward);
  const DenseArray<double> powed = int_pow(overlap.values, params.dr);
  return (1.0 - powed).sum();
}

}  // namespace

double design_rate(const EnsembleParams& params, const ShorteningDomain& domain) {
  const GridShape shape = params.shape();
  const std::int64_t n_short = domain_size(domain, shape);
  if (n_short >= shape.size())
    throw std::invalid_argument("shortening domain covers every section; no transmitted bits");
  const double dl_over_dr = static_cast<double>(params.dl) / params.dr;
  return 1.0 - dl_over_dr * inactive_check_sum(params, domain) /
                   static_cast<double>(shape.size() - n_short);
}

RateCounts design_rate_counts(const EnsembleParams& params, const ShorteningDomain& domain,
                              double M) {
  const GridShape shape = params.shape();
  const std::int64_t n_short = domain_size(domain, shape);
  if (n_short >= shape.size())
    throw std::invalid_argument("shortening domain covers every section; no transmitted bits");
  const double dl_over_dr = static_cast<double>(params.dl) / params.dr;
  return RateCounts{M * static_cast<double>(shape.size() - n_short),
                    dl_over_dr * M * inactive_check_sum(params, domain)};
}

ClosedFormRate1D closed_form_rate_1d(const EnsembleParams& params) {
  if (params.D != 1) throw std::invalid_argument("closed-form rate applies to D = 1 only");
  const double dl_over_dr = static_cast<double>(params.dl) / params.dr;
  double s = 0.0;
  for (int i = 0; i <= params.w; ++i)
    s += int_pow(static_cast<double>(i) / params.w, params.dr);
  const double denom = static_cast<double>(params.L - params.w);
  ClosedFormRate1D out{};
  out.as_printed = (1.0 - dl_over_dr) - dl_over_dr * (1.0 - params.w - 2.0 * s) / denom;
  out.sign_corrected = (1.0 - dl_over_dr) - dl_over_dr * (params.w + 1.0 - 2.0 * s) / denom;
  out.general_rate = design_rate(params, ShorteningDomain::hyperplane(0, params.w));
  out.printed_matches = std::abs(out.as_printed - out.general_rate) < 1e-12;
  out.corrected_matches = std::abs(out.sign_corrected - out.general_rate) < 1e-12;
  return out;
}

double hypercube_rate_bound(const EnsembleParams& params, int z) {
  if (z < 0) throw std::invalid_argument("hypercube size z must be nonnegative");
  if (z >= params.L) throw std::invalid_argument("hypercube size z must be < L");
  const double total = static_cast<double>(params.shape().size());
  const double cube = int_pow(static_cast<double>(z), params.D);
  return 1.0 - (static_cast<double>(params.dl) / params.dr) * total / (total - cube);
}

}  // namespace mdsc
