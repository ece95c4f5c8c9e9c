#include "nacog/sigma3.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nacog/linalg.hpp"

namespace nacog::sigma3 {

Perm::Perm(int image1, int image2, int image3) {
  const std::array<int, 3> img{image1, image2, image3};
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (img[i] < 1 || img[i] > 3 || seen[img[i] - 1])
      throw std::invalid_argument("Perm: images must be a permutation of 1,2,3");
    seen[img[i] - 1] = true;
    images_[i] = static_cast<std::uint8_t>(img[i] - 1);
  }
}

const Perm& Perm::identity() {
  static const Perm p(1, 2, 3);
  return p;
}
const Perm& Perm::tau12() {
  static const Perm p(2, 1, 3);
  return p;
}
const Perm& Perm::tau13() {
  static const Perm p(3, 2, 1);
  return p;
}
const Perm& Perm::tau23() {
  static const Perm p(1, 3, 2);
  return p;
}
const Perm& Perm::c1() {
  static const Perm p(2, 3, 1);
  return p;
}
const Perm& Perm::c2() {
  static const Perm p(3, 1, 2);
  return p;
}

const std::array<Perm, 6>& all_perms() {
  static const std::array<Perm, 6> perms{Perm::identity(), Perm::tau12(), Perm::tau13(),
                                         Perm::tau23(),    Perm::c1(),    Perm::c2()};
  return perms;
}

std::size_t Perm::index() const {
  const auto& perms = all_perms();
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), *this) - perms.begin());
}

std::string_view Perm::name() const {
  static constexpr std::array<std::string_view, 6> names{"Id", "tau12", "tau13", "tau23", "c1", "c2"};
  return names[index()];
}

Perm compose(const Perm& p, const Perm& q) {
  return Perm(static_cast<int>(p(q(0))) + 1, static_cast<int>(p(q(1))) + 1,
              static_cast<int>(p(q(2))) + 1);
}

Perm inverse(const Perm& p) {
  std::array<int, 3> inv{};
  for (std::size_t x = 0; x < 3; ++x) inv[p(x)] = static_cast<int>(x) + 1;
  return Perm(inv[0], inv[1], inv[2]);
}

int sign(const Perm& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      if (p(a) > p(b)) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// --- GroupVector ----------------------------------------------------------

GroupVector GroupVector::of(const Perm& p) {
  GroupVector v;
  v[p] = 1;
  return v;
}

GroupVector GroupVector::all_ones() {
  GroupVector v;
  for (const auto& p : all_perms()) v[p] = 1;
  return v;
}

GroupVector GroupVector::sign_vector() {
  GroupVector v;
  for (const auto& p : all_perms()) v[p] = sign(p);
  return v;
}

GroupVector GroupVector::parse(std::string_view text) {
  std::array<Rat, 6> coeffs;
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (count == 6) throw std::invalid_argument("group vector: expected exactly 6 coefficients");
    coeffs[count++] = Rat::parse(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != 6) throw std::invalid_argument("group vector: expected exactly 6 coefficients");
  return GroupVector(std::move(coeffs));
}

std::string GroupVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << coeffs_[i];
  return os.str();
}

GroupVector GroupVector::from_vector(const RatVector& v) {
  if (v.size() != 6) throw std::invalid_argument("group vector: expected 6 coordinates");
  std::array<Rat, 6> c;
  std::copy(v.begin(), v.end(), c.begin());
  return GroupVector(std::move(c));
}

bool GroupVector::is_zero() const { return nacog::is_zero(coeffs_); }

GroupVector& GroupVector::operator+=(const GroupVector& rhs) {
  for (std::size_t i = 0; i < 6; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& rhs) {
  for (std::size_t i = 0; i < 6; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

GroupVector& GroupVector::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupVector operator*(const GroupVector& a, const GroupVector& b) {
  GroupVector out;
  for (const auto& p : all_perms()) {
    if (a[p].is_zero()) continue;
    for (const auto& q : all_perms())
      if (!b[q].is_zero()) out[compose(p, q)] += a[p] * b[q];
  }
  return out;
}

// --- action on M^{⊗3} ----------------------------------------------------

Tensor3 phi_perm(const Perm& p, const Tensor3& t) {
  Tensor3 out(t.dim());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (t[flat].is_zero()) continue;
    out.at(permute_slots(p, t.unflatten(flat))) += t[flat];
  }
  return out;
}

Tensor3 phi_vector(const GroupVector& v, const Tensor3& t) {
  Tensor3 out(t.dim());
  for (const auto& p : all_perms())
    if (!v[p].is_zero()) out += v[p] * phi_perm(p, t);
  return out;
}

// --- subgroups and distinguished vectors ---------------------------------

std::vector<Perm> subgroup_elements(int i) {
  switch (i) {
    case 1: return {Perm::identity()};
    case 2: return {Perm::identity(), Perm::tau12()};
    case 3: return {Perm::identity(), Perm::tau23()};
    case 4: return {Perm::identity(), Perm::tau13()};
    case 5: return {Perm::identity(), Perm::c1(), Perm::c2()};
    case 6: return {all_perms().begin(), all_perms().end()};
    default: throw std::out_of_range("subgroup index must be in 1..6, got " + std::to_string(i));
  }
}

GroupVector alternating_vector(int i) {
  GroupVector v;
  for (const auto& p : subgroup_elements(i)) v[p] += sign(p);
  return v;
}

GroupVector symmetrizing_vector(int i) {
  GroupVector v;
  for (const auto& p : subgroup_elements(i)) v[inverse(p)] += 1;
  return v;
}

// --- orbits and invariant subspaces --------------------------------------

std::vector<GroupVector> right_orbit(const GroupVector& v) {
  std::vector<GroupVector> orbit;
  orbit.reserve(6);
  for (const auto& p : all_perms()) orbit.push_back(v * GroupVector::of(p));
  return orbit;
}

namespace {

std::vector<GroupVector> echelon_basis(const std::vector<GroupVector>& spanning) {
  std::vector<RatVector> rows;
  rows.reserve(spanning.size());
  for (const auto& g : spanning) rows.push_back(g.as_vector());
  const EchelonForm ef = reduced_echelon(RatMatrix::from_rows(rows, 6));
  std::vector<GroupVector> basis;
  for (std::size_t r = 0; r < ef.reduced.rows(); ++r)
    basis.push_back(GroupVector::from_vector(ef.reduced.row(r)));
  return basis;
}

std::size_t span_dimension(const std::vector<GroupVector>& vs) {
  return echelon_basis(vs).size();
}

}  // namespace

std::vector<GroupVector> invariant_subspace(const GroupVector& v) {
  return echelon_basis(right_orbit(v));
}

GroupVector trivial_idempotent() { return Rat(1, 6) * GroupVector::all_ones(); }

GroupVector sign_idempotent() { return Rat(1, 6) * GroupVector::sign_vector(); }

GroupVector standard_idempotent() {
  return GroupVector::of(Perm::identity()) - trivial_idempotent() - sign_idempotent();
}

IsotypicDimensions isotypic_dimensions(const std::vector<GroupVector>& basis) {
  std::vector<RatVector> rows;
  for (const auto& b : basis) rows.push_back(b.as_vector());
  for (const auto& p : all_perms()) {
    for (const auto& b : basis) {
      if (!in_span((b * GroupVector::of(p)).as_vector(), rows))
        throw std::invalid_argument("subspace is not right-invariant: not closed under " +
                                    std::string(p.name()));
    }
  }
  // For a right ideal F and a central idempotent e, F ∩ K[Σ₃]e = F·e.
  auto projected = [&](const GroupVector& e) {
    std::vector<GroupVector> image;
    for (const auto& b : basis) image.push_back(b * e);
    return span_dimension(image);
  };
  return {projected(trivial_idempotent()), projected(sign_idempotent()),
          projected(standard_idempotent())};
}

std::vector<GroupVector> one_dimensional_invariants() {
  // A right-invariant line is spanned by a common eigenvector of the right
  // multiplications; the eigenvalues form a rational character of Σ₃, so
  // they are ±1. Enumerate all sign assignments and keep the characters.
  std::vector<GroupVector> lines;
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto chi = [&](const Perm& p) { return (mask >> p.index()) & 1U ? -1 : 1; };
    bool is_character = true;
    for (const auto& p : all_perms())
      for (const auto& q : all_perms())
        if (chi(compose(p, q)) != chi(p) * chi(q)) is_character = false;
    if (!is_character) continue;

    // Stack (R_σ − χ(σ)·Id) for every σ, acting on coordinates of v.
    RatMatrix system(36, 6);
    for (const auto& p : all_perms()) {
      for (const auto& g : all_perms()) {
        const GroupVector column = GroupVector::of(g) * GroupVector::of(p);
        for (const auto& row : all_perms()) {
          Rat entry = column[row];
          if (row == g) entry -= chi(p);
          system(p.index() * 6 + row.index(), g.index()) = entry;
        }
      }
    }
    const auto kernel = kernel_basis(system);
    if (kernel.size() != 1)
      throw std::logic_error("character eigenspace is not one-dimensional");
    GroupVector line = GroupVector::from_vector(kernel.front());
    const auto& c = line.coefficients();
    const auto lead = std::find_if(c.begin(), c.end(), [](const Rat& x) { return !x.is_zero(); });
    line *= Rat(1) / *lead;
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace nacog::sigma3
