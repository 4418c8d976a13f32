#include "cq/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>

#include "cq/errors.hpp"

namespace cq {

namespace {

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> out{g.identity()};
  seen[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : gens) {
      const int y = g.mul(out[i], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> candidates(static_cast<std::size_t>(g.order()));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<int> gens;
  std::vector<int> span{g.identity()};
  for (int c : candidates) {
    if (static_cast<int>(span.size()) == g.order()) break;
    if (std::binary_search(span.begin(), span.end(), c)) continue;
    gens.push_back(c);
    span = closure(g, gens);
  }
  return gens;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return labels;
}

Complex root_of_unity(long k, long n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

ComplexMatrix scalar_matrix(Complex c) {
  ComplexMatrix m(1, 1);
  m(0, 0) = c;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                         std::string name)
    : name_(std::move(name)) {
  order_ = static_cast<int>(table.size());
  if (order_ < 1) throw InputError("FiniteGroup: empty multiplication table");
  table_.reserve(static_cast<std::size_t>(order_ * order_));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order_) {
      throw InputError("FiniteGroup: multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= order_) throw InputError("FiniteGroup: table entry out of range");
      table_.push_back(v);
    }
  }
  labels_ = labels.empty() ? default_labels(order_) : std::move(labels);
  if (static_cast<int>(labels_.size()) != order_) {
    throw InputError("FiniteGroup: label count does not match order");
  }
  finish_construction(true);
}

FiniteGroup::FiniteGroup(Trusted, std::vector<int> flat, int order,
                         std::vector<std::string> labels, std::string name)
    : order_(order), table_(std::move(flat)), labels_(std::move(labels)), name_(std::move(name)) {
  finish_construction(false);
}

void FiniteGroup::finish_construction(bool check_associativity) {
  const int n = order_;
  // Latin square: every row and column a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(static_cast<std::size_t>(n), 0);
    std::vector<char> col_seen(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      auto& rs = row_seen[static_cast<std::size_t>(mul(a, b))];
      auto& cs = col_seen[static_cast<std::size_t>(mul(b, a))];
      if (rs || cs) throw InputError("FiniteGroup: table is not a Latin square");
      rs = 1;
      cs = 1;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("FiniteGroup: no identity element");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) throw InputError("FiniteGroup: inverses are not two-sided");
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
  if (check_associativity) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            std::ostringstream msg;
            msg << "FiniteGroup: associativity fails at (" << a << ", " << b << ", " << c << ")";
            throw InputError(msg.str());
          }
        }
      }
  }
  generators_ = greedy_generators(*this);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic: order must be positive");
  std::vector<int> flat(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  }
  FiniteGroup g(Trusted{}, std::move(flat), n, std::move(labels), "Z" + std::to_string(n));
  g.family_ = Family::Cyclic;
  g.family_param_ = n;
  g.generators_ = n > 1 ? std::vector<int>{1} : std::vector<int>{};
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InputError("dihedral: n must be positive");
  const int order = 2 * n;
  auto index = [n](int k, int f) { return ((k % n) + n) % n + n * f; };
  std::vector<int> flat(static_cast<std::size_t>(order * order));
  std::vector<std::string> labels(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    const int ka = a % n;
    const int fa = a / n;
    std::string rot = ka == 0 ? "" : (ka == 1 ? "r" : "r" + std::to_string(ka));
    labels[static_cast<std::size_t>(a)] =
        fa == 0 ? (ka == 0 ? "e" : rot) : rot + "s";
    for (int b = 0; b < order; ++b) {
      const int kb = b % n;
      const int fb = b / n;
      // (r^ka s^fa)(r^kb s^fb) = r^(ka + (-1)^fa kb) s^(fa + fb)
      const int k = fa == 0 ? ka + kb : ka - kb;
      flat[static_cast<std::size_t>(a * order + b)] = index(k, (fa + fb) % 2);
    }
  }
  FiniteGroup g(Trusted{}, std::move(flat), order, std::move(labels), "D" + std::to_string(n));
  g.family_ = Family::Dihedral;
  g.family_param_ = n;
  g.generators_ = n > 1 ? std::vector<int>{1, n} : std::vector<int>{n};
  return g;
}

namespace {

std::vector<ComplexMatrix> quaternion_matrices() {
  const Complex i(0.0, 1.0);
  ComplexMatrix one = ComplexMatrix::Identity(2, 2);
  ComplexMatrix qi(2, 2), qj(2, 2), qk(2, 2);
  qi << i, 0.0, 0.0, -i;
  qj << 0.0, 1.0, -1.0, 0.0;
  qk = qi * qj;
  return {one, -one, qi, -qi, qj, -qj, qk, -qk};
}

}  // namespace

FiniteGroup FiniteGroup::quaternion() {
  const auto mats = quaternion_matrices();
  std::vector<int> flat(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const ComplexMatrix p = mats[static_cast<std::size_t>(a)] * mats[static_cast<std::size_t>(b)];
      int found = -1;
      for (int c = 0; c < 8; ++c)
        if ((p - mats[static_cast<std::size_t>(c)]).norm() < 1e-12) found = c;
      flat[static_cast<std::size_t>(a * 8 + b)] = found;
    }
  FiniteGroup g(Trusted{}, std::move(flat), 8, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
  g.family_ = Family::Quaternion;
  g.generators_ = {2, 4};
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  FiniteGroup g = dihedral(3);
  g.name_ = "S3";
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order();
  const int nh = h.order();
  const int n = ng * nh;
  std::vector<int> flat(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int ga = a / nh, ha = a % nh;
    labels[static_cast<std::size_t>(a)] = "(" + g.label(ga) + "," + h.label(ha) + ")";
    for (int b = 0; b < n; ++b) {
      const int gb = b / nh, hb = b % nh;
      flat[static_cast<std::size_t>(a * n + b)] = g.mul(ga, gb) * nh + h.mul(ha, hb);
    }
  }
  FiniteGroup p(Trusted{}, std::move(flat), n, std::move(labels), g.name() + "x" + h.name());
  p.family_ = Family::Product;
  p.factors_ = {std::make_shared<const FiniteGroup>(g), std::make_shared<const FiniteGroup>(h)};
  std::vector<int> gens;
  for (int s : g.generators()) gens.push_back(s * nh + h.identity());
  for (int s : h.generators()) gens.push_back(g.identity() * nh + s);
  p.generators_ = gens;
  return p;
}

FiniteGroup FiniteGroup::preset(std::string_view name) {
  const auto x = name.find('x');
  if (x != std::string_view::npos) {
    return direct_product(preset(name.substr(0, x)), preset(name.substr(x + 1)));
  }
  if (name == "Q8") return quaternion();
  if (name == "S3") return symmetric3();
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D')) {
    const std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 200) return name[0] == 'Z' ? cyclic(n) : dihedral(n);
    }
  }
  throw InputError("unknown group preset '" + std::string(name) +
                   "' (expected Zn, Dn, Q8, S3 or products like Z2xZ2)");
}

int FiniteGroup::power(int a, int k) const {
  int base = k >= 0 ? a : inverse(a);
  int e = k >= 0 ? k : -k;
  int out = identity_;
  for (int i = 0; i < e; ++i) out = mul(out, base);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::find(std::string_view label) const {
  for (int a = 0; a < order_; ++a)
    if (labels_[static_cast<std::size_t>(a)] == label) return a;
  throw InputError("group " + name_ + " has no element labelled '" + std::string(label) + "'");
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a)
    rows[static_cast<std::size_t>(a)].assign(table_.begin() + a * order_,
                                             table_.begin() + (a + 1) * order_);
  return rows;
}

// ---------------------------------------------------------------------------
// Representations

double homomorphism_defect(const FiniteGroup& g, const std::vector<ComplexMatrix>& matrices) {
  if (static_cast<int>(matrices.size()) != g.order()) {
    throw DimensionMismatch("representation needs one matrix per group element");
  }
  const Eigen::Index d = matrices.front().rows();
  double defect = 0.0;
  for (const auto& m : matrices) {
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("representation matrices differ in shape");
    if (!all_finite(m)) throw InputError("representation has non-finite entries");
    defect = std::max(defect, (m.adjoint() * m - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  defect = std::max(defect, (matrices[static_cast<std::size_t>(g.identity())] -
                             ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const ComplexMatrix diff = matrices[static_cast<std::size_t>(x)] * matrices[static_cast<std::size_t>(y)] -
                                 matrices[static_cast<std::size_t>(g.mul(x, y))];
      defect = std::max(defect, diff.cwiseAbs().maxCoeff());
    }
  return defect;
}

UnitaryRep::UnitaryRep(GroupPtr group, std::vector<ComplexMatrix> matrices, double tol)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (!group_) throw InputError("UnitaryRep: null group");
  if (matrices_.empty()) throw DimensionMismatch("UnitaryRep: no matrices");
  dim_ = matrices_.front().rows();
  const double defect = homomorphism_defect(*group_, matrices_);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "U(x)U(y) = U(xy), unitarity and U(e) = I violated by " << defect
        << " (a projective representation is not a UnitaryRep)";
    throw ValidationError("rep_tol", msg.str());
  }
}

ComplexVector UnitaryRep::character() const {
  ComplexVector chi(group_->order());
  for (int x = 0; x < group_->order(); ++x) chi(x) = matrices_[static_cast<std::size_t>(x)].trace();
  return chi;
}

UnitaryRep trivial_rep(const GroupPtr& g, Eigen::Index dim) {
  return UnitaryRep(g, std::vector<ComplexMatrix>(static_cast<std::size_t>(g->order()),
                                                  ComplexMatrix::Identity(dim, dim)));
}

UnitaryRep regular_rep(const GroupPtr& g) {
  const int n = g->order();
  std::vector<ComplexMatrix> mats;
  mats.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int y = 0; y < n; ++y) m(g->mul(x, y), y) = 1.0;
    mats.push_back(std::move(m));
  }
  return UnitaryRep(g, std::move(mats));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  cc.class_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (cc.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = cc.count();
    cc.representatives.push_back(x);
    std::vector<int> members;
    for (int h = 0; h < g.order(); ++h) {
      const int y = g.conjugate(h, x);
      if (cc.class_of[static_cast<std::size_t>(y)] < 0) {
        cc.class_of[static_cast<std::size_t>(y)] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cc.members.push_back(std::move(members));
  }
  return cc;
}

HermitianOperator average_projector(const UnitaryRep& u) {
  ComplexMatrix p = ComplexMatrix::Zero(u.dim(), u.dim());
  for (const auto& m : u.matrices()) p += m;
  p /= static_cast<double>(u.group().order());
  return HermitianOperator(p);
}

UnitaryRep tensor_rep(const UnitaryRep& u, const UnitaryRep& v) {
  if (u.group_ptr() != v.group_ptr() && !u.group().same_table(v.group())) {
    throw DimensionMismatch("tensor_rep: representations of different groups");
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(u.matrices().size());
  for (int x = 0; x < u.group().order(); ++x) mats.push_back(kron(u(x), v(x)));
  return UnitaryRep(u.group_ptr(), std::move(mats));
}

UnitaryRep pullback(const UnitaryRep& quotient_rep, const QuotientGroup& q, const GroupPtr& ambient) {
  if (static_cast<int>(q.tau.size()) != ambient->order()) {
    throw DimensionMismatch("pullback: quotient map does not match ambient group");
  }
  std::vector<ComplexMatrix> mats;
  for (int x = 0; x < ambient->order(); ++x) mats.push_back(quotient_rep(q.tau[static_cast<std::size_t>(x)]));
  return UnitaryRep(ambient, std::move(mats));
}

// ---------------------------------------------------------------------------
// Subgroups and quotients

SubgroupEmbedding::SubgroupEmbedding(GroupPtr subgroup, GroupPtr ambient, std::vector<int> inclusion)
    : subgroup_(std::move(subgroup)), ambient_(std::move(ambient)), inclusion_(std::move(inclusion)) {
  if (static_cast<int>(inclusion_.size()) != subgroup_->order()) {
    throw InputError("SubgroupEmbedding: inclusion size does not match subgroup order");
  }
  std::vector<char> hit(static_cast<std::size_t>(ambient_->order()), 0);
  for (int v : inclusion_) {
    if (v < 0 || v >= ambient_->order()) throw InputError("SubgroupEmbedding: index out of range");
    if (hit[static_cast<std::size_t>(v)]) throw InputError("SubgroupEmbedding: inclusion not injective");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (int a = 0; a < subgroup_->order(); ++a)
    for (int b = 0; b < subgroup_->order(); ++b)
      if (inclusion_[static_cast<std::size_t>(subgroup_->mul(a, b))] !=
          ambient_->mul(inclusion_[static_cast<std::size_t>(a)], inclusion_[static_cast<std::size_t>(b)])) {
        throw InputError("SubgroupEmbedding: inclusion is not a homomorphism");
      }
}

SubgroupEmbedding SubgroupEmbedding::from_elements(const GroupPtr& ambient, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = static_cast<int>(elements.size());
  auto position = [&](int v) {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) throw InputError("subgroup elements are not closed under multiplication");
    return static_cast<int>(it - elements.begin());
  };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(ambient->label(elements[static_cast<std::size_t>(a)]));
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          position(ambient->mul(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
  }
  auto sub = std::make_shared<const FiniteGroup>(std::move(table), std::move(labels), ambient->name() + "-sub");
  return SubgroupEmbedding(sub, ambient, std::move(elements));
}

bool SubgroupEmbedding::is_normal() const {
  std::vector<char> in(static_cast<std::size_t>(ambient_->order()), 0);
  for (int v : inclusion_) in[static_cast<std::size_t>(v)] = 1;
  for (int g = 0; g < ambient_->order(); ++g)
    for (int h : inclusion_)
      if (!in[static_cast<std::size_t>(ambient_->conjugate(g, h))]) return false;
  return true;
}

QuotientGroup quotient_group(const SubgroupEmbedding& emb) {
  if (!emb.is_normal()) throw InputError("quotient_group: subgroup is not normal");
  const FiniteGroup& g = *emb.ambient();
  std::vector<int> tau(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (tau[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : emb.inclusion()) tau[static_cast<std::size_t>(g.mul(x, h))] = id;
  }
  const int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(g.label(reps[static_cast<std::size_t>(a)]) + "N");
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          tau[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
  }
  auto q = std::make_shared<const FiniteGroup>(std::move(table), std::move(labels), g.name() + "/N");
  return {q, std::move(tau)};
}

// ---------------------------------------------------------------------------
// Characters and built-in irreps

std::vector<UnitaryRep> characters_of_abelian(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  if (!g.is_abelian()) throw InputError("characters_of_abelian: group " + g.name() + " is not abelian");
  const int n = g.order();
  long exponent = 1;
  for (int x = 0; x < n; ++x) exponent = std::lcm(exponent, static_cast<long>(g.element_order(x)));
  const auto& gens = g.generators();

  // Exponents a_s with chi(s) = exp(2 pi i a_s / exponent); a_s * ord(s) = 0 mod exponent.
  std::vector<int> counter(gens.size(), 0);
  std::vector<UnitaryRep> out;
  while (true) {
    std::vector<long> k(static_cast<std::size_t>(n), -1);
    k[static_cast<std::size_t>(g.identity())] = 0;
    std::queue<int> queue;
    queue.push(g.identity());
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const int x = queue.front();
      queue.pop();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const long step = exponent / g.element_order(gens[s]);
        const long val = (k[static_cast<std::size_t>(x)] + counter[s] * step) % exponent;
        const int y = g.mul(x, gens[s]);
        if (k[static_cast<std::size_t>(y)] < 0) {
          k[static_cast<std::size_t>(y)] = val;
          queue.push(y);
        } else if (k[static_cast<std::size_t>(y)] != val) {
          consistent = false;
          break;
        }
      }
    }
    for (int x = 0; x < n && consistent; ++x)
      for (int y = 0; y < n && consistent; ++y)
        consistent = k[static_cast<std::size_t>(g.mul(x, y))] ==
                     (k[static_cast<std::size_t>(x)] + k[static_cast<std::size_t>(y)]) % exponent;
    if (consistent) {
      std::vector<ComplexMatrix> mats;
      for (int x = 0; x < n; ++x) mats.push_back(scalar_matrix(root_of_unity(k[static_cast<std::size_t>(x)], exponent)));
      out.emplace_back(gp, std::move(mats));
    }
    // Odometer, last generator fastest.
    if (gens.empty()) break;
    bool carry = true;
    for (std::size_t pos = gens.size(); carry && pos > 0;) {
      --pos;
      if (++counter[pos] < g.element_order(gens[pos])) {
        carry = false;
      } else {
        counter[pos] = 0;
      }
    }
    if (carry) break;
  }
  if (static_cast<int>(out.size()) != n) {
    throw ValidationError("character_count", "found " + std::to_string(out.size()) +
                                                 " characters for an abelian group of order " +
                                                 std::to_string(n));
  }
  return out;
}

namespace {

std::vector<UnitaryRep> dihedral_irreps(const GroupPtr& gp) {
  const int n = gp->family_parameter();
  const int order = gp->order();
  auto one_dim = [&](Complex r, Complex s) {
    std::vector<ComplexMatrix> mats;
    for (int a = 0; a < order; ++a) {
      const int k = a % n, f = a / n;
      mats.push_back(scalar_matrix(std::pow(r, k) * std::pow(s, f)));
    }
    return UnitaryRep(gp, std::move(mats));
  };
  std::vector<UnitaryRep> out;
  out.push_back(one_dim(1.0, 1.0));
  out.push_back(one_dim(1.0, -1.0));
  if (n % 2 == 0) {
    out.push_back(one_dim(-1.0, 1.0));
    out.push_back(one_dim(-1.0, -1.0));
  }
  for (int h = 1; 2 * h < n; ++h) {
    ComplexMatrix r = ComplexMatrix::Zero(2, 2);
    r(0, 0) = root_of_unity(h, n);
    r(1, 1) = root_of_unity(n - h, n);
    ComplexMatrix s(2, 2);
    s << 0.0, 1.0, 1.0, 0.0;
    std::vector<ComplexMatrix> mats;
    for (int a = 0; a < order; ++a) {
      const int k = a % n, f = a / n;
      ComplexMatrix m = ComplexMatrix::Identity(2, 2);
      for (int i = 0; i < k; ++i) m = m * r;
      if (f == 1) m = m * s;
      mats.push_back(m);
    }
    out.emplace_back(gp, std::move(mats));
  }
  return out;
}

std::vector<UnitaryRep> quaternion_irreps(const GroupPtr& gp) {
  std::vector<UnitaryRep> out;
  // One-dimensional reps factor through Q8/{+-1} = Z2 x Z2.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double si = a ? -1.0 : 1.0;
      const double sj = b ? -1.0 : 1.0;
      const double values[8] = {1.0, 1.0, si, si, sj, sj, si * sj, si * sj};
      std::vector<ComplexMatrix> mats;
      for (double v : values) mats.push_back(scalar_matrix(v));
      out.emplace_back(gp, std::move(mats));
    }
  out.emplace_back(gp, quaternion_matrices());
  return out;
}

}  // namespace

std::vector<UnitaryRep> builtin_irreps(const GroupPtr& gp) {
  switch (gp->family()) {
    case FiniteGroup::Family::Cyclic:
      return characters_of_abelian(gp);
    case FiniteGroup::Family::Dihedral:
      if (gp->is_abelian()) return characters_of_abelian(gp);
      return dihedral_irreps(gp);
    case FiniteGroup::Family::Quaternion:
      return quaternion_irreps(gp);
    case FiniteGroup::Family::Product: {
      const auto& f = gp->factors();
      const auto left = builtin_irreps(f[0]);
      const auto right = builtin_irreps(f[1]);
      const int nh = f[1]->order();
      std::vector<UnitaryRep> out;
      for (const auto& a : left)
        for (const auto& b : right) {
          std::vector<ComplexMatrix> mats;
          for (int x = 0; x < gp->order(); ++x) mats.push_back(kron(a(x / nh), b(x % nh)));
          out.emplace_back(gp, std::move(mats));
        }
      return out;
    }
    case FiniteGroup::Family::Custom:
      if (gp->is_abelian()) return characters_of_abelian(gp);
      break;
  }
  throw InputError("no built-in irreducible representations for group " + gp->name());
}

}  // namespace cq
