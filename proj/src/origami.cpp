#include "windtree/origami.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "windtree/error.hpp"

namespace windtree {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void require_connected(const Origami& o) {
  if (!is_connected(o)) throw Error(ErrorKind::kNotConnected, "origami is not connected");
}

// Builds sigma with sigma(0) = target, sigma(g(x)) = h(sigma(x)) for (g, h) in
// {(r, r_image), (u, u_image)}. Returns an empty vector when inconsistent.
std::vector<int> propagate(const Origami& o, int target, const Permutation& r_image, const Permutation& u_image) {
  const int n = o.size();
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{0};
  sigma[0] = target;
  used[static_cast<std::size_t>(target)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    const int sx = sigma[static_cast<std::size_t>(x)];
    const std::pair<int, int> steps[] = {{o.r()(x), r_image(sx)}, {o.u()(x), u_image(sx)}};
    for (const auto& [y, sy] : steps) {
      int& slot = sigma[static_cast<std::size_t>(y)];
      if (slot == -1) {
        if (used[static_cast<std::size_t>(sy)]) return {};
        used[static_cast<std::size_t>(sy)] = 1;
        slot = sy;
        queue.push_back(y);
      } else if (slot != sy) {
        return {};
      }
    }
  }
  return sigma;
}

std::vector<Permutation> all_intertwiners(const Origami& o, const Permutation& r_image, const Permutation& u_image) {
  require_connected(o);
  std::vector<Permutation> out;
  for (int t = 0; t < o.size(); ++t) {
    auto sigma = propagate(o, t, r_image, u_image);
    if (!sigma.empty()) out.emplace_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Origami::Origami(Permutation r, Permutation u) : r_(std::move(r)), u_(std::move(u)) {
  if (r_.size() != u_.size()) {
    throw Error(ErrorKind::kSizeMismatch, "r and u act on different numbers of squares");
  }
  if (r_.size() == 0) throw Error(ErrorKind::kSizeMismatch, "origami needs at least one square");
}

Origami Origami::validate(int n, std::string_view r, std::string_view u) {
  if (n < 1) throw Error(ErrorKind::kSizeMismatch, "origami needs at least one square");
  return Origami(Permutation::parse(n, r), Permutation::parse(n, u));
}

Origami Origami::parse(std::string_view text) {
  int n = -1;
  std::string r_text;
  std::string u_text;
  bool have_r = false;
  bool have_u = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("r=") || line.starts_with("r =")) {
      r_text = std::string(trim(line.substr(line.find('=') + 1)));
      have_r = true;
    } else if (line.starts_with("u=") || line.starts_with("u =")) {
      u_text = std::string(trim(line.substr(line.find('=') + 1)));
      have_u = true;
    } else if (n < 0) {
      try {
        n = std::stoi(std::string(line));
      } catch (const std::exception&) {
        throw Error(ErrorKind::kParse, "expected the number of squares, got '" + std::string(line) + "'");
      }
    } else {
      throw Error(ErrorKind::kParse, "unexpected line '" + std::string(line) + "'");
    }
  }
  if (n < 0 || !have_r || !have_u) throw Error(ErrorKind::kParse, "origami text needs n, r= and u=");
  return validate(n, r_text, u_text);
}

std::string Origami::to_text() const {
  return std::to_string(size()) + "\nr=" + r_.cycle_string() + "\nu=" + u_.cycle_string() + "\n";
}

Origami Origami::relabeled(const Permutation& pi) const {
  return Origami(r_.conjugate_by(pi), u_.conjugate_by(pi));
}

bool is_connected(const Origami& o) {
  const int n = o.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    // Forward images suffice: the monoid generated by r, u in a finite group is a group.
    for (int y : {o.r()(x), o.u()(x)}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

SingularityProfile::SingularityProfile(std::vector<int> orders, bool allow_marked_points)
    : orders_(std::move(orders)) {
  for (int d : orders_) {
    if (d < -1) throw Error(ErrorKind::kDomainViolation, "singularity order below -1");
    if (d == 0 && !allow_marked_points) {
      throw Error(ErrorKind::kDomainViolation, "order-0 entries need allow_marked_points");
    }
  }
  std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

SingularityProfile SingularityProfile::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && (body.front() == 'H' || body.front() == 'Q')) {
    body.remove_prefix(1);
    body = trim(body);
    if (body.empty() || body.front() != '(' || body.back() != ')') {
      throw Error(ErrorKind::kParse, "malformed stratum label '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> orders;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (item.empty()) continue;
    try {
      const auto caret = item.find('^');
      const int order = std::stoi(std::string(item.substr(0, caret)));
      const int mult = caret == std::string_view::npos ? 1 : std::stoi(std::string(item.substr(caret + 1)));
      if (mult < 0) throw Error(ErrorKind::kParse, "negative multiplicity");
      orders.insert(orders.end(), static_cast<std::size_t>(mult), order);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kParse, "malformed profile entry '" + std::string(item) + "'");
    }
  }
  return SingularityProfile(std::move(orders));
}

int SingularityProfile::total_order() const {
  int s = 0;
  for (int d : orders_) s += d;
  return s;
}

int SingularityProfile::count(int order) const {
  return static_cast<int>(std::count(orders_.begin(), orders_.end(), order));
}

std::string SingularityProfile::str() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size();) {
    std::size_t j = i;
    while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(orders_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string SingularityProfile::label(ProfileKind kind) const {
  return std::string(kind == ProfileKind::kAbelian ? "H(" : "Q(") + str() + ")";
}

SingularityProfile singularity_profile(const Origami& o) {
  const Permutation commutator = o.r() * o.u() * o.r().inverse() * o.u().inverse();
  std::vector<int> orders;
  for (int len : commutator.cycle_lengths()) {
    if (len > 1) orders.push_back(len - 1);
  }
  return SingularityProfile(std::move(orders));
}

int genus(const SingularityProfile& p, ProfileKind kind) {
  const int shift = kind == ProfileKind::kAbelian ? 2 : 4;
  const int total = p.total_order() + shift;
  if (total < 0 || total % shift != 0) {
    throw Error(ErrorKind::kNonIntegralGenus, "profile " + p.label(kind) + " has no integral genus");
  }
  return total / shift;
}

int CylinderDecomposition::area() const {
  int a = 0;
  for (const auto& c : cylinders) a += c.width * c.height;
  return a;
}

Rational CylinderDecomposition::modulus_sum() const {
  Rational s;
  for (const auto& c : cylinders) s += Rational(c.height, c.width);
  return s;
}

std::vector<Cylinder> CylinderDecomposition::sorted() const {
  auto out = cylinders;
  std::sort(out.begin(), out.end());
  return out;
}

CylinderDecomposition horizontal_cylinders(const Origami& o) {
  const auto rows = o.r().cycles();
  std::vector<int> row_of(static_cast<std::size_t>(o.size()));
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (int i : rows[k]) row_of[static_cast<std::size_t>(i)] = static_cast<int>(k);

  const std::size_t nrows = rows.size();
  std::vector<int> above(nrows, -1);
  std::vector<char> has_below(nrows, 0);
  for (std::size_t k = 0; k < nrows; ++k) {
    const bool rigid = std::all_of(rows[k].begin(), rows[k].end(),
                                   [&](int i) { return o.u()(o.r()(i)) == o.r()(o.u()(i)); });
    if (!rigid) continue;
    above[k] = row_of[static_cast<std::size_t>(o.u()(rows[k].front()))];
    has_below[static_cast<std::size_t>(above[k])] = 1;
  }

  CylinderDecomposition out;
  std::vector<char> done(nrows, 0);
  auto stack_from = [&](std::size_t bottom) {
    int height = 0;
    for (int k = static_cast<int>(bottom); k != -1 && !done[static_cast<std::size_t>(k)];
         k = above[static_cast<std::size_t>(k)]) {
      done[static_cast<std::size_t>(k)] = 1;
      ++height;
    }
    out.cylinders.push_back({static_cast<int>(rows[bottom].size()), height});
  };
  for (std::size_t k = 0; k < nrows; ++k)
    if (!has_below[k]) stack_from(k);
  // What is left are closed loops of rigid rows (no singularity on their boundaries).
  for (std::size_t k = 0; k < nrows; ++k)
    if (!done[k]) stack_from(k);
  return out;
}

std::vector<Permutation> translation_automorphisms(const Origami& o) {
  return all_intertwiners(o, o.r(), o.u());
}

std::vector<Permutation> antiautomorphisms(const Origami& o) {
  return all_intertwiners(o, o.r().inverse(), o.u().inverse());
}

bool is_translation_automorphism(const Origami& o, const Permutation& sigma) {
  return sigma.size() == o.size() && sigma * o.r() == o.r() * sigma && sigma * o.u() == o.u() * sigma;
}

bool is_antiautomorphism(const Origami& o, const Permutation& sigma) {
  return sigma.size() == o.size() && sigma * o.r() == o.r().inverse() * sigma &&
         sigma * o.u() == o.u().inverse() * sigma;
}

std::vector<int> quotient_projection(const Origami& o, const Permutation& sigma) {
  if (!is_translation_automorphism(o, sigma)) {
    throw Error(ErrorKind::kNotAutomorphism, "permutation does not commute with r and u");
  }
  if (!sigma.is_involution() || sigma.has_fixed_point()) {
    throw Error(ErrorKind::kNotFixedPointFree, "quotient needs a fixed-point-free involution");
  }
  std::vector<int> label(static_cast<std::size_t>(o.size()), -1);
  int next = 0;
  for (int i = 0; i < o.size(); ++i) {
    if (label[static_cast<std::size_t>(i)] != -1) continue;
    label[static_cast<std::size_t>(i)] = next;
    label[static_cast<std::size_t>(sigma(i))] = next;
    ++next;
  }
  return label;
}

Origami quotient_by_translation_involution(const Origami& o, const Permutation& sigma) {
  const std::vector<int> label = quotient_projection(o, sigma);
  const int m = o.size() / 2;
  std::vector<int> r(static_cast<std::size_t>(m), -1);
  std::vector<int> u(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < o.size(); ++i) {
    const auto k = static_cast<std::size_t>(label[static_cast<std::size_t>(i)]);
    r[k] = label[static_cast<std::size_t>(o.r()(i))];
    u[k] = label[static_cast<std::size_t>(o.u()(i))];
  }
  return Origami(Permutation(std::move(r)), Permutation(std::move(u)));
}

Permutation push_through_quotient(const Origami& o, const Permutation& sigma, const Permutation& tau) {
  if (tau * sigma != sigma * tau) {
    throw Error(ErrorKind::kNotAutomorphism, "automorphism does not commute with the quotient involution");
  }
  const std::vector<int> label = quotient_projection(o, sigma);
  std::vector<int> image(static_cast<std::size_t>(o.size() / 2), -1);
  for (int i = 0; i < o.size(); ++i) {
    image[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] =
        label[static_cast<std::size_t>(tau(i))];
  }
  return Permutation(std::move(image));
}

}  // namespace windtree
