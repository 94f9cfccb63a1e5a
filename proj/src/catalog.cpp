#include "holobrace/catalog.hpp"

#include <numeric>

namespace holobrace {

GroupSpec GroupSpec::cyclic(unsigned n, std::string name) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  s.names = {std::move(name)};
  s.label = "C" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::dihedral(unsigned n, std::string rot, std::string refl) {
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = n;
  s.names = {std::move(rot), std::move(refl)};
  s.label = "D" + std::to_string(2 * n);
  return s;
}

GroupSpec GroupSpec::direct(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Direct;
  for (std::size_t i = 0; i < factors.size(); ++i) s.label += (i ? "x" : "") + factors[i].label;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::semidirect(GroupSpec base, GroupSpec acting, std::vector<std::vector<Elem>> action) {
  GroupSpec s;
  s.kind = Kind::Semidirect;
  s.label = "(" + base.label + "):" + acting.label;
  s.factors = {std::move(base), std::move(acting)};
  s.action = std::move(action);
  return s;
}

namespace {

std::string power_word(const std::string& name, unsigned k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

std::string join_words(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + " " + b;
}

FiniteGroup build_cyclic(const GroupSpec& s) {
  const unsigned n = s.n;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  std::vector<Elem> t(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : power_word(s.names[0], i);
    for (unsigned j = 0; j < n; ++j) t[std::size_t(i) * n + j] = (i + j) % n;
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(std::move(t), s.label, std::move(gens), std::move(labels));
}

FiniteGroup build_dihedral(const GroupSpec& s) {
  // r^i s^j  <->  2i + j
  const unsigned n = s.n;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dihedral group with no rotations");
  const std::size_t m = 2 * std::size_t(n);
  std::vector<Elem> t(m * m);
  std::vector<std::string> labels(m);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < 2; ++j) {
      const Elem x = 2 * i + j;
      std::string w = power_word(s.names[0], i);
      if (j) w = w.empty() ? s.names[1] : w + " " + s.names[1];
      labels[x] = w.empty() ? "1" : w;
      for (unsigned k = 0; k < n; ++k) {
        for (unsigned l = 0; l < 2; ++l) {
          const unsigned rot = j ? (i + n - k) % n : (i + k) % n;
          t[x * m + 2 * k + l] = Elem(2 * rot + ((j + l) & 1));
        }
      }
    }
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(2);
  gens.push_back(1);
  return FiniteGroup::from_table(std::move(t), s.label, std::move(gens), std::move(labels));
}

FiniteGroup build_direct(const GroupSpec& s) {
  if (s.factors.empty()) return build_cyclic(GroupSpec::cyclic(1));
  FiniteGroup acc = build(s.factors[0]);
  for (std::size_t f = 1; f < s.factors.size(); ++f) {
    const FiniteGroup rhs = build(s.factors[f]);
    const std::size_t a = acc.order(), b = rhs.order(), m = a * b;
    std::vector<Elem> t(m * m);
    std::vector<std::string> labels(m);
    for (Elem x = 0; x < m; ++x) {
      labels[x] = join_words(acc.element_label(Elem(x / b)), rhs.element_label(Elem(x % b)));
      for (Elem y = 0; y < m; ++y)
        t[std::size_t(x) * m + y] = Elem(acc.mul(Elem(x / b), Elem(y / b)) * b + rhs.mul(Elem(x % b), Elem(y % b)));
    }
    std::vector<Elem> gens;
    for (Elem g : acc.generators()) gens.push_back(Elem(g * b + rhs.identity()));
    for (Elem g : rhs.generators()) gens.push_back(Elem(acc.identity() * b + g));
    acc = FiniteGroup::from_table(std::move(t), s.label, std::move(gens), std::move(labels));
  }
  return acc;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<Elem>& perm) {
  if (perm.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Elem v : perm) {
    if (v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  return is_homomorphism(g, g, GroupMorphism{perm});
}

FiniteGroup build_semidirect(const GroupSpec& s) {
  const FiniteGroup base = build(s.factors.at(0));
  const FiniteGroup acting = build(s.factors.at(1));
  const auto agens = acting.generators();
  if (s.action.size() != agens.size())
    throw Error(ErrorKind::InvalidAction, "one base automorphism is required per acting generator");
  for (const auto& perm : s.action)
    if (!is_automorphism(base, perm))
      throw Error(ErrorKind::InvalidAction, "action image is not an automorphism of " + base.label());

  // Extend generator images to theta: acting -> Aut(base), theta(x g) = theta(x) o theta(g).
  const std::size_t nb = base.order(), na = acting.order();
  std::vector<std::vector<Elem>> theta(na);
  std::vector<Elem> identity_perm(nb);
  std::iota(identity_perm.begin(), identity_perm.end(), Elem{0});
  theta[acting.identity()] = identity_perm;
  std::vector<Elem> queue{acting.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t gi = 0; gi < agens.size(); ++gi) {
      const Elem y = acting.mul(x, agens[gi]);
      std::vector<Elem> composed(nb);
      for (Elem b = 0; b < nb; ++b) composed[b] = theta[x][s.action[gi][b]];
      if (theta[y].empty()) {
        theta[y] = std::move(composed);
        queue.push_back(y);
      } else if (theta[y] != composed) {
        throw Error(ErrorKind::InvalidAction, "action is not a homomorphism from " + acting.label());
      }
    }
  }

  // (b1, a1)(b2, a2) = (b1 theta(a1)(b2), a1 a2)  <->  b * |A| + a
  const std::size_t m = nb * na;
  std::vector<Elem> t(m * m);
  std::vector<std::string> labels(m);
  for (Elem x = 0; x < m; ++x) {
    const Elem b1 = Elem(x / na), a1 = Elem(x % na);
    labels[x] = join_words(base.element_label(b1), acting.element_label(a1));
    for (Elem y = 0; y < m; ++y) {
      const Elem b2 = Elem(y / na), a2 = Elem(y % na);
      t[std::size_t(x) * m + y] = Elem(base.mul(b1, theta[a1][b2]) * na + acting.mul(a1, a2));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : base.generators()) gens.push_back(Elem(g * na + acting.identity()));
  for (Elem g : agens) gens.push_back(Elem(base.identity() * na + g));
  return FiniteGroup::from_table(std::move(t), s.label, std::move(gens), std::move(labels));
}

std::uint64_t multiplicative_order(std::uint64_t t, std::uint64_t m) {
  if (std::gcd(t, m) != 1) return 0;
  std::uint64_t k = 1;
  for (std::uint64_t x = t % m; x != 1 % m; x = x * t % m) ++k;
  return k;
}

}  // namespace

FiniteGroup build(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return build_cyclic(spec);
    case GroupSpec::Kind::Dihedral: return build_dihedral(spec);
    case GroupSpec::Kind::Direct: return build_direct(spec);
    case GroupSpec::Kind::Semidirect: return build_semidirect(spec);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group spec kind");
}

std::vector<Elem> power_map(unsigned n, unsigned t) {
  std::vector<Elem> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = Elem((std::uint64_t(i) * t) % n);
  return perm;
}

FiniteGroup build_2p2(Variant2p2 variant, unsigned p) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  const std::string label = type_label(variant, p);
  switch (variant) {
    case Variant2p2::Cyclic:
      return build(GroupSpec::cyclic(2 * p * p, "a")).relabeled(label, {1});
    case Variant2p2::Dihedral:
      return build(GroupSpec::dihedral(p * p)).relabeled(label, {2, 1});
    case Variant2p2::CpxC2p: {
      // a^i b^j c^k <-> (i p + j) 2 + k ; generators a, bc
      auto g = build(GroupSpec::direct(
          {GroupSpec::cyclic(p, "a"), GroupSpec::cyclic(p, "b"), GroupSpec::cyclic(2, "c")}));
      return g.relabeled(label, {2 * p, 3});
    }
    case Variant2p2::CpxD2p: {
      // c^k r^i s^j <-> 2p k + 2 i + j ; generators cr, s
      auto g = build(GroupSpec::direct({GroupSpec::cyclic(p, "c"), GroupSpec::dihedral(p)}));
      return g.relabeled(label, {2 * p + 2, 1});
    }
    case Variant2p2::CpCpC2: {
      // a^i b^j c^k <-> (i p + j) 2 + k ; c inverts <a, b>
      std::vector<Elem> inversion(p * p);
      for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) inversion[i * p + j] = ((p - i) % p) * p + (p - j) % p;
      auto g = build(GroupSpec::semidirect(
          GroupSpec::direct({GroupSpec::cyclic(p, "a"), GroupSpec::cyclic(p, "b")}),
          GroupSpec::cyclic(2, "c"), {inversion}));
      return g.relabeled(label, {2 * p, 2, 1});
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown variant");
}

FiniteGroup build_cyclic_semidirect(unsigned p, unsigned m, unsigned k) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (m != p * p && m != 2 * p * p)
    throw Error(ErrorKind::NoSuchTwist, "cyclic part must have order p^2 or 2p^2");
  if (k == 0 || (p * (p - 1)) % k != 0)
    throw Error(ErrorKind::NoSuchTwist, std::to_string(k) + " does not divide p(p-1)");
  unsigned t = 1;
  if (k > 1) {
    t = 0;
    for (unsigned c = 2; c < m && !t; ++c)
      if (multiplicative_order(c, m) == k) t = c;
    if (!t) throw Error(ErrorKind::NoSuchTwist, "no unit of order " + std::to_string(k));
  }
  auto g = k == 1 ? build(GroupSpec::cyclic(m, "x"))
                  : build(GroupSpec::semidirect(GroupSpec::cyclic(m, "x"), GroupSpec::cyclic(k, "y"), {power_map(m, t)}));
  return g.relabeled("C" + std::to_string(m) + ":C" + std::to_string(k), {g.generators().begin(), g.generators().end()});
}

}  // namespace holobrace
