#include "edl/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace edl {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "F") return Family::F;
  if (s == "G") return Family::G;
  if (s == "BC") return Family::BC;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

RootFamily canonical_family(RootFamily f) {
  const int n = f.rank;
  switch (f.family) {
    case Family::A:
      if (n >= 1) return f;
      break;
    case Family::B:
      if (n >= 2) return f;
      if (n == 1) return {Family::A, 1};
      break;
    case Family::C:
      if (n >= 3) return f;
      if (n == 2) return {Family::B, 2};
      if (n == 1) return {Family::A, 1};
      break;
    case Family::D:
      if (n >= 4) return f;
      if (n == 3) return {Family::A, 3};
      break;
    case Family::E:
      if (n >= 6 && n <= 8) return f;
      break;
    case Family::F:
      if (n == 4) return f;
      break;
    case Family::G:
      if (n == 2) return f;
      break;
    case Family::BC:
      if (n >= 1) return f;
      break;
  }
  throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                              to_string(f.family));
}

Rat RootSystem::inner(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  return metric_scale_ * dot(u, v);
}

Rat RootSystem::max_norm_sq() const {
  Rat m = 0;
  for (const auto& r : simple_) m = std::max(m, r.norm_sq);
  return m;
}

namespace {

std::vector<Rat> basis_vector(int dim, int i) {
  std::vector<Rat> v(dim, 0);
  v[i] = 1;
  return v;
}

struct FamilyData {
  int ambient;
  Rat scale;
  std::vector<std::vector<Rat>> simple;
  std::vector<int> degrees;
  Int center;
};

FamilyData family_data(RootFamily f) {
  const int n = f.rank;
  FamilyData d;
  switch (f.family) {
    case Family::A: {
      d.ambient = n + 1;
      d.scale = 1;
      for (int i = 0; i < n; ++i) {
        auto v = basis_vector(n + 1, i);
        v[i + 1] = -1;
        d.simple.push_back(v);
      }
      for (int i = 2; i <= n + 1; ++i) d.degrees.push_back(i);
      d.center = n + 1;
      break;
    }
    case Family::B: {
      d.ambient = n;
      d.scale = 1;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = basis_vector(n, i);
        v[i + 1] = -1;
        d.simple.push_back(v);
      }
      d.simple.push_back(basis_vector(n, n - 1));
      for (int i = 1; i <= n; ++i) d.degrees.push_back(2 * i);
      d.center = 2;
      break;
    }
    case Family::C: {
      d.ambient = n;
      d.scale = Rat(1, 2);
      for (int i = 0; i + 1 < n; ++i) {
        auto v = basis_vector(n, i);
        v[i + 1] = -1;
        d.simple.push_back(v);
      }
      auto v = basis_vector(n, n - 1);
      v[n - 1] = 2;
      d.simple.push_back(v);
      for (int i = 1; i <= n; ++i) d.degrees.push_back(2 * i);
      d.center = 2;
      break;
    }
    case Family::D: {
      d.ambient = n;
      d.scale = 1;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = basis_vector(n, i);
        v[i + 1] = -1;
        d.simple.push_back(v);
      }
      auto v = basis_vector(n, n - 2);
      v[n - 1] = 1;
      d.simple.push_back(v);
      for (int i = 1; i <= n - 1; ++i) d.degrees.push_back(2 * i);
      d.degrees.push_back(n);
      std::sort(d.degrees.begin(), d.degrees.end());
      d.center = 4;
      break;
    }
    case Family::E: {
      // Bourbaki realization inside R^8; E6 and E7 take the first 6 or 7
      // simple roots of E8.
      d.ambient = 8;
      d.scale = 1;
      std::vector<Rat> a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      d.simple.push_back(a1);
      auto a2 = basis_vector(8, 0);
      a2[1] = 1;
      d.simple.push_back(a2);
      for (int i = 0; i + 1 < 7; ++i) {
        auto v = basis_vector(8, i + 1);
        v[i] = -1;
        d.simple.push_back(v);
      }
      d.simple.resize(n);
      if (n == 6) {
        d.degrees = {2, 5, 6, 8, 9, 12};
        d.center = 3;
      } else if (n == 7) {
        d.degrees = {2, 6, 8, 10, 12, 14, 18};
        d.center = 2;
      } else {
        d.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        d.center = 1;
      }
      break;
    }
    case Family::F: {
      d.ambient = 4;
      d.scale = 1;
      auto a1 = basis_vector(4, 1);
      a1[2] = -1;
      auto a2 = basis_vector(4, 2);
      a2[3] = -1;
      auto a3 = basis_vector(4, 3);
      std::vector<Rat> a4 = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
      d.simple = {a1, a2, a3, a4};
      d.degrees = {2, 6, 8, 12};
      d.center = 1;
      break;
    }
    case Family::G: {
      d.ambient = 3;
      d.scale = Rat(1, 3);
      std::vector<Rat> a1 = {1, -1, 0};
      std::vector<Rat> a2 = {-2, 1, 1};
      d.simple = {a1, a2};
      d.degrees = {2, 6};
      d.center = 1;
      break;
    }
    case Family::BC:
      throw std::invalid_argument("BC is not reduced; use build_nonreduced");
  }
  return d;
}

int positive_count(RootFamily f) {
  const int n = f.rank;
  switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::BC: break;
  }
  throw std::invalid_argument("positive_count: bad family");
}

}  // namespace

RootSystem build_root_system(RootFamily requested) {
  const RootFamily f = canonical_family(requested);
  if (f.family == Family::BC)
    throw std::invalid_argument("BC is not reduced; use build_nonreduced");
  FamilyData data = family_data(f);
  const int rank = f.rank;

  RootSystem rs;
  rs.family_ = f;
  rs.rank_ = rank;
  rs.ambient_dim_ = data.ambient;
  rs.metric_scale_ = data.scale;
  rs.degrees_ = data.degrees;
  rs.center_order_ = data.center;
  rs.weyl_order_ = 1;
  for (int d : data.degrees) rs.weyl_order_ *= d;

  for (int i = 0; i < rank; ++i) {
    RootVector r;
    r.coeffs.assign(rank, 0);
    r.coeffs[i] = 1;
    r.embedding = data.simple[i];
    r.norm_sq = rs.inner(r.embedding, r.embedding);
    rs.simple_.push_back(std::move(r));
  }

  // Reflection closure in simple-root coordinates; the Cartan pairing
  // <beta, alpha_i^vee> is an exact integer.  Worklist: each root is
  // reflected in every simple root exactly once.
  std::map<std::vector<int>, std::vector<Rat>> roots;
  std::vector<std::pair<std::vector<int>, std::vector<Rat>>> work;
  for (const auto& s : rs.simple_) {
    roots[s.coeffs] = s.embedding;
    work.emplace_back(s.coeffs, s.embedding);
  }
  while (!work.empty()) {
    auto [coeffs, emb] = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      const auto& alpha = rs.simple_[i];
      Rat c = 2 * rs.inner(emb, alpha.embedding) / alpha.norm_sq;
      Int ci = to_integer(c);
      if (ci == 0) continue;
      auto new_coeffs = coeffs;
      new_coeffs[i] -= static_cast<int>(ci);
      if (roots.count(new_coeffs)) continue;
      auto new_emb = emb;
      for (int j = 0; j < data.ambient; ++j)
        new_emb[j] -= c * alpha.embedding[j];
      roots.emplace(new_coeffs, new_emb);
      work.emplace_back(std::move(new_coeffs), std::move(new_emb));
    }
  }

  for (auto& [coeffs, emb] : roots) {
    bool pos = true, neg = true;
    for (int c : coeffs) {
      if (c > 0) neg = false;
      if (c < 0) pos = false;
    }
    if (!pos && !neg)
      throw std::logic_error("reflection closure produced a mixed-sign vector");
    if (!pos) continue;
    RootVector r;
    r.coeffs = coeffs;
    r.embedding = emb;
    r.norm_sq = rs.inner(emb, emb);
    rs.positive_.push_back(std::move(r));
  }

  if (static_cast<int>(rs.positive_.size()) != positive_count(f))
    throw std::logic_error("positive root count mismatch for " + to_string(f.family) +
                           std::to_string(rank));

  // Highest root: dominates every positive root componentwise.
  const RootVector* best = nullptr;
  for (const auto& r : rs.positive_) {
    bool dominates = true;
    for (const auto& o : rs.positive_) {
      for (int i = 0; i < rank; ++i)
        if (r.coeffs[i] < o.coeffs[i]) { dominates = false; break; }
      if (!dominates) break;
    }
    if (dominates) { best = &r; break; }
  }
  if (!best) throw std::logic_error("no componentwise-highest root found");
  rs.highest_ = *best;

  if (rs.max_norm_sq() != 2)
    throw std::logic_error("long-root normalization broken for " + to_string(f.family));
  return rs;
}

std::vector<Rat> coroot(const RootSystem&, const RootVector& alpha) {
  if (alpha.norm_sq == 0) throw std::domain_error("coroot of the zero vector");
  std::vector<Rat> cr = alpha.embedding;
  Rat f = Rat(2) / alpha.norm_sq;
  for (auto& x : cr) x *= f;
  return cr;
}

Int weyl_order_by_enumeration(const RootSystem& rs) {
  if (rs.rank() > 6)
    throw std::domain_error("weyl_order_by_enumeration: rank cap is 6");

  // All roots (positive and negative), indexed; each simple reflection is a
  // permutation of this list.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> all;
  for (const auto& r : rs.positive_roots()) {
    all.push_back(r.coeffs);
    std::vector<int> neg(r.coeffs.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -r.coeffs[i];
    all.push_back(std::move(neg));
  }
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

  const int rank = rs.rank();
  const size_t nroots = all.size();
  std::vector<std::vector<uint16_t>> gens;
  for (int i = 0; i < rank; ++i) {
    const auto& alpha = rs.simple_roots()[i];
    std::vector<uint16_t> perm(nroots);
    for (size_t j = 0; j < nroots; ++j) {
      // embed coefficients, reflect, re-derive coefficients
      std::vector<Rat> emb(rs.ambient_dim(), 0);
      for (int a = 0; a < rank; ++a)
        for (int c = 0; c < rs.ambient_dim(); ++c)
          emb[c] += Rat(all[j][a]) * rs.simple_roots()[a].embedding[c];
      Rat cf = 2 * rs.inner(emb, alpha.embedding) / alpha.norm_sq;
      auto coeffs = all[j];
      coeffs[i] -= static_cast<int>(to_integer(cf));
      perm[j] = static_cast<uint16_t>(index.at(coeffs));
    }
    gens.push_back(std::move(perm));
  }

  auto key = [&](const std::vector<uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(uint16_t));
  };

  std::vector<uint16_t> id(nroots);
  for (size_t i = 0; i < nroots; ++i) id[i] = static_cast<uint16_t>(i);
  std::unordered_set<std::string> seen{key(id)};
  std::vector<std::vector<uint16_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<uint16_t>> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        std::vector<uint16_t> wg(nroots);
        for (size_t j = 0; j < nroots; ++j) wg[j] = w[g[j]];
        if (seen.insert(key(wg)).second) next.push_back(std::move(wg));
      }
    }
    frontier = std::move(next);
  }
  return Int(seen.size());
}

RelationReport verify_relation(const RootSystem& rs) {
  Int rhs = rs.center_order() * factorial(static_cast<unsigned>(rs.rank()));
  for (int c : rs.highest_root().coeffs) rhs *= c;
  return {rs.weyl_order(), rhs, rs.weyl_order() == rhs};
}

Rat coroot_gram_det(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
  std::vector<std::vector<Rat>> coroots;
  for (const auto& s : rs.simple_roots()) coroots.push_back(coroot(rs, s));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = rs.inner(coroots[i], coroots[j]);
  return det(gram);
}

double coroot_fundamental_volume(const RootSystem& rs) {
  return std::sqrt(to_double(coroot_gram_det(rs)));
}

std::string to_string(Orbit o) {
  switch (o) {
    case Orbit::Long: return "long";
    case Orbit::Short: return "short";
    case Orbit::DoubleLong: return "2*long";
    case Orbit::DoubleShort: return "2*short";
  }
  return "?";
}

const Rat& MultiplicityFunction::operator[](Orbit o) const {
  switch (o) {
    case Orbit::Long: return long_orbit;
    case Orbit::Short: return short_orbit;
    case Orbit::DoubleLong: return double_long;
    case Orbit::DoubleShort: return double_short;
  }
  throw std::logic_error("bad orbit");
}

Rat& MultiplicityFunction::operator[](Orbit o) {
  return const_cast<Rat&>(static_cast<const MultiplicityFunction&>(*this)[o]);
}

NonReducedRootSystem build_nonreduced(RootFamily base_family, MultiplicityFunction mult) {
  for (Orbit o : {Orbit::Long, Orbit::Short, Orbit::DoubleLong, Orbit::DoubleShort})
    if (mult[o] < 0) throw std::invalid_argument("negative multiplicity");

  NonReducedRootSystem nr;
  nr.multiplicity = std::move(mult);
  if (base_family.family != Family::BC) {
    if (nr.multiplicity.double_long != 0 || nr.multiplicity.double_short != 0)
      throw std::invalid_argument("doubled multiplicity on a reduced family");
    nr.base = build_root_system(base_family);
    return nr;
  }

  const int n = canonical_family(base_family).rank;
  nr.base = build_root_system(n == 1 ? RootFamily{Family::A, 1} : RootFamily{Family::B, n});
  // Doubles exist exactly for the base orbit whose doubles stay in the
  // lattice: the short roots e_i of B_n, or the single root of A1.
  if (n == 1) {
    if (nr.multiplicity.double_short != 0)
      throw std::invalid_argument("BC1 has no short orbit");
  } else {
    if (nr.multiplicity.double_long != 0)
      throw std::invalid_argument("BC_n (n>1) doubles only the short orbit");
  }
  for (const auto& r : nr.base.positive_roots()) {
    bool doubles = (n == 1) ? true : !nr.base.is_long(r);
    if (!doubles) continue;
    RootVector d;
    d.coeffs.resize(r.coeffs.size());
    for (size_t i = 0; i < r.coeffs.size(); ++i) d.coeffs[i] = 2 * r.coeffs[i];
    d.embedding = r.embedding;
    for (auto& x : d.embedding) x *= 2;
    d.norm_sq = r.norm_sq * 4;
    nr.doubled.push_back(std::move(d));
  }
  return nr;
}

std::vector<OrbitRoot> positive_orbit_roots(const NonReducedRootSystem& R) {
  std::vector<OrbitRoot> out;
  for (const auto& r : R.base.positive_roots())
    out.push_back({&r, R.base.is_long(r) ? Orbit::Long : Orbit::Short});
  const bool rank1 = R.base.rank() == 1;
  for (const auto& r : R.doubled)
    out.push_back({&r, rank1 ? Orbit::DoubleLong : Orbit::DoubleShort});
  return out;
}

RootVector full_highest_root(const NonReducedRootSystem& R) {
  std::vector<const RootVector*> all;
  for (const auto& r : R.base.positive_roots()) all.push_back(&r);
  for (const auto& r : R.doubled) all.push_back(&r);
  for (const auto* cand : all) {
    bool dominates = true;
    for (const auto* o : all) {
      for (size_t i = 0; i < cand->coeffs.size(); ++i)
        if (cand->coeffs[i] < o->coeffs[i]) { dominates = false; break; }
      if (!dominates) break;
    }
    if (dominates) return *cand;
  }
  throw std::logic_error("no componentwise-highest root in the full system");
}

}  // namespace edl
