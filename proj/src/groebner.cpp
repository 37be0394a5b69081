#include "weylcoh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weylcoh/errors.hpp"

namespace weylcoh {
namespace {

struct ModTerm {
  std::size_t comp;
  WeylMonomial mono;
  Rational coef;
};

// Terms sorted ascending by the module order; the leading term is back().
using ModPoly = std::vector<ModTerm>;

struct Key {
  std::size_t comp;
  WeylMonomial mono;
};

struct KeyLess {
  const ModuleOrder* order;
  bool operator()(const Key& u, const Key& v) const {
    return order->compare(u.comp, u.mono, v.comp, v.mono) < 0;
  }
};

using KeyMap = std::map<Key, Rational, KeyLess>;

ModPoly from_map(KeyMap&& acc) {
  ModPoly p;
  p.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) p.push_back({k.comp, k.mono, c});
  return p;
}

ModPoly to_mod(const FreeElement& f, const ModuleOrder& order) {
  KeyMap acc(KeyLess{&order});
  for (std::size_t l = 0; l < f.rank(); ++l)
    for (const auto& [m, c] : f[l].terms()) acc.emplace(Key{l, m}, c);
  return from_map(std::move(acc));
}

FreeElement from_mod(const ModPoly& p, std::size_t n, std::size_t rank) {
  std::vector<TermMap> parts(rank);
  for (const auto& t : p) parts[t.comp].emplace(t.mono, t.coef);
  std::vector<WeylElement> comps;
  comps.reserve(rank);
  for (auto& part : parts) comps.push_back(WeylElement::from_terms(n, std::move(part)));
  FreeElement f(n, rank);
  for (std::size_t l = 0; l < rank; ++l) f[l] = std::move(comps[l]);
  return f;
}

// c * (x^a d^b) * g, sorted.
ModPoly left_mul(const WeylMonomial& t, const Rational& c, const ModPoly& g,
                 const ModuleOrder& order) {
  KeyMap acc(KeyLess{&order});
  TermMap tmp;
  for (const auto& term : g) {
    tmp.clear();
    accumulate_product(t, term.mono, c * term.coef, tmp);
    for (auto& [m, coef] : tmp) {
      auto [it, inserted] = acc.try_emplace(Key{term.comp, m}, coef);
      if (!inserted) it->second += coef;
    }
  }
  return from_map(std::move(acc));
}

// f - h, both ascending.
ModPoly subtract(const ModPoly& f, const ModPoly& h, const ModuleOrder& order) {
  ModPoly out;
  out.reserve(f.size() + h.size());
  auto i = f.begin();
  auto j = h.begin();
  while (i != f.end() || j != h.end()) {
    int cmp;  // sign of (f term) - (h term); the smaller one goes first
    if (i == f.end()) cmp = 1;
    else if (j == h.end()) cmp = -1;
    else cmp = order.compare(i->comp, i->mono, j->comp, j->mono);
    if (cmp > 0) {
      out.push_back({j->comp, j->mono, -j->coef});
      ++j;
    } else if (cmp < 0) {
      out.push_back(*i++);
    } else {
      Rational c = i->coef - j->coef;
      if (c != 0) out.push_back({i->comp, i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(ModPoly& p) {
  if (p.empty()) return;
  Rational lc = p.back().coef;
  if (lc == 1) return;
  for (auto& t : p) t.coef /= lc;
}

const ModTerm& lead(const ModPoly& p) { return p.back(); }

struct Reduction {
  ModPoly remainder;
  std::vector<TermMap> quotients;  // only filled when tracking
};

// Full reduction of p by basis; when track is set, records quotients so that
// p = sum quotients[l] * basis[l] + remainder.
Reduction reduce(ModPoly p, const std::vector<ModPoly>& basis, const ModuleOrder& order,
                 bool track, bool tail = true) {
  Reduction r;
  if (track) r.quotients.resize(basis.size());
  ModPoly rem_desc;
  while (!p.empty()) {
    const ModTerm& lt = lead(p);
    std::size_t pick = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const ModTerm& bl = lead(basis[k]);
      if (bl.comp == lt.comp && bl.mono.divides(lt.mono)) {
        pick = k;
        break;
      }
    }
    if (pick == basis.size()) {
      if (!tail) {
        rem_desc.insert(rem_desc.end(), p.rbegin(), p.rend());
        p.clear();
        break;
      }
      rem_desc.push_back(lt);
      p.pop_back();
      continue;
    }
    const ModTerm& bl = lead(basis[pick]);
    WeylMonomial t = lt.mono / bl.mono;
    Rational c = lt.coef / bl.coef;
    if (track) {
      auto [it, inserted] = r.quotients[pick].try_emplace(t, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.quotients[pick].erase(it);
      }
    }
    ModPoly h = left_mul(t, c, basis[pick], order);
    p = subtract(p, h, order);
  }
  r.remainder.assign(rem_desc.rbegin(), rem_desc.rend());
  return r;
}

struct Pair {
  int sugar;
  std::size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& u, const Pair& v) const {
    if (u.sugar != v.sugar) return u.sugar < v.sugar;
    if (u.j != v.j) return u.j < v.j;
    return u.i < v.i;
  }
};

WeylMonomial pair_lcm(const ModPoly& f, const ModPoly& g) { return lcm(lead(f).mono, lead(g).mono); }

ModPoly s_polynomial(const ModPoly& f, const ModPoly& g, const ModuleOrder& order) {
  WeylMonomial l = pair_lcm(f, g);
  ModPoly a = left_mul(l / lead(f).mono, Rational(1) / lead(f).coef, f, order);
  ModPoly b = left_mul(l / lead(g).mono, Rational(1) / lead(g).coef, g, order);
  return subtract(a, b, order);
}

void check_module(std::span<const FreeElement> gens, const ModuleOrder& order) {
  for (const auto& g : gens)
    if (g.rank() != order.rank())
      throw InputError("generator rank " + std::to_string(g.rank()) +
                       " does not match module order rank " + std::to_string(order.rank()));
}

std::size_t infer_n(std::span<const FreeElement> gens, const ModuleOrder& order) {
  std::size_t n = order.n();
  for (const auto& g : gens) n = std::max(n, g.n());
  return n;
}

WeylElement to_element(std::size_t n, TermMap&& terms) {
  return WeylElement::from_terms(n, std::move(terms));
}

}  // namespace

LeadingTerm leading_term(const FreeElement& f, const ModuleOrder& order) {
  ModPoly p = to_mod(f, order);
  if (p.empty()) throw InputError("leading term of zero");
  return {lead(p).comp, lead(p).mono, lead(p).coef};
}

std::vector<FreeElement> left_groebner(std::span<const FreeElement> gens, const ModuleOrder& order) {
  check_module(gens, order);
  const std::size_t n = infer_n(gens, order);
  std::vector<ModPoly> G;
  std::set<Pair, PairLess> pending;
  std::set<std::pair<std::size_t, std::size_t>> queued;

  auto add = [&](ModPoly p) {
    make_monic(p);
    const std::size_t k = G.size();
    G.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      if (lead(G[i]).comp != lead(G[k]).comp) continue;
      WeylMonomial l = pair_lcm(G[i], G[k]);
      pending.insert(Pair{order.sugar(lead(G[k]).comp, l), i, k});
      queued.emplace(i, k);
    }
  };

  for (const auto& g : gens) {
    ModPoly p = to_mod(g, order);
    if (!p.empty()) add(std::move(p));
  }

  auto in_queue = [&](std::size_t a, std::size_t b) {
    return queued.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    queued.erase({pr.i, pr.j});
    WeylMonomial l = pair_lcm(G[pr.i], G[pr.j]);
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || lead(G[k]).comp != lead(G[pr.i]).comp) continue;
      if (lead(G[k]).mono.divides(l) && !in_queue(pr.i, k) && !in_queue(pr.j, k)) skip = true;
    }
    if (skip) continue;
    ModPoly s = s_polynomial(G[pr.i], G[pr.j], order);
    Reduction red = reduce(std::move(s), G, order, false);
    if (!red.remainder.empty()) add(std::move(red.remainder));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || lead(G[k]).comp != lead(G[i]).comp) continue;
      if (!lead(G[k]).mono.divides(lead(G[i]).mono)) continue;
      // Equal leads: keep the earliest.
      redundant = lead(G[k]).mono != lead(G[i]).mono || k < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<ModPoly> minimal;
  for (std::size_t i : keep) minimal.push_back(G[i]);

  // Tail-reduce against the others.
  std::vector<ModPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Reduction red = reduce(minimal[i], others, order, false);
    make_monic(red.remainder);
    reduced.push_back(std::move(red.remainder));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModPoly& u, const ModPoly& v) {
    return order.compare(lead(u).comp, lead(u).mono, lead(v).comp, lead(v).mono) > 0;
  });
  std::vector<FreeElement> out;
  out.reserve(reduced.size());
  for (const auto& p : reduced) out.push_back(from_mod(p, n, order.rank()));
  return out;
}

Division divide(const FreeElement& f, std::span<const FreeElement> gb, const ModuleOrder& order) {
  check_module(gb, order);
  if (f.rank() != order.rank()) throw InputError("dividend rank does not match module order");
  const std::size_t n = std::max(infer_n(gb, order), f.n());
  std::vector<ModPoly> basis;
  for (const auto& g : gb) {
    basis.push_back(to_mod(g, order));
    if (basis.back().empty()) throw InputError("division by a zero element");
  }
  Reduction red = reduce(to_mod(f, order), basis, order, true);
  Division d;
  d.remainder = from_mod(red.remainder, n, order.rank());
  for (auto& q : red.quotients) d.quotients.push_back(to_element(n, std::move(q)));
  return d;
}

FreeElement normal_form(const FreeElement& f, std::span<const FreeElement> gb,
                        const ModuleOrder& order) {
  check_module(gb, order);
  const std::size_t n = std::max(infer_n(gb, order), f.n());
  std::vector<ModPoly> basis;
  for (const auto& g : gb)
    if (!g.is_zero()) basis.push_back(to_mod(g, order));
  Reduction red = reduce(to_mod(f, order), basis, order, false);
  return from_mod(red.remainder, n, order.rank());
}

std::vector<FreeElement> syzygies(std::span<const FreeElement> gb, const ModuleOrder& order) {
  check_module(gb, order);
  const std::size_t n = infer_n(gb, order);
  const std::size_t s = gb.size();
  std::vector<ModPoly> basis;
  for (const auto& g : gb) {
    basis.push_back(to_mod(g, order));
    if (basis.back().empty()) throw InputError("syzygies: zero element in basis");
  }
  std::vector<FreeElement> out;
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (lead(basis[i]).comp != lead(basis[k]).comp) continue;
      WeylMonomial l = pair_lcm(basis[i], basis[k]);
      WeylMonomial ti = l / lead(basis[i]).mono;
      WeylMonomial tk = l / lead(basis[k]).mono;
      Rational ci = Rational(1) / lead(basis[i]).coef;
      Rational ck = Rational(1) / lead(basis[k]).coef;
      ModPoly spoly = subtract(left_mul(ti, ci, basis[i], order), left_mul(tk, ck, basis[k], order),
                               order);
      Reduction red = reduce(std::move(spoly), basis, order, true);
      if (!red.remainder.empty())
        throw InvariantViolation("syzygies: input is not a Groebner basis");
      FreeElement syz(n, s);
      for (std::size_t l = 0; l < s; ++l) syz[l] = -to_element(n, std::move(red.quotients[l]));
      syz[i] += WeylElement::monomial(ti, ci);
      syz[k] -= WeylElement::monomial(tk, ck);
      if (syz.is_zero()) continue;
      out.push_back(std::move(syz));
    }
  }
  std::vector<FreeElement> rows(gb.begin(), gb.end());
  for (const auto& syz : out)
    if (!combine(syz.components(), rows, order.rank()).is_zero())
      throw InvariantViolation("syzygies: sum s_l * g_l is not zero");
  return out;
}

bool is_groebner_basis(std::span<const FreeElement> gb, const ModuleOrder& order) {
  check_module(gb, order);
  std::vector<ModPoly> basis;
  for (const auto& g : gb)
    if (!g.is_zero()) basis.push_back(to_mod(g, order));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      if (lead(basis[i]).comp != lead(basis[k]).comp) continue;
      if (!reduce(s_polynomial(basis[i], basis[k], order), basis, order, false, false)
               .remainder.empty())
        return false;
    }
  return true;
}

}  // namespace weylcoh
