#include "cohsup/gb.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace cohsup {

polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis) {
  polynomial p = f;
  polynomial r = polynomial::zero(f.field(), f.arity(), f.order());
  while (!p.is_zero()) {
    const monomial& lm = p.leading_monomial();
    const polynomial* reducer = nullptr;
    for (const auto& b : basis) {
      if (!b.is_zero() && b.leading_monomial().divides(lm)) {
        reducer = &b;
        break;
      }
    }
    if (reducer) {
      const scalar c = p.leading_coeff() / reducer->leading_coeff();
      p = p - reducer->times_term(c, lm.quotient_by(reducer->leading_monomial()));
    } else {
      r = r + polynomial::single(p.leading_coeff(), lm, p.order());
      p = p - polynomial::single(p.leading_coeff(), lm, p.order());
    }
  }
  return r;
}

namespace {

struct sp_pair {
  std::size_t i, j;  // i < j
  monomial l;        // lcm of the leading monomials
};

polynomial s_poly(const polynomial& f, const polynomial& g, const monomial& l) {
  // both monic
  return f.times_term(scalar::one(f.field()), l.quotient_by(f.leading_monomial())) -
         g.times_term(scalar::one(g.field()), l.quotient_by(g.leading_monomial()));
}

// Gebauer-Moller update: prune the candidate pairs of a freshly added element
// and stale old pairs. `t` is the index of the new element in g.
void update_pairs(std::vector<sp_pair>& pairs, const std::vector<polynomial>& g,
                  std::size_t t, const monomial_order& ord) {
  const monomial& lt = g[t].leading_monomial();

  struct cand {
    std::size_t i;
    monomial l;
    bool coprime;
  };
  std::vector<cand> c;
  c.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    const monomial& li = g[i].leading_monomial();
    c.push_back({i, monomial::lcm(li, lt), li.coprime_with(lt)});
  }

  std::vector<cand> d;
  for (std::size_t a = 0; a < c.size(); ++a) {
    bool keep = c[a].coprime;
    if (!keep) {
      bool dominated = false;
      for (std::size_t b = a + 1; b < c.size() && !dominated; ++b)
        dominated = c[b].l.divides(c[a].l);
      for (std::size_t b = 0; b < d.size() && !dominated; ++b)
        dominated = d[b].l.divides(c[a].l);
      keep = !dominated;
    }
    if (keep) d.push_back(c[a]);
  }

  // old pair (i,j) dies when lt properly divides its lcm on both sides
  std::erase_if(pairs, [&](const sp_pair& p) {
    if (!lt.divides(p.l)) return false;
    if (monomial::lcm(g[p.i].leading_monomial(), lt) == p.l) return false;
    if (monomial::lcm(g[p.j].leading_monomial(), lt) == p.l) return false;
    return true;
  });

  for (const auto& cd : d) {
    if (cd.coprime) continue;  // product criterion
    pairs.push_back({cd.i, t, cd.l});
  }
  (void)ord;
}

}  // namespace

std::vector<polynomial> buchberger(const field_spec& f, std::size_t arity,
                                   const std::vector<polynomial>& gens,
                                   monomial_order ord) {
  std::vector<polynomial> g;
  std::vector<sp_pair> pairs;

  auto insert = [&](const polynomial& h) {
    g.push_back(h.monic());
    update_pairs(pairs, g, g.size() - 1, ord);
  };

  for (const auto& gen : gens) {
    if (gen.field() != f) throw field_mismatch{};
    if (gen.arity() != arity) throw arity_mismatch{};
    if (!gen.is_zero()) insert(gen.with_order(ord));
  }

  auto pick = [&]() {
    // normal strategy: least lcm in the order, ties broken by indices
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int cmp = ord.compare(pairs[k].l, pairs[best].l);
      if (cmp < 0 || (cmp == 0 && (pairs[k].i < pairs[best].i ||
                                   (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
        best = k;
    }
    sp_pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  };

  while (!pairs.empty()) {
    const sp_pair p = pick();
    const polynomial h = normal_form(s_poly(g[p.i], g[p.j], p.l), g);
    if (!h.is_zero()) insert(h);
  }

  // minimize: drop any element whose leading monomial another one divides
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ord.less(g[a].leading_monomial(), g[b].leading_monomial());
  });
  std::vector<polynomial> kept;
  for (std::size_t id : idx) {
    const monomial& lm = g[id].leading_monomial();
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const polynomial& k) {
      return k.leading_monomial().divides(lm);
    });
    if (!redundant) kept.push_back(g[id]);
  }

  // tail-reduce each against the rest (leading monomials are pairwise
  // indivisible, so this converges in one pass)
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form(kept[i], others).monic();
  }

  std::sort(kept.begin(), kept.end(), [&](const polynomial& a, const polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return kept;
}

ideal::ideal(const field_spec& f, std::size_t arity, std::vector<polynomial> gens,
             monomial_order ord)
    : field_(f), arity_(arity), order_(ord), cache_(std::make_shared<cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.field() != f) throw field_mismatch{};
    if (g.arity() != arity) throw arity_mismatch{};
    gens_.push_back(g.with_order(ord));
  }
}

ideal ideal::of(std::vector<polynomial> gens) {
  if (gens.empty()) throw empty_after_trim{};
  const field_spec f = gens.front().field();
  const std::size_t a = gens.front().arity();
  const monomial_order ord = gens.front().order();
  return ideal(f, a, std::move(gens), ord);
}

const std::vector<polynomial>& ideal::reduced_basis() const {
  std::call_once(cache_->once, [&] {
    cache_->basis = buchberger(field_, arity_, gens_, order_);
  });
  return cache_->basis;
}

polynomial ideal::normal_form(const polynomial& f) const {
  if (f.field() != field_) throw field_mismatch{};
  if (f.arity() != arity_) throw arity_mismatch{};
  return cohsup::normal_form(f.with_order(order_), reduced_basis());
}

bool ideal::contains(const polynomial& f) const { return normal_form(f).is_zero(); }

bool ideal::is_proper() const {
  const auto& b = reduced_basis();
  return std::none_of(b.begin(), b.end(),
                      [](const polynomial& g) { return g.leading_monomial().is_unit(); });
}

std::size_t ideal::krull_dim() const {
  const auto& b = reduced_basis();
  if (!is_proper()) return 0;  // zero ring, by convention
  std::vector<std::uint32_t> supports;
  supports.reserve(b.size());
  for (const auto& g : b) {
    std::uint32_t s = 0;
    for (std::size_t i : g.leading_monomial().support()) s |= 1u << i;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << arity_); ++mask) {
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

std::vector<monomial> ideal::standard_monomials() const {
  const auto& b = reduced_basis();
  // bound each exponent by the least pure power of that variable in LT(I)
  std::vector<std::uint32_t> bounds(arity_, 0);
  for (const auto& g : b) {
    const monomial& lm = g.leading_monomial();
    const auto sup = lm.support();
    if (sup.size() == 1) {
      std::uint32_t& bd = bounds[sup.front()];
      const std::uint32_t e = lm.exp(sup.front());
      bd = bd == 0 ? e : std::min(bd, e);
    }
  }
  for (std::size_t i = 0; i < arity_; ++i)
    if (bounds[i] == 0) throw not_artinian{};

  std::vector<monomial> out;
  std::vector<std::uint32_t> exps(arity_, 0);
  const monomial_order ord = order_;
  auto reducible = [&](const monomial& m) {
    return std::any_of(b.begin(), b.end(), [&](const polynomial& g) {
      return g.leading_monomial().divides(m);
    });
  };
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == arity_) {
      monomial m(exps);
      if (!reducible(m)) out.push_back(std::move(m));
      return;
    }
    for (exps[i] = 0; exps[i] < bounds[i]; ++exps[i]) self(self, i + 1);
    exps[i] = 0;
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(),
            [&](const monomial& a, const monomial& bm) { return ord.compare(a, bm) > 0; });
  return out;
}

std::optional<std::vector<std::size_t>> ideal::least_pure_powers() const {
  if (!is_proper() || krull_dim() != 0) return std::nullopt;
  const std::size_t cap = standard_monomials().size();
  std::vector<std::size_t> t(arity_, 0);
  for (std::size_t i = 0; i < arity_; ++i) {
    // x_i^t in I iff the multiplication operator X_i is nilpotent of index <= t;
    // indices are bounded by dim_k Q/I
    polynomial r = polynomial::single(scalar::one(field_),
                                      monomial::variable(arity_, i), order_);
    bool found = false;
    for (std::size_t k = 1; k <= cap + 1; ++k) {
      r = normal_form(r);
      if (r.is_zero()) {
        t[i] = k;
        found = true;
        break;
      }
      r = r * polynomial::single(scalar::one(field_),
                                 monomial::variable(arity_, i), order_);
    }
    if (!found) return std::nullopt;
  }
  return t;
}

bool ideal::is_m_primary() const {
  if (!is_proper()) return false;
  if (krull_dim() != 0) return false;
  return least_pure_powers().has_value();
}

namespace {

// all monomials of total degree exactly n
void degree_monomials(std::size_t arity, std::uint32_t n, std::vector<monomial>& out) {
  std::vector<std::uint32_t> exps(arity, 0);
  auto walk = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == arity) {
      exps[i] = left;
      out.emplace_back(exps);
      exps[i] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
    exps[i] = 0;
  };
  walk(walk, 0, n);
}

}  // namespace

std::size_t ideal::truncation_index() const {
  const auto powers = least_pure_powers();
  if (!powers) throw not_m_primary{};

  std::size_t bound = 1;
  for (std::size_t t : *powers) bound += t - 1;

  const auto& b = reduced_basis();
  auto in_lt = [&](const monomial& m) {
    return std::any_of(b.begin(), b.end(), [&](const polynomial& g) {
      return g.leading_monomial().divides(m);
    });
  };

  // least N with every degree-N monomial in LT(I): a lower bound for the index
  std::size_t n0 = 1;
  for (;; ++n0) {
    std::vector<monomial> ms;
    degree_monomials(arity_, static_cast<std::uint32_t>(n0), ms);
    if (std::all_of(ms.begin(), ms.end(), in_lt)) break;
    if (n0 > bound) throw cross_check_failed("truncation index exceeded its upper bound");
  }

  for (std::size_t n = n0; n <= bound; ++n) {
    std::vector<monomial> ms;
    degree_monomials(arity_, static_cast<std::uint32_t>(n), ms);
    const bool all_in = std::all_of(ms.begin(), ms.end(), [&](const monomial& m) {
      return contains(polynomial::single(scalar::one(field_), m, order_));
    });
    if (all_in) return n;
  }
  throw cross_check_failed("truncation index exceeded its upper bound");
}

ideal times_maximal(const ideal& i) {
  std::vector<polynomial> gens;
  gens.reserve(i.generators().size() * i.arity());
  for (const auto& g : i.generators()) {
    for (std::size_t v = 0; v < i.arity(); ++v) {
      gens.push_back(g.times_term(scalar::one(i.field()), monomial::variable(i.arity(), v)));
    }
  }
  return ideal(i.field(), i.arity(), std::move(gens), i.order());
}

ideal sum(const ideal& a, const ideal& b) {
  if (a.field() != b.field()) throw field_mismatch{};
  if (a.arity() != b.arity()) throw arity_mismatch{};
  std::vector<polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.with_order(a.order()));
  return ideal(a.field(), a.arity(), std::move(gens), a.order());
}

trim_result minimal_generators(const std::vector<polynomial>& gens) {
  std::vector<polynomial> live;
  std::vector<std::size_t> live_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_zero()) {
      live.push_back(gens[i]);
      live_idx.push_back(i);
    }
  }
  if (live.empty()) throw empty_after_trim{};
  const field_spec f = live.front().field();
  const std::size_t arity = live.front().arity();
  const monomial_order ord = live.front().order();

  const bool homogeneous = std::all_of(live.begin(), live.end(),
                                       [](const polynomial& g) { return g.is_homogeneous(); });

  auto drop_redundant = [&]() {
    // drop any generator lying in the ideal of the others, one at a time
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < live.size(); ++i) {
        std::vector<polynomial> others;
        others.reserve(live.size() - 1);
        for (std::size_t j = 0; j < live.size(); ++j)
          if (j != i) others.push_back(live[j]);
        if (others.empty()) break;
        if (ideal(f, arity, others, ord).contains(live[i])) {
          live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
          live_idx.erase(live_idx.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  };

  if (homogeneous) {
    // an irredundant homogeneous generating set is minimal (graded Nakayama)
    drop_redundant();
    return {std::move(live), std::move(live_idx), true};
  }

  const ideal full(f, arity, live, ord);
  if (full.is_m_primary()) {
    // minimality in the local ring = linear independence of the classes in
    // I/mI, computed inside the truncated algebra at the level where the
    // truncation no longer matters
    const ideal mi = times_maximal(full);
    const std::size_t level = mi.truncation_index() - 1;
    const truncated_algebra ta(f, arity, level);
    // image of mI at this level: spanned by mu * g over monomials mu up to the level
    std::vector<std::vector<scalar>> span;
    for (const auto& g : mi.generators()) {
      const std::size_t o = cohsup::ord(g);
      for (std::size_t i = 0; i < ta.dim(); ++i) {
        const monomial& mu = ta.monomial_at(i);
        if (mu.degree() + o > ta.level()) continue;
        auto v = ta.coords(g.times_term(scalar::one(f), mu));
        if (std::any_of(v.begin(), v.end(), [](const scalar& c) { return !c.is_zero(); }))
          span.push_back(std::move(v));
      }
    }
    subspace acc = subspace::from_span(f, ta.dim(), span);
    std::vector<polynomial> keep;
    std::vector<std::size_t> keep_idx;
    for (std::size_t i = 0; i < live.size(); ++i) {
      auto v = ta.coords(live[i]);
      if (!acc.contains(v)) {
        keep.push_back(live[i]);
        keep_idx.push_back(live_idx[i]);
        auto rows = acc.basis();
        rows.push_back(std::move(v));
        acc = subspace::from_span(f, ta.dim(), rows);
      }
    }
    return {std::move(keep), std::move(keep_idx), true};
  }

  drop_redundant();
  return {std::move(live), std::move(live_idx), false};
}

truncated_algebra::truncated_algebra(const field_spec& f, std::size_t arity, std::size_t level)
    : field_(f), arity_(arity), level_(level) {
  for (std::uint32_t n = 0; n <= level; ++n) degree_monomials(arity, n, basis_);
  if (basis_.size() > 2'000'000)
    throw error("truncated algebra dimension is unreasonably large");
  const monomial_order ord{};
  std::sort(basis_.begin(), basis_.end(),
            [&](const monomial& a, const monomial& b) { return ord.compare(a, b) > 0; });
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.push_back({basis_[i], i});
  std::sort(index_.begin(), index_.end());
}

std::size_t truncated_algebra::index_of(const monomial& m) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), m,
                             [](const auto& entry, const monomial& key) {
                               return entry.first < key;
                             });
  if (it == index_.end() || !(it->first == m)) throw ambient_mismatch{};
  return it->second;
}

std::vector<scalar> truncated_algebra::coords(const polynomial& f) const {
  if (f.field() != field_) throw field_mismatch{};
  if (f.arity() != arity_) throw arity_mismatch{};
  std::vector<scalar> v(dim(), scalar::zero(field_));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() <= level_) v[index_of(m)] = c;
  }
  return v;
}

}  // namespace cohsup
