#include "gwbez/sturm.hpp"

#include "gwbez/errors.hpp"

namespace gwbez {

int upoly_sign_at(const UPoly<Rat>& f, const Rat& x) {
  return up::eval(f, x).sign();
}

SturmChain::SturmChain(const UPoly<Rat>& f) {
  if (up::is_zero_poly(f)) throw ZeroInput("Sturm chain of the zero polynomial");
  UPoly<Rat> df = up::derivative(f);
  f_ = up::is_zero_poly(df) ? up::make_monic(f) : up::exact_div(f, up::gcd(f, df));
  f_ = up::make_monic(f_);
  chain_.push_back(f_);
  if (up::degree(f_) == 0) return;
  chain_.push_back(up::derivative(f_));
  while (up::degree(chain_.back()) > 0) {
    UPoly<Rat> r = up::neg(up::rem(chain_[chain_.size() - 2], chain_.back()));
    if (up::is_zero_poly(r)) break;
    chain_.push_back(std::move(r));
  }
}

long SturmChain::degree() const { return up::degree(f_); }

long SturmChain::changes_at(const Rat& x) const {
  long changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = upoly_sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long SturmChain::count(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw EmptyWindow("interval endpoints out of order");
  return changes_at(a) - changes_at(b);
}

Rat SturmChain::root_bound() const {
  if (up::degree(f_) == 0) return Rat(1);
  Rat top = f_.back();
  Rat m(0);
  for (std::size_t i = 0; i + 1 < f_.size(); ++i) {
    Rat q = f_[i] / top;
    if (q.sign() < 0) q = -q;
    if (m < q) m = q;
  }
  return m + Rat(1);
}

long SturmChain::count_all() const {
  if (up::degree(f_) == 0) return 0;
  Rat B = root_bound();
  return count(-B, B);
}

void SturmChain::split(const Rat& a, const Rat& b, std::vector<RootInterval>& out) const {
  long k = count(a, b);  // f is nonzero at both ends here
  if (k == 0) return;
  if (k == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rat m = (a + b) / Rat(2);
  if (upoly_sign_at(f_, m) != 0) {
    split(a, m, out);
    split(m, b, out);
    return;
  }
  // Root exactly at the midpoint: peel it off with a clear gap around it.
  Rat d = (b - a) / Rat(4);
  while (count(m - d, m + d) != 1 || upoly_sign_at(f_, m - d) == 0 ||
         upoly_sign_at(f_, m + d) == 0)
    d = d / Rat(2);
  split(a, m - d, out);
  out.emplace_back(m, m);
  split(m + d, b, out);
}

std::vector<RootInterval> SturmChain::isolate() const {
  std::vector<RootInterval> out;
  if (up::degree(f_) == 0) return out;
  Rat B = root_bound();
  split(-B, B, out);
  return out;
}

RootInterval SturmChain::refine(RootInterval iv, const Rat& width) const {
  if (iv.first == iv.second) return iv;
  int sa = upoly_sign_at(f_, iv.first);
  while (iv.second - iv.first >= width) {
    Rat m = (iv.first + iv.second) / Rat(2);
    int sm = upoly_sign_at(f_, m);
    if (sm == 0) return {m, m};
    if (sm == sa) {
      iv.first = m;
    } else {
      iv.second = m;
    }
  }
  return iv;
}

int sign_at_root(const SturmChain& chain, RootInterval iv, const UPoly<Rat>& g) {
  if (up::is_zero_poly(g)) return 0;
  if (iv.first == iv.second) return upoly_sign_at(g, iv.first);
  UPoly<Rat> h = up::gcd(chain.squarefree(), g);
  if (up::degree(h) > 0 && SturmChain(h).count(iv.first, iv.second) > 0) return 0;
  if (up::degree(g) == 0) return g.back().sign();
  SturmChain gc(g);
  while (true) {
    if (upoly_sign_at(g, iv.first) != 0 && gc.count(iv.first, iv.second) == 0)
      return upoly_sign_at(g, (iv.first + iv.second) / Rat(2));
    Rat m = (iv.first + iv.second) / Rat(2);
    int sm = upoly_sign_at(chain.squarefree(), m);
    if (sm == 0) return upoly_sign_at(g, m);
    if (sm == upoly_sign_at(chain.squarefree(), iv.first)) {
      iv.first = m;
    } else {
      iv.second = m;
    }
  }
}

}  // namespace gwbez
