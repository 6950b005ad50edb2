#include "concordance/realroot.hpp"

#include <algorithm>
#include <functional>

namespace concordance {

namespace {

Interval mul(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

QPoly squarefree_part(const QPoly& p) {
    QPoly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return monic(p);
    return monic(divmod(p, g).first);
}

}  // namespace

Interval eval_interval(const QPoly& p, const Rational& lo, const Rational& hi) {
    Interval acc{0, 0};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul(acc, Interval{lo, hi});
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

RealRoot::RealRoot(QPoly squarefree, Rational lo, Rational hi)
    : poly_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw DomainError("empty isolating interval");
}

void RealRoot::bisect() const {
    Rational mid = (lo_ + hi_) / 2;
    int sm = sgn(poly_.eval(mid));
    if (sm == 0) {
        lo_ = hi_ = mid;
    } else if (sm == sgn(poly_.eval(lo_))) {
        lo_ = mid;
    } else {
        hi_ = mid;
    }
}

void RealRoot::refine(const Rational& width) const {
    while (!is_rational() && hi_ - lo_ >= width) bisect();
}

int RealRoot::sign_of(const QPoly& r) const {
    if (is_rational()) return sgn(r.eval(lo_));
    QPoly g = gcd(r, poly_);
    if (g.degree() >= 1 && sgn(g.eval(lo_)) != sgn(g.eval(hi_))) return 0;
    if (r.is_zero()) return 0;
    while (true) {
        Interval v = eval_interval(r, lo_, hi_);
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        bisect();
        if (is_rational()) return sgn(r.eval(lo_));
    }
}

int RealRoot::compare(const Rational& x) const {
    if (is_rational()) return sgn(lo_ - x);
    if (x <= lo_) return 1;
    if (x >= hi_) return -1;
    int sx = sgn(poly_.eval(x));
    if (sx == 0) return 0;
    return sx == sgn(poly_.eval(lo_)) ? 1 : -1;
}

double RealRoot::approx() const {
    refine(Rational(1, 1 << 30) / (1 << 22));
    Rational mid = (lo_ + hi_) / 2;
    return mid.get_d();
}

std::vector<RealRoot> real_roots(const QPoly& p, const Rational& lo, const Rational& hi) {
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    const QPoly P = squarefree_part(p);
    const auto seq = sturm_sequence(P);
    // Roots in (a, b] number V(a) - V(b).
    std::function<void(const Rational&, const Rational&)> isolate = [&](const Rational& a, const Rational& b) {
        int n = sign_variations(seq, a) - sign_variations(seq, b);
        if (n == 0) return;
        if (n > 1) {
            Rational mid = (a + b) / 2;
            isolate(a, mid);
            isolate(mid, b);
            return;
        }
        if (sgn(P.eval(b)) == 0) {
            out.emplace_back(P, b, b);
            return;
        }
        Rational l = a, h = b;
        while (sgn(P.eval(l)) == 0) {
            Rational mid = (l + h) / 2;
            if (sgn(P.eval(mid)) == 0) {
                out.emplace_back(P, mid, mid);
                return;
            }
            if (sign_variations(seq, l) - sign_variations(seq, mid) == 1)
                h = mid;
            else
                l = mid;
        }
        out.emplace_back(P, l, h);
    };
    isolate(lo, hi);
    if (!out.empty() && out.back().is_rational() && out.back().lo() == hi) out.pop_back();
    return out;
}

}  // namespace concordance
