#include "jacdet/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "jacdet/modarith.hpp"

namespace jacdet {

IntModRing::Elem IntModRing::inv(const Elem& x) const {
    BigInt t = 0, newt = 1, r = m, newr = from_int(x);
    while (newr != 0) {
        BigInt q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::invalid_argument("IntModRing::inv: not invertible");
    return ((t % m) + m) % m;
}

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

bool is_permutation_polynomial(const FqPoly& p, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    std::vector<char> seen(ctx.q(), 0);
    for (FqElem x : ctx.enumerate()) {
        uint64_t idx = ctx.index_of(poly_eval(ring, p, x));
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

FqPoly build_f(const FieldCtx& ctx) {
    if (ctx.degree() != 1) throw std::invalid_argument("build_f: base field context required");
    uint64_t p = ctx.p();
    FqRing ring{&ctx};
    FqPoly r;
    r.c.push_back(ctx.one());
    uint64_t kmax = (p - 1) / 8;
    uint64_t term = 1;
    for (uint64_t k = 1; k <= kmax; ++k) {
        uint64_t j = k - 1;
        uint64_t num = mul_mod((8 * j + 1) % p, (8 * j + 5) % p, p);
        uint64_t den = mul_mod(4 * (j + 1) % p, (4 * j + 3) % p, p);
        term = mul_mod(term, mul_mod(num, inv_mod(den, p), p), p);
        r.c.push_back(ctx.make(static_cast<uint32_t>(term), 0));
    }
    poly_trim(ring, r);
    return r;
}

FqPoly build_g(const FieldCtx& ctx) {
    if (ctx.degree() != 1) throw std::invalid_argument("build_g: base field context required");
    uint64_t p = ctx.p();
    FqRing ring{&ctx};
    FqPoly r;
    r.c.push_back(ctx.one());
    uint64_t kmax = (p - 1) / 4;
    uint64_t term = 1;
    for (uint64_t k = 1; k <= kmax; ++k) {
        // ratio ((4k-3)(4k-1)) / (4 k^2)
        uint64_t num = mul_mod((4 * k - 3) % p, (4 * k - 1) % p, p);
        uint64_t den = mul_mod(4 % p, mul_mod(k % p, k % p, p), p);
        term = mul_mod(term, mul_mod(num, inv_mod(den, p), p), p);
        r.c.push_back(ctx.make(static_cast<uint32_t>(term), 0));
    }
    poly_trim(ring, r);
    return r;
}

namespace {

FqPoly linear(const FieldCtx& ctx, int64_t c0, int64_t c1) {
    FqRing ring{&ctx};
    return poly_from_ints(ring, {c0, c1});
}

FqPoly quadratic(const FieldCtx& ctx, int64_t c0, int64_t c1, int64_t c2) {
    FqRing ring{&ctx};
    return poly_from_ints(ring, {c0, c1, c2});
}

}  // namespace

FqPoly ode_residual_g(const FqPoly& u, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    FqPoly du = poly_derivative(ring, u);
    FqPoly ddu = poly_derivative(ring, du);
    FqPoly r = poly_mul(ring, quadratic(ctx, 0, 4, -16), ddu);
    r = poly_add(ring, r, poly_mul(ring, linear(ctx, 4, -32), du));
    r = poly_sub(ring, r, poly_scale(ring, u, ctx.from_int(3)));
    return r;
}

FqPoly ode_residual_f(const FqPoly& v, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    FqPoly dv = poly_derivative(ring, v);
    FqPoly ddv = poly_derivative(ring, dv);
    FqPoly r = poly_mul(ring, quadratic(ctx, 0, 16, -64), ddv);
    r = poly_add(ring, r, poly_mul(ring, linear(ctx, 12, -112), dv));
    r = poly_sub(ring, r, poly_scale(ring, v, ctx.from_int(5)));
    return r;
}

bool check_fg_identity(uint32_t p) {
    if (p % 4 != 1) throw std::invalid_argument("check_fg_identity: p = 1 (mod 4) required");
    FieldCtx ctx = FieldCtx::fp(p);
    FqRing ring{&ctx};
    uint64_t n = (p - 1) / 4;
    // scalar -(2n)! (n!)^2 mod p
    uint64_t fac2n = 1, facn = 1;
    for (uint64_t i = 2; i <= 2 * n; ++i) fac2n = mul_mod(fac2n, i % p, p);
    for (uint64_t i = 2; i <= n; ++i) facn = mul_mod(facn, i % p, p);
    uint64_t scalar = (p - mul_mod(fac2n, mul_mod(facn, facn, p), p)) % p;
    FqPoly lhs = poly_scale(ring, build_g(ctx), ctx.make(static_cast<uint32_t>(scalar), 0));

    FqPoly f = build_f(ctx);
    FqPoly base = linear(ctx, -2, 16);  // 16z - 2
    FqPoly rhs;
    for (size_t k = 0; k < f.c.size(); ++k) {
        if (2 * k > n) throw std::logic_error("check_fg_identity: negative exponent");
        FqPoly term = poly_scale(ring, poly_pow(ring, base, n - 2 * k), f.c[k]);
        rhs = poly_add(ring, rhs, term);
    }
    return poly_eq(ring, lhs, rhs);
}

std::string render_poly(const FqPoly& p, const FieldCtx& ctx, char var) {
    FqRing ring{&ctx};
    FqPoly t = p;
    poly_trim(ring, t);
    if (t.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < t.c.size(); ++i) {
        if (ctx.is_zero(t.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << ctx.to_string(t.c[i]);
        if (i == 1) os << '*' << var;
        else if (i > 1) os << '*' << var << '^' << i;
    }
    return os.str();
}

namespace {

// Parses one coefficient token: "17" or "(a0+a1*w)".
FqElem parse_coef(const std::string& s, const FieldCtx& ctx) {
    if (s.empty()) throw std::invalid_argument("parse_poly: empty coefficient");
    if (s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("parse_poly: unbalanced parens");
        std::string body = s.substr(1, s.size() - 2);
        size_t plus = body.find('+');
        if (plus == std::string::npos)
            throw std::invalid_argument("parse_poly: expected (a0+a1*w)");
        long long a0 = std::stoll(body.substr(0, plus));
        std::string rest = body.substr(plus + 1);
        size_t star = rest.find('*');
        if (star == std::string::npos || rest.substr(star) != "*w")
            throw std::invalid_argument("parse_poly: expected (a0+a1*w)");
        long long a1 = std::stoll(rest.substr(0, star));
        int64_t p = ctx.p();
        return {static_cast<uint32_t>(((a0 % p) + p) % p),
                static_cast<uint32_t>(((a1 % p) + p) % p)};
    }
    long long v = std::stoll(s);
    return ctx.from_int(v);
}

}  // namespace

FqPoly parse_poly(const std::string& text, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    // Split into terms on '+' at paren depth zero.
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    FqPoly r;
    for (std::string term : terms) {
        // strip whitespace
        std::string t;
        for (char ch : term)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw std::invalid_argument("parse_poly: empty term");
        // split  coef [* var [^ exp]]
        std::string coef = t;
        size_t expo = 0;
        size_t vpos = std::string::npos;
        int pdepth = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '(') ++pdepth;
            if (t[i] == ')') --pdepth;
            if (pdepth == 0 && (t[i] == 'z' || t[i] == 'x') &&
                (i == 0 || t[i - 1] == '*')) {
                vpos = i;
                break;
            }
        }
        if (vpos == std::string::npos) {
            expo = 0;
        } else {
            coef = (vpos == 0) ? "1" : t.substr(0, vpos - 1);  // drop "*"
            if (coef.empty()) coef = "1";
            std::string tail = t.substr(vpos + 1);
            if (tail.empty()) expo = 1;
            else if (tail[0] == '^') expo = std::stoull(tail.substr(1));
            else throw std::invalid_argument("parse_poly: bad exponent syntax");
        }
        if (r.c.size() <= expo) r.c.resize(expo + 1, ctx.zero());
        r.c[expo] = ctx.add(r.c[expo], parse_coef(coef, ctx));
    }
    poly_trim(ring, r);
    return r;
}

}  // namespace jacdet
