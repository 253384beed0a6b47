#include "poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace semiconj {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(GaussQ v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::variable() { return monomial(GaussQ(1), 1); }

Poly Poly::monomial(GaussQ c, int k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, GaussQ());
    p.c_.back() = std::move(c);
    return p;
}

const GaussQ& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussQ> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussQ> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussQ> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<GaussQ> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return Poly(std::move(c));
}

Poly operator*(const GaussQ& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<GaussQ> c(p.c_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return lc().inv() * *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussQ> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = GaussQ(static_cast<long>(k)) * c_[k];
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(GaussQ(1));
    Poly base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Poly Poly::reversed() const {
    std::vector<GaussQ> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (size_t k = c_.size(); k-- > 0;) r = r * inner + Poly::constant(c_[k]);
    return r;
}

GaussQ Poly::eval(const GaussQ& x) const {
    GaussQ r;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

Ball Poly::eval(const Ball& x) const {
    Ball r;
    Prec p = x.prec();
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k].to_ball(p);
    return r;
}

int Poly::root_multiplicity(const GaussQ& x) const {
    if (is_zero()) throw std::domain_error("root multiplicity in zero polynomial");
    Poly lin({-x, GaussQ(1)});
    Poly p = *this;
    int m = 0;
    while (!p.is_constant()) {
        auto [q, r] = divrem(p, lin);
        if (!r.is_zero()) break;
        ++m;
        p = std::move(q);
    }
    return m;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    int db = b.degree();
    if (r.degree() < db) return {Poly(), r};
    std::vector<GaussQ> q(static_cast<size_t>(r.degree() - db) + 1);
    GaussQ inv_lc = b.lc().inv();
    std::vector<GaussQ> rc = r.coeffs();
    for (int k = r.degree(); k >= db; --k) {
        GaussQ f = rc[static_cast<size_t>(k)] * inv_lc;
        if (!f.is_zero()) {
            q[static_cast<size_t>(k - db)] = f;
            for (int j = 0; j <= db; ++j)
                rc[static_cast<size_t>(k - db + j)] -= f * b.coeff(j);
        }
        rc[static_cast<size_t>(k)] = GaussQ();
    }
    return {Poly(std::move(q)), Poly(std::move(rc))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    if (f.is_constant()) return out;
    // Yun's algorithm (characteristic zero)
    Poly fp = f.derivative();
    Poly a = poly_gcd(f, fp);
    Poly b = exact_div(f, a);
    Poly c = exact_div(fp, a);
    Poly d = c - b.derivative();
    int i = 1;
    while (!(b.degree() == 0)) {
        Poly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

GaussQ resultant(const Poly& a, int deg_a, const Poly& b, int deg_b) {
    if (deg_a < 0 || deg_b < 0) throw std::domain_error("resultant: negative nominal degree");
    if (deg_a == 0 && deg_b == 0) return GaussQ(1);
    int n = deg_a + deg_b;
    // Sylvester matrix, rows are shifted copies of b (deg_a rows) and a (deg_b rows)
    std::vector<std::vector<GaussQ>> m(static_cast<size_t>(n),
                                       std::vector<GaussQ>(static_cast<size_t>(n)));
    for (int r = 0; r < deg_b; ++r)
        for (int k = 0; k <= deg_a; ++k)
            m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.coeff(deg_a - k);
    for (int r = 0; r < deg_a; ++r)
        for (int k = 0; k <= deg_b; ++k)
            m[static_cast<size_t>(deg_b + r)][static_cast<size_t>(r + k)] = b.coeff(deg_b - k);
    // Gaussian elimination over the field
    GaussQ det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { piv = r; break; }
        if (piv < 0) return GaussQ();
        if (piv != col) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
            det = -det;
        }
        const GaussQ& p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        GaussQ ip = p.inv();
        for (int r = col + 1; r < n; ++r) {
            GaussQ f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] * ip;
            if (f.is_zero()) continue;
            for (int k = col; k < n; ++k)
                m[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    return det;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        GaussQ c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negated = false;
        if (!first) {
            // pull a leading minus out of purely real/imaginary coefficients
            if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                os << "-";
                cs = cs.substr(1);
                negated = true;
            } else {
                os << "+";
            }
        } else if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                   cs.find('-', 1) == std::string::npos) {
            os << "-";
            cs = cs.substr(1);
            negated = true;
        }
        (void)negated;
        bool mixed = cs.find('+') != std::string::npos ||
                     cs.find('-') != std::string::npos;
        if (k == 0) {
            os << (mixed ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (mixed ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace semiconj
