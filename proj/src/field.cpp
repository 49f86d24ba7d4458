#include "ffperm/field.hpp"

#include <limits>

namespace ffperm {

namespace {

constexpr Index kNoLog = std::numeric_limits<Index>::max();
constexpr std::uint64_t kExponentCap = std::uint64_t{1} << 63;

using u128 = unsigned __int128;

// Remainder of num modulo a monic den, both constant-first. Trailing zeros of
// the result are left in place.
Coeffs poly_rem(unsigned p, Coeffs num, const Coeffs& den) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t d = num.size(); d-- > dd;) {
        const unsigned t = num[d];
        if (t == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) {
            num[d - dd + i] = (num[d - dd + i] + (p - t) * den[i]) % p;
        }
    }
    num.resize(dd);
    return num;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string poly_to_string(const Coeffs& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
        if (i > 0) {
            if (c[i] != 1) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r) || r > kExponentCap) {
        throw FieldError("exponent exceeds 2^63");
    }
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r) || r > kExponentCap) {
        throw FieldError("exponent exceeds 2^63");
    }
    return r;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

bool is_irreducible(unsigned p, const Coeffs& monic) {
    if (monic.size() < 2 || monic.back() != 1) {
        throw FieldError("is_irreducible expects a monic polynomial of degree >= 1");
    }
    const std::size_t deg = monic.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = checked_pow(p, d);
        Coeffs div(d + 1, 0);
        div[d] = 1;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::uint64_t rest = t;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(rest % p);
                rest /= p;
            }
            const Coeffs r = poly_rem(p, monic, div);
            bool zero = true;
            for (unsigned x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

Coeffs smallest_irreducible(unsigned p, unsigned n) {
    const std::uint64_t count = checked_pow(p, n);
    Coeffs c(n + 1, 0);
    c[n] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
        std::uint64_t rest = t;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = static_cast<unsigned>(rest % p);
            rest /= p;
        }
        if (is_irreducible(p, c)) return c;
    }
    throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

Field Field::build(unsigned p, unsigned n, FieldLimits limits) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (n < 1) throw FieldError("extension degree must be >= 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n; ++i) {
        size *= p;
        if (size > limits.max_size) {
            throw FieldError("GF(" + std::to_string(p) + "^" + std::to_string(n) +
                             ") exceeds the size cap of " + std::to_string(limits.max_size));
        }
    }

    Field f;
    f.p_ = p;
    f.n_ = n;
    f.size_ = static_cast<Index>(size);
    f.order_ = f.size_ - 1;
    f.modulus_ = smallest_irreducible(p, n);

    // Generator: smallest index whose order is the full group order.
    const auto factors = prime_factors(f.order_);
    Index gen = 1;
    for (Index cand = 1; cand < f.size_; ++cand) {
        bool primitive = true;
        for (auto r : factors) {
            if (f.pow_reference(Elem(cand), f.order_ / r) == f.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }

    f.exp_.assign(f.order_, 0);
    f.log_.assign(f.size_, kNoLog);
    const Coeffs g = f.coeffs(Elem(gen));
    Coeffs cur = f.coeffs(f.one());
    for (Index i = 0; i < f.order_; ++i) {
        const Index idx = f.encode(cur);
        if (f.log_[idx] != kNoLog) throw FieldError("generator search failed");
        f.exp_[i] = idx;
        f.log_[idx] = i;
        cur = f.mul_coeffs(cur, g);
    }

    if (p != 2) {
        f.zech_.assign(f.order_, kNoLog);
        for (Index i = 0; i < f.order_; ++i) {
            const Index idx = f.exp_[i];
            const Index plus_one = (idx % p == p - 1) ? idx - (p - 1) : idx + 1;
            f.zech_[i] = plus_one == 0 ? kNoLog : f.log_[plus_one];
        }
    }
    return f;
}

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
    return Elem(static_cast<Index>(r));
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return Elem(a.v ^ b.v);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Index la = log_[a.v];
    const Index lb = log_[b.v];
    const Index d = lb >= la ? lb - la : lb + order_ - la;
    const Index z = zech_[d];
    if (z == kNoLog) return zero();
    return Elem(exp_[(static_cast<std::uint64_t>(la) + z) % order_]);
}

Elem Field::neg(Elem a) const {
    if (p_ == 2 || a.is_zero()) return a;
    return Elem(exp_[(static_cast<std::uint64_t>(log_[a.v]) + order_ / 2) % order_]);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return Elem(exp_[(static_cast<std::uint64_t>(log_[a.v]) + log_[b.v]) % order_]);
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw FieldError("inverse of zero");
    const Index l = log_[a.v];
    return Elem(exp_[l == 0 ? 0 : order_ - l]);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const u128 l = static_cast<u128>(log_[a.v]) * (e % order_);
    return Elem(exp_[static_cast<Index>(l % order_)]);
}

Elem Field::frobenius(Elem a, std::uint64_t e) const {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < e % n_; ++i) q *= p_;
    return pow(a, q);
}

Elem Field::trace_rel(Elem a, unsigned k) const {
    if (k == 0 || n_ != 3 * k) {
        throw FieldError("trace_rel needs degree 3k; got degree " + std::to_string(n_) +
                         " with k=" + std::to_string(k));
    }
    const Elem a1 = frobenius(a, k);
    const Elem a2 = frobenius(a1, k);
    return add(add(a, a1), a2);
}

bool Field::is_in_subfield(Elem a, unsigned m) const {
    if (m == 0 || n_ % m != 0) {
        throw FieldError(std::to_string(m) + " does not divide degree " + std::to_string(n_));
    }
    return frobenius(a, m) == a;
}

Elem Field::from_index(std::uint64_t i) const {
    if (i >= size_) throw FieldError("element index " + std::to_string(i) + " out of range");
    return Elem(static_cast<Index>(i));
}

Coeffs Field::coeffs(Elem a) const {
    Coeffs c(n_, 0);
    Index rest = a.v;
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = rest % p_;
        rest /= p_;
    }
    return c;
}

Index Field::encode(const Coeffs& c) const {
    Index v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return v;
}

Elem Field::from_coeffs(const Coeffs& c) const {
    if (c.size() != n_) throw FieldError("coefficient vector has wrong length");
    for (unsigned x : c) {
        if (x >= p_) throw FieldError("coefficient out of range");
    }
    return Elem(encode(c));
}

Coeffs Field::mul_coeffs(const Coeffs& a, const Coeffs& b) const {
    Coeffs prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
        }
    }
    return poly_rem(p_, std::move(prod), modulus_);
}

Elem Field::mul_reference(Elem a, Elem b) const {
    return Elem(encode(mul_coeffs(coeffs(a), coeffs(b))));
}

Elem Field::pow_reference(Elem a, std::uint64_t e) const {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul_reference(result, base);
        base = mul_reference(base, base);
        e >>= 1;
    }
    return result;
}

std::string Field::modulus_string() const { return poly_to_string(modulus_); }

std::string Field::to_string(Elem a) const { return poly_to_string(coeffs(a)); }

}  // namespace ffperm
