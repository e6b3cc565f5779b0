#include "conglab/padic.hpp"

namespace conglab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Witness set proven sufficient for all n < 3.3 * 10^24, hence all u64.
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimePower::PrimePower(std::uint64_t prime, unsigned exponent)
    : p(prime), alpha(exponent) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimePower: " + std::to_string(prime) +
                                    " is not prime");
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, alpha);
}

Valuation ord(std::uint64_t p, const Int& n) {
    if (p < 2) throw std::invalid_argument("ord: p must be >= 2");
    if (n == 0) return Valuation::infinity();
    Int reduced;
    Int f(static_cast<unsigned long>(p));
    mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), f.get_mpz_t());
    return Valuation::finite(Int(static_cast<unsigned long>(e)));
}

Int factorial_valuation(std::uint64_t p, const Int& n) {
    if (p < 2) throw std::invalid_argument("factorial_valuation: p must be >= 2");
    if (n < 0) throw std::invalid_argument("factorial_valuation: n must be >= 0");
    Int acc = 0;
    Int t = n / static_cast<unsigned long>(p);
    while (t > 0) {
        acc += t;
        t /= static_cast<unsigned long>(p);
    }
    return acc;
}

long tau_carries(std::uint64_t p, const Int& a, const Int& b) {
    if (p < 2) throw std::invalid_argument("tau_carries: p must be >= 2");
    if (a < 0 || b < 0)
        throw std::invalid_argument("tau_carries: operands must be >= 0");
    Int x = a, y = b;
    long carries = 0;
    unsigned long carry = 0;
    while (x > 0 || y > 0 || carry != 0) {
        unsigned long dx = mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        unsigned long dy = mpz_fdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), p);
        carry = (dx + dy + carry >= p) ? 1 : 0;
        carries += static_cast<long>(carry);
    }
    return carries;
}

Int least_residue(const Int& r, const PrimePower& pp) {
    Int out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), pp.modulus.get_mpz_t());
    return out;
}

Int binomial(const Int& n, const Int& k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (kk > n - kk) kk = n - kk;
    if (!kk.fits_ulong_p())
        throw std::length_error("binomial: k out of feasible range");
    unsigned long steps = kk.get_ui();
    Int result = 1;
    Int factor = n - kk;
    for (unsigned long i = 1; i <= steps; ++i) {
        ++factor;  // n - kk + i
        result *= factor;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

Int pow_mod_reduced(const Int& base, const Int& exponent, const PrimePower& pp) {
    if (exponent < 0)
        throw std::invalid_argument("pow_mod_reduced: exponent must be >= 0");
    if (pp.alpha == 0) return 0;
    if (exponent == 0) return 1;

    bool negate = (base < 0) && mpz_odd_p(exponent.get_mpz_t());
    Int b = abs(base);
    if (b == 0) return 0;

    Int result;
    Int unit;
    mp_bitcnt_t t = mpz_remove(unit.get_mpz_t(), b.get_mpz_t(),
                               Int(static_cast<unsigned long>(pp.p)).get_mpz_t());
    if (t > 0) {
        // b = p^t * unit; the p-part vanishes mod p^alpha iff t*exponent >= alpha
        if (Int(static_cast<unsigned long>(t)) * exponent >= pp.alpha) {
            result = 0;
        } else {
            // t*exponent < alpha forces a tiny exponent; no reduction needed
            unsigned long e = exponent.get_ui();
            Int ppart;
            mpz_ui_pow_ui(ppart.get_mpz_t(), pp.p,
                          static_cast<unsigned long>(t) * e);
            Int upow;
            mpz_powm_ui(upow.get_mpz_t(), unit.get_mpz_t(), e,
                        pp.modulus.get_mpz_t());
            result = ppart * upow % pp.modulus;
        }
    } else {
        // unit base: reduce the exponent modulo phi(p^alpha) = p^(alpha-1)(p-1)
        Int phi;
        mpz_ui_pow_ui(phi.get_mpz_t(), pp.p, pp.alpha - 1);
        phi *= static_cast<unsigned long>(pp.p - 1);
        Int e_red = exponent % phi;
        mpz_powm(result.get_mpz_t(), b.get_mpz_t(), e_red.get_mpz_t(),
                 pp.modulus.get_mpz_t());
    }
    if (negate && result != 0) result = pp.modulus - result;
    return result;
}

unsigned floor_log(std::uint64_t p, const Int& m) {
    if (p < 2) throw std::invalid_argument("floor_log: p must be >= 2");
    if (m < 1) throw std::invalid_argument("floor_log: m must be >= 1");
    unsigned e = 0;
    Int pw = static_cast<unsigned long>(p);
    while (pw <= m) {
        pw *= static_cast<unsigned long>(p);
        ++e;
    }
    return e;
}

ValuedRational::ValuedRational(Int numerator, Int denominator) {
    if (denominator == 0)
        throw std::invalid_argument("ValuedRational: zero denominator");
    value_ = Rat(std::move(numerator), std::move(denominator));
    value_.canonicalize();
}

Valuation ValuedRational::valuation_at(std::uint64_t p) const {
    Int num = value_.get_num();
    if (num == 0) return Valuation::infinity();
    Valuation vn = ord(p, num);
    Valuation vd = ord(p, Int(value_.get_den()));
    return Valuation::finite(vn.value() - vd.value());
}

Int ValuedRational::residue_mod_p(std::uint64_t p) const {
    PrimePower pp(p, 1);
    Int den = value_.get_den();
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(),
                   pp.modulus.get_mpz_t()) == 0)
        throw std::domain_error("ValuedRational: value is not p-integral");
    return least_residue(Int(value_.get_num()) * den_inv, pp);
}

std::string ValuedRational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool congruent_mod(const ValuedRational& x, const ValuedRational& y,
                   std::uint64_t p, const Int& e) {
    return (x - y).valuation_at(p) >= e;
}

}  // namespace conglab
