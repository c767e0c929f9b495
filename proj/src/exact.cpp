#include "polarcg/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace polarcg::exact {

namespace {

std::mutex g_factorial_mutex;
std::vector<Int>& factorial_cache() {
    static std::vector<Int> cache{Int(1)}; // 0! = 1
    return cache;
}

std::mutex g_pochhammer_mutex;
std::map<std::pair<Rat, long>, Rat>& pochhammer_cache() {
    static std::map<std::pair<Rat, long>, Rat> cache;
    return cache;
}

} // namespace

Int factorial(long n) {
    if (n < 0) throw domain_error("factorial: negative argument " + std::to_string(n));
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    auto& cache = factorial_cache();
    while (static_cast<long>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    }
    return cache[static_cast<std::size_t>(n)];
}

Int binomial(long n, long k) {
    if (n < 0) throw domain_error("binomial: negative n");
    if (k < 0 || k > n) return Int(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Rat binomial_general(const Rat& a, long k) {
    if (k < 0) return Rat(0);
    Rat result(1);
    Rat term = a;
    for (long i = 0; i < k; ++i) {
        result *= term;
        term -= 1;
    }
    result /= Rat(factorial(k));
    result.canonicalize();
    return result;
}

Rat pochhammer(const Rat& a, long n) {
    if (n < 0) throw domain_error("pochhammer: negative length");
    if (n == 0) return Rat(1);
    {
        std::lock_guard<std::mutex> lock(g_pochhammer_mutex);
        auto it = pochhammer_cache().find({a, n});
        if (it != pochhammer_cache().end()) return it->second;
    }
    Rat result(1);
    Rat term = a;
    for (long i = 0; i < n; ++i) {
        result *= term;
        term += 1;
    }
    result.canonicalize();
    std::lock_guard<std::mutex> lock(g_pochhammer_mutex);
    pochhammer_cache().emplace(std::make_pair(a, n), result);
    return result;
}

void squarefree_decompose(const Int& n, Int& square_root_part, Int& squarefree_part) {
    if (n <= 0) throw domain_error("squarefree_decompose: argument must be positive");
    // Trial division. The radicands reaching this point are factorial-smooth
    // at desk scale, so the loop stays short; a final perfect-square check
    // covers a large leftover cofactor.
    Int remaining = n;
    square_root_part = 1;
    squarefree_part = 1;
    unsigned long p = 2;
    while (remaining > 1) {
        Int p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), p, 2);
        if (p2 > remaining) break;
        unsigned long count = 0;
        while (mpz_divisible_ui_p(remaining.get_mpz_t(), p)) {
            mpz_divexact_ui(remaining.get_mpz_t(), remaining.get_mpz_t(), p);
            ++count;
        }
        if (count > 0) {
            Int half_pow;
            mpz_ui_pow_ui(half_pow.get_mpz_t(), p, count / 2);
            square_root_part *= half_pow;
            if (count % 2 == 1) squarefree_part *= static_cast<long>(p);
        }
        p = (p == 2) ? 3 : p + 2;
    }
    if (remaining > 1) {
        if (mpz_perfect_square_p(remaining.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), remaining.get_mpz_t());
            square_root_part *= root;
        } else {
            // remaining has no prime factor below its square root: prime,
            // hence squarefree.
            squarefree_part *= remaining;
        }
    }
}

RadicalSum sqrt_normalize(const Rat& r) {
    if (sgn(r) < 0) throw domain_error("sqrt_normalize: negative radicand " + rat_to_string(r));
    RadicalSum result;
    if (sgn(r) == 0) return result;
    Int num_root, num_free, den_root, den_free;
    squarefree_decompose(r.get_num(), num_root, num_free);
    squarefree_decompose(r.get_den(), den_root, den_free);
    // r = (num_root^2 num_free) / (den_root^2 den_free)
    //   = (num_root / (den_root den_free))^2 * (num_free den_free).
    // The stored radicand is the squarefree positive integer representing
    // r's square class; class uniqueness is what makes map equality an
    // exact zero test.
    Rat coeff(num_root, den_root * den_free);
    coeff.canonicalize();
    Rat radicand(num_free * den_free);
    result.insert_canonical(coeff, radicand);
    return result;
}

RadicalSum::RadicalSum(const Rat& rational) {
    if (sgn(rational) != 0) terms_.emplace(Rat(1), rational);
}

bool RadicalSum::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

int RadicalSum::sign() const {
    if (terms_.empty()) return 0;
    int s = sgn(terms_.begin()->second);
    for (const auto& [rad, coeff] : terms_) {
        if (sgn(coeff) != s)
            throw internal_error("RadicalSum::sign: mixed-sign multi-term sum");
    }
    return s;
}

RadicalSum RadicalSum::squared() const { return *this * *this; }

Rat RadicalSum::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw internal_error("RadicalSum::as_rational: value is irrational");
    return terms_.begin()->second;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum result;
    for (const auto& [rad, coeff] : terms_) result.terms_.emplace(rad, -coeff);
    return result;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    for (const auto& [rad, coeff] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(rad, coeff);
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) { return *this += -other; }

RadicalSum& RadicalSum::operator*=(const RadicalSum& other) {
    RadicalSum result;
    for (const auto& [ra, ca] : terms_) {
        for (const auto& [rb, cb] : other.terms_) {
            Rat product = ra * rb;
            product.canonicalize();
            result.add_term(ca * cb, product);
        }
    }
    terms_ = std::move(result.terms_);
    return *this;
}

RadicalSum& RadicalSum::operator*=(const Rat& factor) {
    if (sgn(factor) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rad, coeff] : terms_) coeff *= factor;
    return *this;
}

RadicalSum RadicalSum::inverse() const {
    if (terms_.empty()) throw domain_error("RadicalSum::inverse: division by zero");
    if (terms_.size() != 1)
        throw internal_error("RadicalSum::inverse: only single-term sums are invertible here");
    const auto& [rad, coeff] = *terms_.begin();
    // 1/(q sqrt(s)) = (1/(q s)) sqrt(s)
    RadicalSum result;
    Rat inv_coeff = Rat(1) / (coeff * rad);
    inv_coeff.canonicalize();
    result.terms_.emplace(rad, inv_coeff);
    return result;
}

void RadicalSum::add_term(const Rat& coeff, const Rat& radicand) {
    if (sgn(coeff) == 0) return;
    if (sgn(radicand) <= 0) throw domain_error("RadicalSum: radicand must be positive");
    const RadicalSum normalized = sqrt_normalize(radicand);
    const auto& [canonical_rad, extra] = *normalized.terms_.begin();
    insert_canonical(coeff * extra, canonical_rad);
}

void RadicalSum::insert_canonical(const Rat& coeff, const Rat& radicand) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

double RadicalSum::to_double() const {
    double total = 0.0;
    for (const auto& [rad, coeff] : terms_) {
        mpf_class value(coeff, 128);
        mpf_class root(rad, 128);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        value *= root;
        total += value.get_d();
    }
    return total;
}

Rat half_angle_beta(long p, long q) {
    if (p < 0 || q < 0) throw domain_error("half_angle_beta: negative exponent");
    if (p % 2 != 0 || q % 2 != 0)
        throw domain_error("half_angle_beta: odd exponent (p=" + std::to_string(p) +
                           ", q=" + std::to_string(q) + ")");
    Rat value(2 * factorial(q / 2) * factorial(p / 2), factorial((p + q) / 2 + 1));
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

std::string to_string(const RadicalSum& value) {
    if (value.is_zero()) return "0";
    // Display form: the squarefree part of the coefficient's denominator is
    // folded under the root, giving the `(p/q)*sqrt(r/s)` shape of the
    // interchange format ("(1/3)*sqrt(3)" prints as "(1/1)*sqrt(1/3)").
    struct DisplayTerm {
        Rat display_radicand;
        bool negative;
        bool plain;
        Rat plain_value;
        Int coeff_num, coeff_den, rad_num, rad_den;
    };
    std::vector<DisplayTerm> terms;
    for (const auto& [rad, coeff] : value.terms()) {
        DisplayTerm term;
        term.negative = sgn(coeff) < 0;
        if (rad == 1) {
            term.plain = true;
            term.plain_value = abs(coeff);
            term.display_radicand = Rat(1);
        } else {
            term.plain = false;
            const Rat coeff_abs = abs(coeff);
            const Int s = rad.get_num();
            Int g;
            mpz_gcd(g.get_mpz_t(), coeff_abs.get_den().get_mpz_t(), s.get_mpz_t());
            term.coeff_num = coeff_abs.get_num() * g;
            term.coeff_den = coeff_abs.get_den();
            Int reduce;
            mpz_gcd(reduce.get_mpz_t(), term.coeff_num.get_mpz_t(), term.coeff_den.get_mpz_t());
            term.coeff_num /= reduce;
            term.coeff_den /= reduce;
            term.rad_num = s / g;
            term.rad_den = g;
            term.display_radicand = Rat(term.rad_num, term.rad_den);
            term.display_radicand.canonicalize();
        }
        terms.push_back(std::move(term));
    }
    std::sort(terms.begin(), terms.end(), [](const DisplayTerm& a, const DisplayTerm& b) {
        return cmp(a.display_radicand, b.display_radicand) < 0;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms) {
        if (first) {
            if (term.negative) out << "-";
            first = false;
        } else {
            out << (term.negative ? " - " : " + ");
        }
        if (term.plain) {
            out << term.plain_value;
        } else {
            out << "(" << term.coeff_num << "/" << term.coeff_den << ")*sqrt(" << term.rad_num
                << "/" << term.rad_den << ")";
        }
    }
    return out.str();
}

namespace {

Rat parse_rational(std::string_view text) {
    std::string buffer(text);
    Rat value;
    if (mpq_set_str(value.get_mpq_t(), buffer.c_str(), 10) != 0)
        throw domain_error("radical_from_string: malformed rational '" + buffer + "'");
    value.canonicalize();
    return value;
}

// Parses one term body: either "p/q" (plain rational) or "(p/q)*sqrt(r/s)".
void parse_term(std::string_view body, bool negative, RadicalSum& into) {
    if (body.empty()) throw domain_error("radical_from_string: empty term");
    Rat coeff;
    Rat radicand(1);
    if (body.front() == '(') {
        auto close = body.find(")*sqrt(");
        if (close == std::string_view::npos || body.back() != ')')
            throw domain_error("radical_from_string: malformed radical term");
        coeff = parse_rational(body.substr(1, close - 1));
        auto rad_text = body.substr(close + 7, body.size() - close - 8);
        radicand = parse_rational(rad_text);
    } else {
        coeff = parse_rational(body);
    }
    if (negative) coeff = -coeff;
    into.add_term(coeff, radicand);
}

} // namespace

RadicalSum radical_from_string(std::string_view text) {
    RadicalSum result;
    if (text == "0") return result;
    if (text.empty()) throw domain_error("radical_from_string: empty input");
    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    std::size_t start = 0;
    while (true) {
        std::size_t plus = text.find(" + ", start);
        std::size_t minus = text.find(" - ", start);
        std::size_t split = std::min(plus, minus);
        if (split == std::string_view::npos) {
            parse_term(text.substr(start), negative, result);
            break;
        }
        parse_term(text.substr(start, split - start), negative, result);
        negative = (split == minus);
        start = split + 3;
    }
    return result;
}

std::string to_decimal_string(const RadicalSum& value, int digits) {
    if (digits < 0) throw domain_error("to_decimal_string: negative precision");
    const unsigned long prec_bits = 64 + static_cast<unsigned long>(digits) * 4;
    mpf_class total(0, prec_bits);
    for (const auto& [rad, coeff] : value.terms()) {
        mpf_class term(coeff, prec_bits);
        mpf_class root(rad, prec_bits);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        term *= root;
        total += term;
    }
    mp_exp_t exponent = 0;
    // Round at the requested number of fractional digits.
    mpf_class scale(1, prec_bits);
    for (int i = 0; i < digits; ++i) scale *= 10;
    total *= scale;
    mpz_class scaled;
    mpz_set_f(scaled.get_mpz_t(), mpf_class(total + (sgn(total) >= 0 ? 0.5 : -0.5)).get_mpf_t());
    bool negative = sgn(scaled) < 0;
    mpz_class magnitude = abs(scaled);
    std::string digits_str = magnitude.get_str();
    (void)exponent;
    if (digits == 0) return (negative ? "-" : "") + digits_str;
    if (static_cast<int>(digits_str.size()) <= digits)
        digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + digits_str;
}

} // namespace polarcg::exact
