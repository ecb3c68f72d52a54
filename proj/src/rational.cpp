#include "hnc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hnc {

Rat make_rat(long num, long den) {
    if (den == 0)
        throw Error(ErrorCode::ValidationError, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string rat_to_string(const Rat& r) { return r.get_str(); }

namespace {

// Digit run without leading zeros ("0" itself is fine).
bool canonical_digits(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    if (s[begin] == '0' && end - begin > 1) return false;
    for (std::size_t i = begin; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::optional<Rat> try_parse_rat(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::size_t slash = text.find('/', pos);
    std::size_t num_end = (slash == std::string::npos) ? text.size() : slash;
    if (!canonical_digits(text, pos, num_end)) return std::nullopt;

    mpz_class num(text.substr(pos, num_end - pos), 10);
    mpz_class den(1);
    if (slash != std::string::npos) {
        if (!canonical_digits(text, slash + 1, text.size())) return std::nullopt;
        den = mpz_class(text.substr(slash + 1), 10);
        if (den == 0) return std::nullopt;
    }
    if (negative && num == 0) return std::nullopt; // "-0" is not canonical

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;

    if (negative) num = -num;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    auto r = try_parse_rat(text);
    if (!r)
        throw Error(ErrorCode::ParseError,
                    "invalid rational '" + text + "' (expected canonical \"p\" or \"p/q\")");
    return *r;
}

std::string rat_to_fixed(const Rat& r, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    mpz_class scaled_num = r.get_num() * scale;
    const mpz_class& den = r.get_den();

    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());

    // q <= value < q+1 with remainder rem/den; round half to even.
    mpz_class twice = 2 * rem;
    int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    bool negative = q < 0;
    mpz_class a = negative ? mpz_class(-q) : q;
    mpz_class ipart = a / scale;
    mpz_class frac = a % scale;

    std::string frac_str = frac.get_str();
    if (static_cast<int>(frac_str.size()) < digits)
        frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');

    std::string out;
    if (negative) out += '-';
    out += ipart.get_str();
    if (digits > 0) {
        out += '.';
        out += frac_str;
    }
    return out;
}

Rat smallest_denominator_between(const Rat& lo, const Rat& hi) {
    if (!(lo >= 0 && lo < hi))
        throw Error(ErrorCode::ValidationError,
                    "smallest_denominator_between requires 0 <= lo < hi");

    // Stern-Brocot descent over [0/1, 1/0); the first mediant landing in the
    // open interval is the unique fraction of minimal denominator there.
    mpz_class pl(0), ql(1), pr(1), qr(0);
    const mpz_class &a = lo.get_num(), &b = lo.get_den();
    const mpz_class &c = hi.get_num(), &d = hi.get_den();

    auto le_lo = [&](const mpz_class& p, const mpz_class& q) {
        return p * b <= a * q;
    };
    auto ge_hi = [&](const mpz_class& p, const mpz_class& q) {
        return p * d >= c * q;
    };
    // Largest step count keeping pred(base + k*dir) true, found by galloping.
    auto gallop = [](auto pred) {
        mpz_class k(1);
        while (pred(2 * k)) k *= 2;
        mpz_class step = k / 2;
        while (step > 0) {
            if (pred(k + step)) k += step;
            step /= 2;
        }
        return k;
    };

    for (;;) {
        mpz_class pm = pl + pr, qm = ql + qr;
        if (le_lo(pm, qm)) {
            mpz_class k = gallop(
                [&](const mpz_class& t) { return le_lo(pl + t * pr, ql + t * qr); });
            pl += k * pr;
            ql += k * qr;
        } else if (ge_hi(pm, qm)) {
            mpz_class k = gallop(
                [&](const mpz_class& t) { return ge_hi(pr + t * pl, qr + t * ql); });
            pr += k * pl;
            qr += k * ql;
        } else {
            Rat m(pm, qm);
            m.canonicalize();
            return m;
        }
    }
}

} // namespace hnc
