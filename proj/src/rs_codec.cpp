#include "dramecc/rs_codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dramecc {

const char* to_string(RsOutcomeKind kind) noexcept
{
    switch (kind) {
    case RsOutcomeKind::NoError: return "no-error";
    case RsOutcomeKind::Corrected: return "corrected";
    case RsOutcomeKind::Uncorrectable: return "uncorrectable";
    }
    return "?";
}

ReedSolomonCode::ReedSolomonCode(int n, int k, const GaloisField& field)
    : n_(n), k_(k), field_(&field)
{
    if (k <= 0 || n <= k || n > kMaxLength)
        throw std::invalid_argument("RS code needs 0 < k < n <= 255, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    const int nroots = n - k;

    // Build prod (x - a^i) with coefficients lowest degree first, then flip.
    std::vector<FieldElement> low(1, 1);
    for (int i = 1; i <= nroots; ++i) {
        const FieldElement root = field.alpha_pow(i);
        std::vector<FieldElement> next(low.size() + 1, 0);
        for (std::size_t j = 0; j < low.size(); ++j) {
            next[j + 1] ^= low[j];
            next[j] ^= field.mul(low[j], root);
        }
        low = std::move(next);
    }
    generator_.assign(low.rbegin(), low.rend());

    gen_mul_.resize(static_cast<std::size_t>(nroots));
    root_mul_.resize(static_cast<std::size_t>(nroots));
    for (int j = 0; j < nroots; ++j) {
        const FieldElement g = generator_[static_cast<std::size_t>(j + 1)];
        const FieldElement r = field.alpha_pow(j + 1);
        for (unsigned x = 0; x < 256; ++x) {
            gen_mul_[static_cast<std::size_t>(j)][x] = field.mul(g, static_cast<FieldElement>(x));
            root_mul_[static_cast<std::size_t>(j)][x] = field.mul(r, static_cast<FieldElement>(x));
        }
    }

    if (nroots > 16)
        return;
    lut_words_ = nroots > 8 ? 2 : 1;
    const auto words = static_cast<std::size_t>(lut_words_);
    parity_lut_.assign(static_cast<std::size_t>(k) * 256 * words, 0);
    syndrome_lut_.assign(static_cast<std::size_t>(n) * 256 * words, 0);
    auto put = [](std::uint64_t* entry, int j, FieldElement v) {
        entry[j / 8] |= static_cast<std::uint64_t>(v) << (8 * (j % 8));
    };
    std::vector<FieldElement> unit(static_cast<std::size_t>(k));
    std::vector<FieldElement> cw(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
        std::fill(unit.begin(), unit.end(), 0);
        unit[static_cast<std::size_t>(i)] = 1;
        encode_lfsr(unit, cw);
        for (unsigned x = 0; x < 256; ++x) {
            std::uint64_t* entry = &parity_lut_[(static_cast<std::size_t>(i) * 256 + x) * words];
            for (int j = 0; j < nroots; ++j)
                put(entry, j, field.mul(cw[static_cast<std::size_t>(k + j)], static_cast<FieldElement>(x)));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (unsigned x = 0; x < 256; ++x) {
            std::uint64_t* entry = &syndrome_lut_[(static_cast<std::size_t>(i) * 256 + x) * words];
            for (int j = 0; j < nroots; ++j)
                put(entry, j,
                    field.mul(static_cast<FieldElement>(x),
                              field.alpha_pow(static_cast<long long>(j + 1) * (n - 1 - i))));
        }
    }
}

void ReedSolomonCode::length_error(std::size_t got, std::size_t want, const char* what)
{
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) + " symbols, got " +
                                std::to_string(got));
}

std::vector<FieldElement> ReedSolomonCode::encode(std::span<const FieldElement> data) const
{
    std::vector<FieldElement> out(static_cast<std::size_t>(n_));
    encode_into(data, out);
    return out;
}

void ReedSolomonCode::encode_into(std::span<const FieldElement> data,
                                  std::span<FieldElement> out) const
{
    check_length(data.size(), static_cast<std::size_t>(k_), "rs encode data");
    check_length(out.size(), static_cast<std::size_t>(n_), "rs encode output");
    if (lut_words_ == 0) {
        encode_lfsr(data, out);
        return;
    }
    std::uint64_t acc[2] = {0, 0};
    const std::uint64_t* lut = parity_lut_.data();
    if (lut_words_ == 1) {
        for (int i = 0; i < k_; ++i)
            acc[0] ^= lut[static_cast<std::size_t>(i) * 256 + data[static_cast<std::size_t>(i)]];
    } else {
        for (int i = 0; i < k_; ++i) {
            const std::uint64_t* e = lut + (static_cast<std::size_t>(i) * 256 + data[static_cast<std::size_t>(i)]) * 2;
            acc[0] ^= e[0];
            acc[1] ^= e[1];
        }
    }
    if (out.data() != data.data())
        std::copy(data.begin(), data.end(), out.begin());
    for (int j = 0; j < n_ - k_; ++j)
        out[static_cast<std::size_t>(k_ + j)] = static_cast<FieldElement>(acc[j / 8] >> (8 * (j % 8)));
}

void ReedSolomonCode::encode_lfsr(std::span<const FieldElement> data, std::span<FieldElement> out) const
{
    const int nroots = n_ - k_;

    // LFSR division of d(x) * x^(n-k) by g(x); reg[0] is the highest term.
    std::array<FieldElement, kMaxLength> reg;
    std::fill_n(reg.begin(), nroots, FieldElement{0});
    for (int i = 0; i < k_; ++i) {
        const FieldElement fb = data[static_cast<std::size_t>(i)] ^ reg[0];
        for (int j = 0; j < nroots - 1; ++j)
            reg[static_cast<std::size_t>(j)] =
                reg[static_cast<std::size_t>(j + 1)] ^ gen_mul_[static_cast<std::size_t>(j)][fb];
        reg[static_cast<std::size_t>(nroots - 1)] =
            gen_mul_[static_cast<std::size_t>(nroots - 1)][fb];
    }
    if (out.data() != data.data())
        std::copy(data.begin(), data.end(), out.begin());
    std::copy_n(reg.begin(), nroots, out.begin() + k_);
}

bool ReedSolomonCode::syndromes_into(std::span<const FieldElement> word,
                                     std::span<FieldElement> out) const
{
    check_length(word.size(), static_cast<std::size_t>(n_), "rs syndromes");
    const int nroots = n_ - k_;
    if (lut_words_ != 0) {
        std::uint64_t acc[2] = {0, 0};
        const std::uint64_t* lut = syndrome_lut_.data();
        if (lut_words_ == 1) {
            for (int i = 0; i < n_; ++i)
                acc[0] ^= lut[static_cast<std::size_t>(i) * 256 + word[static_cast<std::size_t>(i)]];
        } else {
            for (int i = 0; i < n_; ++i) {
                const std::uint64_t* e =
                    lut + (static_cast<std::size_t>(i) * 256 + word[static_cast<std::size_t>(i)]) * 2;
                acc[0] ^= e[0];
                acc[1] ^= e[1];
            }
        }
        for (int j = 0; j < nroots; ++j)
            out[static_cast<std::size_t>(j)] = static_cast<FieldElement>(acc[j / 8] >> (8 * (j % 8)));
        return (acc[0] | acc[1]) == 0;
    }
    FieldElement any = 0;
    for (int j = 0; j < nroots; ++j) {
        const auto& mul = root_mul_[static_cast<std::size_t>(j)];
        FieldElement s = 0;
        for (const FieldElement w : word)
            s = mul[s] ^ w;
        out[static_cast<std::size_t>(j)] = s;
        any |= s;
    }
    return any == 0;
}

std::vector<FieldElement> ReedSolomonCode::syndromes(std::span<const FieldElement> word) const
{
    std::vector<FieldElement> s(static_cast<std::size_t>(n_ - k_));
    syndromes_into(word, s);
    return s;
}

bool ReedSolomonCode::is_codeword(std::span<const FieldElement> word) const
{
    std::array<FieldElement, kMaxLength> s{};
    return syndromes_into(word, std::span(s).first(static_cast<std::size_t>(n_ - k_)));
}

RsOutcomeKind ReedSolomonCode::apply_locator(std::span<FieldElement> word,
                                             std::span<const FieldElement> synd,
                                             const Poly& lambda, int degree,
                                             std::vector<int>* positions) const
{
    const GaloisField& gf = *field_;
    const int nroots = n_ - k_;
    if (degree < 1 || degree > t())
        return RsOutcomeKind::Uncorrectable;

    // Single error: the locator root gives X directly and omega = S_1.
    if (degree == 1) {
        const FieldElement x = lambda[1];
        if (x == 0 || synd[0] == 0)
            return RsOutcomeKind::Uncorrectable;
        const int e = static_cast<int>(gf.log(x));
        if (e >= n_)
            return RsOutcomeKind::Uncorrectable;
        const int pos = n_ - 1 - e;
        word[static_cast<std::size_t>(pos)] ^= gf.div(synd[0], x);
        if (positions != nullptr)
            positions->assign(1, pos);
        return RsOutcomeKind::Corrected;
    }

    // Chien search restricted to the n real positions. Position i carries
    // locator X = a^(n-1-i); it is an error iff lambda(X^-1) == 0.
    std::array<FieldElement, kMaxLength + 1> term;
    std::array<FieldElement, kMaxLength + 1> step;
    for (int j = 0; j <= degree; ++j) {
        term[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)];
        step[static_cast<std::size_t>(j)] = gf.alpha_pow(-j);
    }
    std::array<int, kMaxLength> roots;
    int count = 0;
    for (int e = 0; e < n_; ++e) {
        FieldElement sum = 0;
        for (int j = 0; j <= degree; ++j)
            sum ^= term[static_cast<std::size_t>(j)];
        if (sum == 0) {
            if (count == degree)
                return RsOutcomeKind::Uncorrectable;
            roots[static_cast<std::size_t>(count++)] = e;
        }
        for (int j = 1; j <= degree; ++j)
            term[static_cast<std::size_t>(j)] =
                gf.mul(term[static_cast<std::size_t>(j)], step[static_cast<std::size_t>(j)]);
    }
    if (count != degree)
        return RsOutcomeKind::Uncorrectable;

    // omega = S(x) * lambda(x) mod x^(n-k); only the low `degree` terms are
    // nonzero for a consistent locator.
    std::array<FieldElement, kMaxLength> omega;
    for (int i = 0; i < nroots; ++i) {
        FieldElement acc = 0;
        for (int j = 0; j <= std::min(i, degree); ++j)
            acc ^= gf.mul(lambda[static_cast<std::size_t>(j)], synd[static_cast<std::size_t>(i - j)]);
        omega[static_cast<std::size_t>(i)] = acc;
    }

    std::array<FieldElement, kMaxLength> magnitude;
    for (int r = 0; r < count; ++r) {
        const int e = roots[static_cast<std::size_t>(r)];
        const FieldElement xinv = gf.alpha_pow(-e);
        FieldElement num = 0;
        FieldElement xp = 1;
        for (int i = 0; i < nroots; ++i) {
            num ^= gf.mul(omega[static_cast<std::size_t>(i)], xp);
            xp = gf.mul(xp, xinv);
        }
        // Formal derivative keeps the odd-degree terms only.
        FieldElement den = 0;
        const FieldElement xinv2 = gf.mul(xinv, xinv);
        xp = 1;
        for (int j = 1; j <= degree; j += 2) {
            den ^= gf.mul(lambda[static_cast<std::size_t>(j)], xp);
            xp = gf.mul(xp, xinv2);
        }
        if (den == 0 || num == 0)
            return RsOutcomeKind::Uncorrectable;
        magnitude[static_cast<std::size_t>(r)] = gf.div(num, den);
    }

    for (int r = 0; r < count; ++r) {
        const int pos = n_ - 1 - roots[static_cast<std::size_t>(r)];
        word[static_cast<std::size_t>(pos)] ^= magnitude[static_cast<std::size_t>(r)];
    }
    if (positions != nullptr) {
        positions->clear();
        for (int r = count - 1; r >= 0; --r)
            positions->push_back(n_ - 1 - roots[static_cast<std::size_t>(r)]);
    }
    return RsOutcomeKind::Corrected;
}

RsOutcomeKind ReedSolomonCode::correct_with_syndromes(std::span<FieldElement> word,
                                                      std::span<const FieldElement> synd,
                                                      std::vector<int>* positions) const
{
    const GaloisField& gf = *field_;
    const int nroots = n_ - k_;

    // Berlekamp-Massey over all n-k syndromes.
    Poly c;
    Poly b;
    std::fill_n(c.begin(), nroots + 1, FieldElement{0});
    std::fill_n(b.begin(), nroots + 1, FieldElement{0});
    c[0] = 1;
    b[0] = 1;
    int len = 0;
    int shift = 1;
    FieldElement last = 1;
    for (int r = 0; r < nroots; ++r) {
        FieldElement d = synd[static_cast<std::size_t>(r)];
        for (int i = 1; i <= len; ++i)
            d ^= gf.mul(c[static_cast<std::size_t>(i)], synd[static_cast<std::size_t>(r - i)]);
        if (d == 0) {
            ++shift;
            continue;
        }
        const FieldElement coef = gf.div(d, last);
        if (2 * len <= r) {
            Poly prev;
            std::copy_n(c.begin(), nroots + 1, prev.begin());
            for (int i = 0; i + shift <= nroots; ++i)
                c[static_cast<std::size_t>(i + shift)] ^= gf.mul(coef, b[static_cast<std::size_t>(i)]);
            len = r + 1 - len;
            std::copy_n(prev.begin(), nroots + 1, b.begin());
            last = d;
            shift = 1;
        } else {
            for (int i = 0; i + shift <= nroots; ++i)
                c[static_cast<std::size_t>(i + shift)] ^= gf.mul(coef, b[static_cast<std::size_t>(i)]);
            ++shift;
        }
    }
    if (len > t())
        return RsOutcomeKind::Uncorrectable;
    return apply_locator(word, synd, c, len, positions);
}

RsOutcomeKind ReedSolomonCode::decode_in_place(std::span<FieldElement> word) const
{
    check_length(word.size(), static_cast<std::size_t>(n_), "rs decode");
    std::array<FieldElement, kMaxLength> synd;
    const auto s = std::span(synd).first(static_cast<std::size_t>(n_ - k_));
    if (syndromes_into(word, s))
        return RsOutcomeKind::NoError;
    return correct_with_syndromes(word, s, nullptr);
}

RsOutcomeKind ReedSolomonCode::correct_in_place(std::span<FieldElement> word,
                                                std::span<const FieldElement> synd) const
{
    check_length(word.size(), static_cast<std::size_t>(n_), "rs decode");
    check_length(synd.size(), static_cast<std::size_t>(n_ - k_), "rs syndromes");
    return correct_with_syndromes(word, synd, nullptr);
}

RsDecodeOutcome ReedSolomonCode::decode(std::span<const FieldElement> word) const
{
    check_length(word.size(), static_cast<std::size_t>(n_), "rs decode");
    RsDecodeOutcome out;
    out.corrected.assign(word.begin(), word.end());
    std::array<FieldElement, kMaxLength> synd{};
    const auto s = std::span(synd).first(static_cast<std::size_t>(n_ - k_));
    if (syndromes_into(word, s))
        return out;
    out.kind = correct_with_syndromes(out.corrected, s, &out.error_positions);
    if (out.kind == RsOutcomeKind::Uncorrectable) {
        out.corrected.clear();
        out.error_positions.clear();
    }
    out.error_count = static_cast<int>(out.error_positions.size());
    return out;
}

namespace {

// Polynomials below are lowest degree first with no trailing zeros; an empty
// vector is the zero polynomial.
using Vec = std::vector<FieldElement>;

int degree_of(const Vec& p) { return static_cast<int>(p.size()) - 1; }

void trim(Vec& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

} // namespace

RsDecodeOutcome ReedSolomonCode::decode_euclidean(std::span<const FieldElement> word) const
{
    check_length(word.size(), static_cast<std::size_t>(n_), "rs decode");
    const GaloisField& gf = *field_;
    const int nroots = n_ - k_;

    RsDecodeOutcome out;
    out.corrected.assign(word.begin(), word.end());
    const Vec synd = syndromes(word);
    if (std::all_of(synd.begin(), synd.end(), [](FieldElement s) { return s == 0; }))
        return out;

    Vec r_prev(static_cast<std::size_t>(nroots + 1), 0);
    r_prev.back() = 1; // x^(n-k)
    Vec r_cur = synd;
    trim(r_cur);
    Vec t_prev;
    Vec t_cur{1};

    while (!r_cur.empty() && 2 * degree_of(r_cur) >= nroots) {
        // Long division r_prev = q * r_cur + rem.
        Vec rem = r_prev;
        Vec q(static_cast<std::size_t>(degree_of(r_prev) - degree_of(r_cur) + 1), 0);
        const FieldElement lead_inv = gf.inv(r_cur.back());
        while (!rem.empty() && degree_of(rem) >= degree_of(r_cur)) {
            const int shift = degree_of(rem) - degree_of(r_cur);
            const FieldElement f = gf.mul(rem.back(), lead_inv);
            q[static_cast<std::size_t>(shift)] ^= f;
            for (std::size_t i = 0; i < r_cur.size(); ++i)
                rem[i + static_cast<std::size_t>(shift)] ^= gf.mul(f, r_cur[i]);
            trim(rem);
        }
        // t_next = t_prev - q * t_cur
        Vec t_next(std::max(t_prev.size(), q.size() + t_cur.size()), 0);
        std::copy(t_prev.begin(), t_prev.end(), t_next.begin());
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < t_cur.size(); ++j)
                t_next[i + j] ^= gf.mul(q[i], t_cur[j]);
        trim(t_next);

        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }

    auto fail = [&out] {
        out.kind = RsOutcomeKind::Uncorrectable;
        out.corrected.clear();
        return out;
    };

    if (t_cur.empty() || t_cur[0] == 0)
        return fail();
    const int deg = degree_of(t_cur);
    // A valid key-equation solution has deg(omega) < deg(lambda); otherwise
    // lambda does not generate the full syndrome sequence.
    if (deg > t() || degree_of(r_cur) >= deg)
        return fail();

    Poly lambda{};
    const FieldElement norm = gf.inv(t_cur[0]);
    for (int j = 0; j <= deg; ++j)
        lambda[static_cast<std::size_t>(j)] = gf.mul(t_cur[static_cast<std::size_t>(j)], norm);

    out.kind = apply_locator(out.corrected, synd, lambda, deg, &out.error_positions);
    if (out.kind == RsOutcomeKind::Uncorrectable)
        return fail();
    out.error_count = static_cast<int>(out.error_positions.size());
    return out;
}

} // namespace dramecc
