#include "enumcount/exactnum.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace enumcount {

namespace {

bool is_decimal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Pascal rows, row n has n + 1 entries. std::deque keeps existing rows in place
// while new ones are appended, so readers holding a shared lock see stable data.
class PascalCache {
public:
    ExactInteger get(long n, long k) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) return ExactInteger(rows_[n][k]);
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            std::vector<mpz_class> row(rows_.size() + 1);
            row.front() = 1;
            row.back() = 1;
            if (!rows_.empty()) {
                const auto& prev = rows_.back();
                for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
            }
            rows_.push_back(std::move(row));
        }
        return ExactInteger(rows_[n][k]);
    }

    std::size_t rows() const {
        std::shared_lock lock(mutex_);
        return rows_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::deque<std::vector<mpz_class>> rows_;
};

PascalCache& pascal_cache() {
    static PascalCache cache;
    return cache;
}

std::atomic<long> g_cutoff{1000};

}  // namespace

ExactInteger ExactInteger::from_decimal(std::string_view text) {
    if (!is_decimal(text)) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return ExactInteger(mpz_class(std::string(text), 10));
}

long ExactInteger::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + to_string());
    return value_.get_si();
}

ExactInteger ExactInteger::divided_exactly_by(const ExactInteger& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(value_.get_mpz_t(), rhs.value_.get_mpz_t()))
        throw std::domain_error(to_string() + " is not divisible by " + rhs.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return ExactInteger(std::move(q));
}

ExactInteger ExactInteger::pow(unsigned long exponent) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
    return ExactInteger(std::move(r));
}

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b) {
    return ExactInteger(mpz_class(::gcd(a.raw(), b.raw())));
}

ExactInteger ExactRational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
    return ExactInteger(mpz_class(value_.get_num()));
}

std::string ExactRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational ExactRational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactInteger::from_decimal(text);
    return rational(ExactInteger::from_decimal(text.substr(0, slash)),
                    ExactInteger::from_decimal(text.substr(slash + 1)));
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.sign() == 0) throw ZeroDenominatorError("division by zero rational");
    value_ /= rhs.value_;
    return *this;
}

ExactRational rational(const ExactInteger& num, const ExactInteger& den) {
    if (den.is_zero()) throw ZeroDenominatorError("zero denominator");
    mpq_class q(num.raw(), den.raw());
    q.canonicalize();
    return ExactRational(std::move(q));
}

ExactInteger factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactInteger(std::move(r));
}

ExactInteger binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return ExactInteger(0);
    if (n <= g_cutoff.load(std::memory_order_relaxed)) return pascal_cache().get(n, k);
    // multiplicative formula over the smaller side
    const long m = std::min(k, n - k);
    mpz_class r = 1;
    for (long j = 1; j <= m; ++j) {
        r *= n - m + j;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
    }
    return ExactInteger(std::move(r));
}

long binomial_cache_cutoff() { return g_cutoff.load(); }

void set_binomial_cache_cutoff(long cutoff) { g_cutoff.store(std::max(cutoff, -1L)); }

std::size_t binomial_cache_rows() { return pascal_cache().rows(); }

}  // namespace enumcount
