// beurling-lab: discrete Beurling number systems.
//
// A system is a finite nondecreasing multiset of real primes > 1 together
// with the multiplicative semigroup they generate up to a cutoff. Integers
// with the same numerical value but different factorizations are distinct
// entries; ties are ordered lexicographically by exponent vector.

#ifndef BEURLING_SYSTEMS_HPP
#define BEURLING_SYSTEMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace beurling {

struct PrimeSequence {
    std::vector<double> primes; // nondecreasing, each > 1
    std::string label;

    PrimeSequence() = default;
    PrimeSequence(std::vector<double> p, std::string lbl);

    // One decimal prime per line, '#' starts a comment.
    static PrimeSequence from_file(const std::string& path);
    void to_file(const std::string& path) const;
};

struct GenInteger {
    double value = 1.0;
    // (prime index, multiplicity), sorted by index; empty for 1.
    std::vector<std::pair<uint32_t, uint32_t>> exponents;
};

// mu = 0 if any exponent >= 2, else (-1)^(#prime factors).
int moebius(const GenInteger& n);
// d = prod (e_i + 1).
long divisor_d(const GenInteger& n);

struct WellBehavedCertificate {
    double A = 0.0;      // density estimate
    double theta = 0.0;  // exponent in [0,1)
    double K_const = 0.0; // measured sup |N(x)-Ax| / x^theta over the fit grid
};

struct EnumerationBudget {
    size_t max_items = 10'000'000;
};

class IntegerStream {
  public:
    IntegerStream() = default;

    const std::vector<GenInteger>& items() const { return items_; }
    const std::vector<double>& prime_values() const { return prime_values_; }
    double cutoff() const { return cutoff_; }
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    // N(x) = #{k : n_k <= x}; requires x <= cutoff.
    long count_N(double x) const;
    // #{k : |x - n_k| <= lambda}, endpoints inclusive; requires x+lambda <= cutoff.
    long chi(double x, double lambda) const;
    // psi(x) = sum of Lambda(n_k) over n_k <= x.
    double chebyshev_psi(double x) const;
    // sum_{n_k <= x} d(n_k)^j.
    double divisor_moment(double x, int j) const;
    // sum_{n_k <= x} chi(n_k, 1)^p; requires x+1 <= cutoff.
    double ramanujan_moment(double x, double p) const;
    // Least-squares density fit and measured O-constant on a 64-point log grid.
    WellBehavedCertificate fit_certificate(double theta) const;

    // True when some entry's value is within relative 2^-40 of x.
    bool contains_value(double x) const;

    // Estimated heap-resident bytes of the item storage.
    size_t memory_bytes() const;

    void export_csv(const std::string& path) const;

    friend IntegerStream enumerate_integers(const PrimeSequence& primes, double x_max,
                                            const EnumerationBudget& budget);

  private:
    std::vector<GenInteger> items_; // sorted by (value, lex exponents)
    std::vector<double> prime_values_;
    std::vector<double> lambda_prefix_; // prefix sums of Lambda
    double cutoff_ = 0.0;
};

// Complete sorted enumeration of the semigroup up to x_max.
IntegerStream enumerate_integers(const PrimeSequence& primes, double x_max,
                                 const EnumerationBudget& budget = {});

} // namespace beurling

#endif
