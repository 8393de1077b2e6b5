#include "beurling/systems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>

#include "beurling/csvio.hpp"
#include "beurling/errors.hpp"
#include "beurling/mpreal.hpp"

namespace beurling {

namespace {

constexpr double kTieRel = 0x1p-40;

// 192-bit recomputation of prod p_i^{e_i}; used only to stabilize the order
// of near-coincident values.
Real exact_value(const GenInteger& n, const std::vector<double>& primes) {
    Real acc(1.0, 192);
    for (auto [idx, e] : n.exponents) acc *= pow(Real(primes[idx], 192), static_cast<long>(e));
    return acc;
}

bool lex_less(const GenInteger& a, const GenInteger& b) {
    return a.exponents < b.exponents;
}

} // namespace

PrimeSequence::PrimeSequence(std::vector<double> p, std::string lbl)
    : primes(std::move(p)), label(std::move(lbl)) {
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!(primes[i] > 1.0)) throw domain_error("PrimeSequence: primes must exceed 1");
        if (i > 0 && primes[i] < primes[i - 1])
            throw domain_error("PrimeSequence: primes must be nondecreasing");
    }
}

PrimeSequence PrimeSequence::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open prime file: " + path);
    std::vector<double> ps;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        ps.push_back(std::stod(line.substr(b)));
    }
    std::sort(ps.begin(), ps.end());
    return PrimeSequence(std::move(ps), path);
}

void PrimeSequence::to_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw resource_error("cannot open prime file for writing: " + path);
    out << "# generalized primes: " << label << "\n";
    for (double p : primes) out << CsvWriter::format(p) << "\n";
}

int moebius(const GenInteger& n) {
    for (auto [idx, e] : n.exponents)
        if (e >= 2) return 0;
    return n.exponents.size() % 2 == 0 ? 1 : -1;
}

long divisor_d(const GenInteger& n) {
    long d = 1;
    for (auto [idx, e] : n.exponents) d *= static_cast<long>(e) + 1;
    return d;
}

IntegerStream enumerate_integers(const PrimeSequence& primes, double x_max,
                                 const EnumerationBudget& budget) {
    if (primes.primes.empty()) throw domain_error("enumerate_integers: empty prime sequence");
    if (!(x_max >= 1.0)) throw domain_error("enumerate_integers: x_max must be >= 1");

    struct Node {
        double value;
        uint32_t hi; // highest prime index used; children extend with index >= hi
        std::vector<std::pair<uint32_t, uint32_t>> exponents;
    };
    struct NodeCmp {
        bool operator()(const Node& a, const Node& b) const {
            if (a.value != b.value) return a.value > b.value; // min-heap
            return b.exponents < a.exponents;
        }
    };

    const auto& ps = primes.primes;
    const auto nprimes = static_cast<uint32_t>(ps.size());

    std::priority_queue<Node, std::vector<Node>, NodeCmp> heap;
    heap.push(Node{1.0, 0, {}});

    IntegerStream stream;
    stream.prime_values_ = ps;
    stream.cutoff_ = x_max;

    while (!heap.empty()) {
        Node cur = heap.top();
        heap.pop();
        if (stream.items_.size() >= budget.max_items)
            throw resource_error("enumerate_integers: budget of " +
                                 std::to_string(budget.max_items) +
                                 " items exceeded before reaching cutoff " +
                                 std::to_string(x_max));
        stream.items_.push_back(GenInteger{cur.value, cur.exponents});

        for (uint32_t i = cur.hi; i < nprimes; ++i) {
            const double v = cur.value * ps[i];
            if (v > x_max) {
                // primes are nondecreasing, so later indices only grow
                break;
            }
            Node child;
            child.value = v;
            child.hi = i;
            child.exponents = cur.exponents;
            if (!child.exponents.empty() && child.exponents.back().first == i)
                child.exponents.back().second += 1;
            else
                child.exponents.emplace_back(i, 1u);
            heap.push(std::move(child));
        }
    }

    // Heap order used raw doubles; re-sort with extended-precision refinement
    // so near-coincident values come out in a reproducible order.
    std::stable_sort(stream.items_.begin(), stream.items_.end(),
                     [&ps](const GenInteger& a, const GenInteger& b) {
                         const double scale = std::max(std::abs(a.value), std::abs(b.value));
                         if (std::abs(a.value - b.value) > kTieRel * scale)
                             return a.value < b.value;
                         const Real ea = exact_value(a, ps), eb = exact_value(b, ps);
                         if (ea != eb) return ea < eb;
                         return lex_less(a, b);
                     });

    stream.lambda_prefix_.reserve(stream.items_.size());
    double acc = 0.0;
    for (const auto& it : stream.items_) {
        if (it.exponents.size() == 1) acc += std::log(ps[it.exponents[0].first]);
        stream.lambda_prefix_.push_back(acc);
    }
    return stream;
}

namespace {

// index of first item with value > x
size_t upper_index(const std::vector<GenInteger>& items, double x) {
    return static_cast<size_t>(
        std::upper_bound(items.begin(), items.end(), x,
                         [](double v, const GenInteger& g) { return v < g.value; }) -
        items.begin());
}

size_t lower_index(const std::vector<GenInteger>& items, double x) {
    return static_cast<size_t>(
        std::lower_bound(items.begin(), items.end(), x,
                         [](const GenInteger& g, double v) { return g.value < v; }) -
        items.begin());
}

} // namespace

long IntegerStream::count_N(double x) const {
    if (x > cutoff_) throw domain_error("count_N: query beyond stream cutoff");
    return static_cast<long>(upper_index(items_, x));
}

long IntegerStream::chi(double x, double lambda) const {
    if (lambda < 0.0) throw domain_error("chi: lambda must be >= 0");
    if (x + lambda > cutoff_) throw domain_error("chi: window [x-l, x+l] exceeds stream cutoff");
    return static_cast<long>(upper_index(items_, x + lambda) - lower_index(items_, x - lambda));
}

double IntegerStream::chebyshev_psi(double x) const {
    if (x > cutoff_) throw domain_error("chebyshev_psi: query beyond stream cutoff");
    const size_t idx = upper_index(items_, x);
    return idx == 0 ? 0.0 : lambda_prefix_[idx - 1];
}

double IntegerStream::divisor_moment(double x, int j) const {
    if (j < 1) throw domain_error("divisor_moment: j must be >= 1");
    if (x > cutoff_) throw domain_error("divisor_moment: query beyond stream cutoff");
    const size_t idx = upper_index(items_, x);
    double s = 0.0;
    for (size_t k = 0; k < idx; ++k) s += std::pow(static_cast<double>(divisor_d(items_[k])), j);
    return s;
}

double IntegerStream::ramanujan_moment(double x, double p) const {
    if (!(p > 0.0)) throw domain_error("ramanujan_moment: p must be positive");
    if (x + 1.0 > cutoff_)
        throw domain_error("ramanujan_moment: window x+1 exceeds stream cutoff");
    const size_t idx = upper_index(items_, x);
    double s = 0.0;
    for (size_t k = 0; k < idx; ++k)
        s += std::pow(static_cast<double>(chi(items_[k].value, 1.0)), p);
    return s;
}

WellBehavedCertificate IntegerStream::fit_certificate(double theta) const {
    if (empty()) throw domain_error("fit_certificate: empty stream");
    if (!(theta >= 0.0 && theta < 1.0)) throw domain_error("fit_certificate: theta must be in [0,1)");
    const double lo = std::max(1.0, cutoff_ / 100.0), hi = cutoff_;
    if (!(hi / lo > 1.02)) throw domain_error("fit_certificate: degenerate grid");
    const int npts = 64;
    double sxx = 0.0, sxy = 0.0;
    std::vector<double> xs(npts), ns(npts);
    for (int i = 0; i < npts; ++i) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (npts - 1));
        xs[i] = x;
        ns[i] = static_cast<double>(count_N(x));
        sxx += x * x;
        sxy += x * ns[i];
    }
    WellBehavedCertificate cert;
    cert.theta = theta;
    cert.A = sxy / sxx;
    for (int i = 0; i < npts; ++i)
        cert.K_const = std::max(cert.K_const,
                                std::abs(ns[i] - cert.A * xs[i]) / std::pow(xs[i], theta));
    return cert;
}

bool IntegerStream::contains_value(double x) const {
    const double tol = kTieRel * std::abs(x);
    size_t i = lower_index(items_, x - tol);
    return i < items_.size() && std::abs(items_[i].value - x) <= tol;
}

size_t IntegerStream::memory_bytes() const {
    size_t b = items_.capacity() * sizeof(GenInteger) + lambda_prefix_.capacity() * sizeof(double);
    for (const auto& it : items_)
        b += it.exponents.capacity() * sizeof(std::pair<uint32_t, uint32_t>);
    return b;
}

void IntegerStream::export_csv(const std::string& path) const {
    CsvWriter w(path, {"value", "mu", "d", "Lambda"});
    for (const auto& it : items_) {
        double lam = 0.0;
        if (it.exponents.size() == 1) lam = std::log(prime_values_[it.exponents[0].first]);
        w.row({it.value, static_cast<double>(moebius(it)), static_cast<double>(divisor_d(it)), lam});
    }
}

} // namespace beurling
