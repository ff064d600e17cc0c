#include "shc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shc/errors.hpp"

namespace shc {

std::size_t required_matches(double rho, std::size_t degree) {
    const double need = std::ceil(rho * static_cast<double>(degree) - kCeilSlack);
    return need <= 0.0 ? 0 : static_cast<std::size_t>(need);
}

std::size_t matching_neighbours(const Graph& g, const Colouring& c, Vertex v) {
    const Colour own = c[v];
    if (own == kUncoloured)
        return 0;
    std::size_t same = 0;
    for (Vertex u : g.neighbours(v))
        same += c[u] == own;
    return same;
}

bool is_rho_happy(const Graph& g, const Colouring& c, double rho, Vertex v) {
    if (!c.coloured(v))
        return false;
    return matching_neighbours(g, c, v) >= required_matches(rho, g.degree(v));
}

std::size_t happy_count(const Graph& g, const Colouring& c, double rho) {
    std::size_t happy = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        happy += is_rho_happy(g, c, rho, v);
    return happy;
}

HappinessReport happiness_report(const Instance& inst, const Colouring& c) {
    const std::size_t n = inst.num_vertices();
    HappinessReport r;
    r.per_vertex.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        const bool happy = is_rho_happy(inst.graph, c, inst.rho, v);
        r.per_vertex[v] = happy;
        r.happy_count += happy;
    }
    r.alpha = n == 0 ? 0.0 : static_cast<double>(r.happy_count) / static_cast<double>(n);
    r.acd = acd(inst, c);
    // Happy implies coloured, so all-happy is also all-coloured.
    r.complete = r.happy_count == n;
    return r;
}

double acd(const Instance& inst, const Colouring& c) {
    const std::size_t n = inst.num_vertices();
    if (n == 0)
        return 0.0;
    std::size_t agree = 0;
    for (Vertex v = 0; v < n; ++v)
        agree += c.coloured(v) && c[v] == inst.communities[v];
    return static_cast<double>(agree) / static_cast<double>(n);
}

double pi_overlap(const Instance& inst, const Colouring& c, Vertex v) {
    if (!c.coloured(v))
        throw ParameterError("pi undefined for uncoloured vertex " + std::to_string(v));
    const Colour community = inst.communities[v];
    std::size_t members = 0;
    std::size_t agree = 0;
    for (Vertex u = 0; u < inst.num_vertices(); ++u) {
        if (inst.communities[u] != community)
            continue;
        ++members;
        agree += c[u] == c[v];
    }
    return static_cast<double>(agree) / static_cast<double>(members);
}

namespace {

void check_pq(double p, double q, std::size_t k) {
    if (k < 2)
        throw ParameterError("k must be at least 2");
    if (!(p > 0.0 && p <= 1.0))
        throw ParameterError("p must lie in (0, 1]");
    if (!(q > 0.0 && q <= p))
        throw ParameterError("q must lie in (0, p]");
}

double mixed_rate(double p, double q, std::size_t k) { return p + static_cast<double>(k - 1) * q; }

} // namespace

double mu(double p, double q, std::size_t k) {
    check_pq(p, q, k);
    return q / mixed_rate(p, q, k);
}

double xi_tilde(double p, double q, std::size_t k) {
    check_pq(p, q, k);
    return p / mixed_rate(p, q, k);
}

double xi(std::size_t n, std::size_t k, double p, double q, double epsilon) {
    check_pq(p, q, k);
    if (n < 1)
        throw ParameterError("n must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ParameterError("epsilon must lie in (0, 1)");
    const double e = std::numbers::e;
    const double kd = static_cast<double>(k);
    const double numerator = kd / static_cast<double>(n) * std::log(epsilon) + p * e + (kd - 1.0) * q;
    const double limit = xi_tilde(p, q, k);
    if (numerator <= 0.0)
        return 0.0;
    const double finite = std::log(numerator / mixed_rate(p, q, k));
    return std::max(std::min(finite, limit), 0.0);
}

Thresholds thresholds(std::size_t n, std::size_t k, double p, double q, double epsilon) {
    return Thresholds{mu(p, q, k), xi(n, k, p, q, epsilon), xi_tilde(p, q, k), epsilon};
}

bool eq1_holds(std::size_t n, std::size_t k, double p, double q, double rho, double epsilon) {
    const double e = std::numbers::e;
    const double kd = static_cast<double>(k);
    const double lhs = q * (kd - 1.0) * (std::exp(rho) - 1.0) + p * (std::exp(rho) - e);
    const double rhs = kd / static_cast<double>(n) * std::log(epsilon);
    return lhs < rhs;
}

Bucket rho_bucket(double rho, const Thresholds& t) {
    if (rho < t.mu)
        return Bucket::BelowMu;
    if (rho <= t.xi_tilde)
        return Bucket::MuToXiTilde;
    return Bucket::AboveXiTilde;
}

std::string_view bucket_name(Bucket b) {
    switch (b) {
    case Bucket::BelowMu:
        return "below_mu";
    case Bucket::MuToXiTilde:
        return "mu_to_xitilde";
    case Bucket::AboveXiTilde:
        return "above_xitilde";
    }
    return "";
}

double pi_lower_bound(double rho, double p, double q, std::size_t k) {
    if (p == q)
        throw ParameterError("bound undefined for p == q");
    return (rho * mixed_rate(p, q, k) - q) / (p - q);
}

} // namespace shc
