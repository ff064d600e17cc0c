#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"
#include "shc/instance.hpp"

namespace shc {

/// Slack subtracted before the ceiling so that e.g. 0.3 * 10 needs 3, not 4.
inline constexpr double kCeilSlack = 1e-9;

/// Same-coloured neighbours a vertex of this degree needs: ceil(rho * deg).
std::size_t required_matches(double rho, std::size_t degree);

/// Neighbours of v sharing its colour (0 when v is uncoloured).
std::size_t matching_neighbours(const Graph& g, const Colouring& c, Vertex v);

/// Uncoloured vertices are never happy. A coloured isolated vertex always is.
bool is_rho_happy(const Graph& g, const Colouring& c, double rho, Vertex v);

/// H_rho: number of rho-happy vertices.
std::size_t happy_count(const Graph& g, const Colouring& c, double rho);

struct HappinessReport {
    std::size_t happy_count = 0;
    double alpha = 0.0;
    double acd = 0.0;
    bool complete = false;
    std::vector<bool> per_vertex;
};

HappinessReport happiness_report(const Instance& inst, const Colouring& c);

/// Fraction of vertices coloured with their community id.
double acd(const Instance& inst, const Colouring& c);

/// |A_c(v) n C_i| / |C_i| for v in community C_i. Throws ParameterError for uncoloured v.
double pi_overlap(const Instance& inst, const Colouring& c, Vertex v);

struct Thresholds {
    double mu = 0.0;
    double xi = 0.0;
    double xi_tilde = 0.0;
    double epsilon = 0.1;

    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

inline constexpr double kDefaultEpsilon = 0.1;

/// q / (p + (k-1) q). Accepts 0 < q <= p <= 1, k >= 2.
double mu(double p, double q, std::size_t k);

/// p / (p + (k-1) q), the large-n limit of xi.
double xi_tilde(double p, double q, std::size_t k);

/// Finite-n threshold
///   max{ min{ ln(((k/n) ln eps + p e + (k-1) q) / (p + (k-1) q)), xi_tilde }, 0 }.
/// A non-positive logarithm argument yields 0.
double xi(std::size_t n, std::size_t k, double p, double q, double epsilon);

Thresholds thresholds(std::size_t n, std::size_t k, double p, double q, double epsilon = kDefaultEpsilon);

/// q (k-1)(e^rho - 1) + p (e^rho - e) < (k/n) ln eps.
bool eq1_holds(std::size_t n, std::size_t k, double p, double q, double rho, double epsilon);

enum class Bucket { BelowMu, MuToXiTilde, AboveXiTilde };

/// [0, mu), [mu, xi_tilde], (xi_tilde, 1].
Bucket rho_bucket(double rho, const Thresholds& t);

std::string_view bucket_name(Bucket b);

/// Lower bound on pi for a vertex of a complete rho-happy colouring:
/// (rho (p + (k-1) q) - q) / (p - q). Unclamped. Throws ParameterError for p == q.
double pi_lower_bound(double rho, double p, double q, std::size_t k);

} // namespace shc
